#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace sexpand::cli {

/// Runs one invocation (arguments without the program name). Results go to
/// `out`, diagnostics to `err`. Returns 0 on success, 1 on a domain or input
/// error, 2 on a usage error.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace sexpand::cli
