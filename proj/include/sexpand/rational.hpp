#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>

namespace sexpand {

using BigInt = mpz_class;
using Rational = mpq_class;

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& q);
std::string to_string(const BigInt& z);

/// Accepts "p", "-p", "p/q" and plain decimals such as "-2.0" or "0.5".
/// Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

}  // namespace sexpand
