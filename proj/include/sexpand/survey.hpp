#pragma once

#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sexpand/catalog.hpp"
#include "sexpand/expansion.hpp"
#include "sexpand/liealg.hpp"
#include "sexpand/resonance.hpp"

namespace sexpand {

// The scans below require a commutative catalog and throw DomainError on a
// non-commutative member.

struct ZeroEntry {
  int id;
  int zero;
};
std::vector<ZeroEntry> scan_zero(const Catalog& c);

/// Only semigroups with at least one resonance are listed.
struct ResonanceEntry {
  int id;
  std::vector<ResonantPair> resonances;
};
std::vector<ResonanceEntry> scan_resonances(const Catalog& c);

struct ZeroResonanceEntry {
  int id;
  int zero;
  std::vector<ResonantPair> resonances;
};
std::vector<ZeroResonanceEntry> scan_zero_and_resonance(const Catalog& c);

template <class Entry>
int total_resonances(const std::vector<Entry>& entries) {
  int n = 0;
  for (const auto& e : entries) n += static_cast<int>(e.resonances.size());
  return n;
}

struct ProfileEntry {
  int id;
  EigenSignature signature;
};
/// Eigen signature of the semigroup metric of every member.
std::vector<ProfileEntry> compactness_profile(const Catalog& c, double tau = kDefaultTolerance);

/// One expansion of the census. `resonance_index` is the 1-based position in
/// find_all_resonances for the resonant modes and 0 otherwise.
struct SurveyRow {
  int id = 0;
  ExpansionMode mode = ExpansionMode::full;
  int resonance_index = 0;
  std::optional<std::string> error;  // set when the row failed
  int dim = 0;
  Rational det;
  EigenSignature signature;
  bool semisimple = false;
  bool compact = false;
  bool abelian = false;
  bool solvable = false;
  bool nilpotent = false;

  friend bool operator==(const SurveyRow&, const SurveyRow&) = default;
};

/// Aggregates of one mode, recomputed from the rows.
struct ModeTotals {
  int semigroups = 0;       // distinct ids with a row
  int rows = 0;             // expansions built (resonances, for resonant modes)
  int failed = 0;
  int semisimple_rows = 0;
  int pss = 0;              // ids whose lowest-index row is semisimple
  int pss_any = 0;          // ids with at least one semisimple row
};

struct SurveyReport {
  int order = 0;
  std::string algebra;
  std::vector<ExpansionMode> modes;
  int semigroups = 0;  // commutative members scanned
  int with_zero = 0;
  int with_resonance = 0;
  int resonances = 0;
  std::vector<SurveyRow> rows;  // sorted by (id, mode, resonance_index)

  ModeTotals totals(ExpansionMode m) const;
};

struct CensusOptions {
  std::vector<ExpansionMode> modes{ExpansionMode::full};
  std::string algebra_label = "custom";
  unsigned threads = 1;  // 0: hardware concurrency
  double tau = kDefaultTolerance;
  /// When set, rows are streamed to this CSV file one semigroup at a time.
  std::string csv_path;
  /// Continue an interrupted CSV instead of overwriting it.
  bool resume = false;
};

/// Expands `g` with every commutative member of `c` in each requested mode:
/// one row per semigroup for full, one per semigroup with a zero for red, one
/// per resonance for res, one per resonance of a semigroup with a zero for
/// resred. Row failures are recorded, never thrown. Resonant modes need a
/// grading; throws std::invalid_argument if it is missing and DomainError if
/// it is not a subspace structure of `g`.
SurveyReport census(const StructureConstants& g, const std::optional<SubspaceDecomposition>& grading,
                    const Catalog& c, const CensusOptions& options);

std::vector<ExpansionMode> parse_modes(const std::string& text);  // "full,res,red,resred"

void write_csv_header(std::ostream& os, const SurveyReport& r);
void write_csv_row(std::ostream& os, const SurveyRow& row);
/// Rows and failures of a census CSV (preamble and header are checked by the
/// caller). Throws ParseError on malformed lines.
std::vector<SurveyRow> read_csv_rows(std::istream& in);

nlohmann::json to_json(const SurveyReport& r);
/// Human-readable aggregate table.
std::string summary(const SurveyReport& r);

}  // namespace sexpand
