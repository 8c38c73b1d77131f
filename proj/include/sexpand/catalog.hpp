#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sexpand/cayley.hpp"
#include "sexpand/isomorphism.hpp"

namespace sexpand {

enum class Equivalence { iso_only, iso_and_anti };

std::string to_string(Equivalence e);  // "iso" / "iso-anti"
Equivalence parse_equivalence(const std::string& text);

/// Representatives of every semigroup class of one order.
///
/// Each stored table is the canonical form of its class (lexicographically
/// least row-major relabeling), and the list is sorted by that order. A full
/// enumeration numbers the tables 1..Q; filtered catalogs keep those numbers.
struct Catalog {
  int order = 0;
  Equivalence equivalence = Equivalence::iso_and_anti;
  std::vector<CayleyTable> tables;

  /// Table carrying the given id, or nullptr.
  const CayleyTable* find_id(int id) const;
  friend bool operator==(const Catalog&, const Catalog&) = default;
};

constexpr int kMaxCatalogOrder = 6;

/// Orderly generation of all semigroups of `order` up to the given
/// equivalence. `threads == 0` uses the hardware concurrency. The result does
/// not depend on the thread count.
Catalog enumerate(int order, Equivalence equivalence = Equivalence::iso_and_anti, unsigned threads = 1);

/// Commutative members, original ids preserved.
Catalog filter_commutative(const Catalog& c);

struct LookupResult {
  int id = 0;
  /// Maps the catalog table onto the query: permute_table(catalog[id], witness)
  /// == query, or anti_permute_table(...) when `anti` is set.
  Permutation witness;
  bool anti = false;
};

/// Class of an associative table of the catalog's order. Throws DomainError
/// for non-associative input; nullopt on order mismatch.
std::optional<LookupResult> lookup(const Catalog& c, const CayleyTable& t);

// Text format:
//   semigroup-catalog v1
//   order <n> count <Q> equivalence <iso|iso-anti>
//   id <a>
//   <n rows of n labels>
//   <blank line between records>
void write_catalog(std::ostream& os, const Catalog& c);
Catalog read_catalog(std::istream& in);
void save(const Catalog& c, const std::string& path);
Catalog load(const std::string& path);

nlohmann::json to_json(const Catalog& c);

}  // namespace sexpand
