#pragma once

#include <map>
#include <mutex>
#include <random>
#include <string>

#include "oracles.hpp"
#include "sexpand/catalog.hpp"
#include "sexpand/cayley.hpp"
#include "sexpand/expansion.hpp"
#include "sexpand/isomorphism.hpp"
#include "sexpand/liealg.hpp"
#include "sexpand/resonance.hpp"

namespace testing {

inline std::string data_path(const std::string& name) { return std::string(SEXPAND_DATA_DIR) + "/" + name; }

inline sexpand::CayleyTable data_table(const std::string& name) {
  return sexpand::read_table_file(data_path(name + ".tbl"));
}

// Enumerated once per process and order.
inline const sexpand::Catalog& catalog(int order) {
  static std::map<int, sexpand::Catalog> cache;
  static std::mutex mu;
  std::lock_guard lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, sexpand::enumerate(order)).first;
  return it->second;
}

inline const sexpand::Catalog& commutative_catalog(int order) {
  static std::map<int, sexpand::Catalog> cache;
  static std::mutex mu;
  const sexpand::Catalog& all = catalog(order);
  std::lock_guard lock(mu);
  auto it = cache.find(order);
  if (it == cache.end()) it = cache.emplace(order, sexpand::filter_commutative(all)).first;
  return it->second;
}

inline oracle::Cube cube(const sexpand::StructureConstants& g) {
  const auto n = static_cast<std::size_t>(g.dim());
  oracle::Cube c(n, std::vector<std::vector<mpq_class>>(n, std::vector<mpq_class>(n, 0)));
  for (int i = 1; i <= g.dim(); ++i)
    for (int j = 1; j <= g.dim(); ++j)
      for (const auto& t : g.bracket(i, j))
        c[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(j - 1)][static_cast<std::size_t>(t.k - 1)] = t.value;
  return c;
}

inline oracle::Dense dense(const sexpand::MetricMatrix& m) {
  const auto n = static_cast<std::size_t>(m.dim());
  oracle::Dense d(n, std::vector<mpq_class>(n));
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) d[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j);
  return d;
}

inline std::vector<oracle::Pair> as_pairs(const std::vector<sexpand::ResonantPair>& rs) {
  std::vector<oracle::Pair> out;
  for (const auto& p : rs) out.push_back({p.s0.members(), p.s1.members()});
  std::sort(out.begin(), out.end());
  return out;
}

inline sexpand::Permutation random_permutation(int n, std::mt19937& rng) {
  std::vector<int> v(static_cast<std::size_t>(n));
  std::iota(v.begin(), v.end(), 1);
  std::shuffle(v.begin(), v.end(), rng);
  return sexpand::Permutation(v);
}

// The order-5 table printed as #770.
inline sexpand::CayleyTable s770() {
  return sexpand::CayleyTable({{1, 1, 1, 1, 1}, {1, 2, 1, 1, 5}, {1, 1, 3, 4, 1}, {1, 1, 4, 3, 1}, {1, 5, 1, 1, 2}});
}

// The order-4 table printed as #42.
inline sexpand::CayleyTable t42() {
  return sexpand::CayleyTable({{1, 1, 1, 1}, {1, 1, 1, 2}, {1, 1, 1, 3}, {1, 2, 3, 4}});
}

}  // namespace testing
