#include "sexpand/resonance.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "sexpand/isomorphism.hpp"

namespace sexpand {

Subset::Subset(int n, std::vector<int> members) : n_(n) {
  if (n < 0 || n > 64) throw std::invalid_argument("subset ambient size must be in 0..64");
  for (int x : members) {
    if (x < 1 || x > n) throw std::invalid_argument("subset element " + std::to_string(x) + " outside 1.." + std::to_string(n));
    mask_ |= std::uint64_t{1} << (x - 1);
  }
  for (int x = 1; x <= n; ++x)
    if (contains(x)) members_.push_back(x);
}

Subset Subset::from_mask(int n, std::uint64_t mask) {
  std::vector<int> members;
  for (int x = 1; x <= n; ++x)
    if ((mask >> (x - 1)) & 1u) members.push_back(x);
  return Subset(n, std::move(members));
}

Subset Subset::full(int n) {
  return from_mask(n, n == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1);
}

std::string to_string(const Subset& s) {
  std::string out;
  for (int x : s.members()) {
    if (!out.empty()) out += ' ';
    out += std::to_string(x);
  }
  return out;
}

Subset parse_subset(int n, const std::string& text) {
  std::string cleaned;
  for (char c : text) cleaned += (c == '{' || c == '}' || c == ',') ? ' ' : c;
  std::istringstream in(cleaned);
  std::vector<int> members;
  int v = 0;
  while (in >> v) members.push_back(v);
  if (!in.eof()) throw std::invalid_argument("malformed subset: " + text);
  return Subset(n, std::move(members));
}

Subset image(const Permutation& sigma, const Subset& s) {
  std::vector<int> out;
  for (int x : s.members()) out.push_back(sigma(x));
  return Subset(s.ambient(), std::move(out));
}

std::vector<Subset> subsets(int n, int k) {
  if (n < 0 || n > 64 || k < 0 || k > n) throw std::invalid_argument("subsets requires 0 <= k <= n <= 64");
  std::vector<Subset> out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    out.emplace_back(n, pick);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int j = i + 1; j < k; ++j) pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
  }
  return out;
}

bool fills_space(const ResonantPair& p) {
  if (p.s0.ambient() != p.s1.ambient()) throw std::invalid_argument("subsets live in different ambient sets");
  return (p.s0.mask() | p.s1.mask()) == Subset::full(p.s0.ambient()).mask();
}

namespace {

// Bitmask of all products x·y with x in `left`, y in `right`.
std::uint64_t products(const CayleyTable& t, std::uint64_t left, std::uint64_t right) {
  std::uint64_t out = 0;
  for (std::uint64_t l = left; l; l &= l - 1) {
    const int x = std::countr_zero(l) + 1;
    for (std::uint64_t r = right; r; r &= r - 1) out |= std::uint64_t{1} << (t.at(x, std::countr_zero(r) + 1) - 1);
  }
  return out;
}

bool resonant_masks(const CayleyTable& t, std::uint64_t s0, std::uint64_t s1) {
  auto inside = [](std::uint64_t what, std::uint64_t where) { return (what & ~where) == 0; };
  return inside(products(t, s0, s0), s0) && inside(products(t, s0, s1), s1) &&
         inside(products(t, s1, s0), s1) && inside(products(t, s1, s1), s0);
}

std::vector<ResonantPair> resonances_of_size(const CayleyTable& t, int k0, int k1) {
  const int n = t.order();
  const std::uint64_t all = Subset::full(n).mask();
  const auto firsts = subsets(n, k0);
  const auto seconds = subsets(n, k1);
  std::vector<ResonantPair> out;
  for (const auto& s0 : firsts)
    for (const auto& s1 : seconds)
      if ((s0.mask() | s1.mask()) == all && resonant_masks(t, s0.mask(), s1.mask())) out.push_back({s0, s1});
  return out;
}

}  // namespace

bool is_resonant(const CayleyTable& t, const ResonantPair& p) {
  if (p.s0.ambient() != t.order() || p.s1.ambient() != t.order())
    throw std::invalid_argument("resonant pair does not match the table order");
  return fills_space(p) && resonant_masks(t, p.s0.mask(), p.s1.mask());
}

std::vector<ResonantPair> find_resonances(const CayleyTable& t, int k0, int k1) {
  const int n = t.order();
  if (k0 < 1 || k0 > n - 1 || k1 < 1 || k1 > n - 1)
    throw std::invalid_argument("resonance part sizes must lie in 1.." + std::to_string(n - 1));
  if (!is_associative(t)) throw DomainError("resonances are only defined for associative tables");
  return resonances_of_size(t, k0, k1);
}

std::vector<ResonantPair> find_all_resonances(const CayleyTable& t) {
  if (!is_associative(t)) throw DomainError("resonances are only defined for associative tables");
  std::vector<ResonantPair> out;
  for (int k0 = 1; k0 < t.order(); ++k0)
    for (int k1 = 1; k1 < t.order(); ++k1) {
      auto part = resonances_of_size(t, k0, k1);
      out.insert(out.end(), part.begin(), part.end());
    }
  return out;
}

}  // namespace sexpand
