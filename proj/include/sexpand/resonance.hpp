#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

#include "sexpand/cayley.hpp"

namespace sexpand {

class Permutation;

/// Sorted, duplicate-free subset of 1..n (n <= 64).
class Subset {
 public:
  Subset() = default;
  /// Members may come in any order; duplicates are dropped.
  Subset(int n, std::vector<int> members);
  Subset(int n, std::initializer_list<int> members) : Subset(n, std::vector<int>(members)) {}
  static Subset from_mask(int n, std::uint64_t mask);
  static Subset full(int n);

  int ambient() const noexcept { return n_; }
  const std::vector<int>& members() const noexcept { return members_; }
  int size() const noexcept { return static_cast<int>(members_.size()); }
  bool empty() const noexcept { return members_.empty(); }
  bool contains(int x) const { return x >= 1 && x <= n_ && ((mask_ >> (x - 1)) & 1u); }
  std::uint64_t mask() const noexcept { return mask_; }

  friend bool operator==(const Subset& a, const Subset& b) { return a.n_ == b.n_ && a.mask_ == b.mask_; }
  /// Lexicographic on the member lists.
  friend bool operator<(const Subset& a, const Subset& b) { return a.members_ < b.members_; }

 private:
  int n_ = 0;
  std::vector<int> members_;
  std::uint64_t mask_ = 0;
};

/// "1 3 4".
std::string to_string(const Subset& s);
/// Parses "1,3,4" or "1 3 4" or "{1,3,4}".
Subset parse_subset(int n, const std::string& text);
/// Elementwise image.
Subset image(const Permutation& sigma, const Subset& s);

struct ResonantPair {
  Subset s0;
  Subset s1;
  friend bool operator==(const ResonantPair&, const ResonantPair&) = default;
  friend bool operator<(const ResonantPair& a, const ResonantPair& b) {
    if (a.s0.size() != b.s0.size()) return a.s0.size() < b.s0.size();
    if (a.s1.size() != b.s1.size()) return a.s1.size() < b.s1.size();
    if (!(a.s0 == b.s0)) return a.s0 < b.s0;
    return a.s1 < b.s1;
  }
};

/// All size-k subsets of 1..n in lexicographic order.
std::vector<Subset> subsets(int n, int k);

bool fills_space(const ResonantPair& p);

/// s0·s0 ⊆ s0, s0·s1 ⊆ s1, s1·s0 ⊆ s1, s1·s1 ⊆ s0, and s0 ∪ s1 covers the table.
bool is_resonant(const CayleyTable& t, const ResonantPair& p);

/// Resonant pairs with |s0| = k0 and |s1| = k1, ordered by (s0, s1).
/// Requires 1 <= k0, k1 <= n-1; throws std::invalid_argument otherwise.
std::vector<ResonantPair> find_resonances(const CayleyTable& t, int k0, int k1);

/// Every resonant pair with part sizes in 1..n-1: by (k0, k1), then (s0, s1).
std::vector<ResonantPair> find_all_resonances(const CayleyTable& t);

}  // namespace sexpand
