#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sexpand/cayley.hpp"

namespace sexpand {

/// Bijection on 1..n, written (σ(1) σ(2) ... σ(n)): "replace 1 by σ(1), ...".
class Permutation {
 public:
  Permutation() = default;
  /// Throws std::invalid_argument unless `image` is a bijection on 1..n.
  explicit Permutation(std::vector<int> image);
  static Permutation identity(int n);

  int size() const noexcept { return static_cast<int>(image_.size()); }
  int operator()(int alpha) const { return image_[static_cast<std::size_t>(alpha - 1)]; }
  const std::vector<int>& image() const noexcept { return image_; }
  bool is_identity() const;

  Permutation inverse() const;
  /// (p * q)(x) = p(q(x)).
  friend Permutation operator*(const Permutation& p, const Permutation& q);
  friend bool operator==(const Permutation&, const Permutation&) = default;
  friend auto operator<=>(const Permutation& a, const Permutation& b) { return a.image_ <=> b.image_; }

 private:
  std::vector<int> image_;
};

/// "(4 1 3 2)".
std::string to_string(const Permutation& p);
Permutation parse_permutation(const std::string& text);

/// All n! permutations in lexicographic order of their image arrays, 1 <= n <= 8.
std::vector<Permutation> all_permutations(int n);
Permutation inverse(const Permutation& p);

/// b with b[σ(a)][σ(c)] = σ(t[a][c]).
CayleyTable permute_table(const CayleyTable& t, const Permutation& sigma);
/// b with b[σ(a)][σ(c)] = σ(t[c][a]): an isomorphism applied to the transpose.
CayleyTable anti_permute_table(const CayleyTable& t, const Permutation& sigma);

/// Lexicographically first σ with permute_table(a, σ) == b.
std::optional<Permutation> find_isomorphism(const CayleyTable& a, const CayleyTable& b);
/// Every such σ, in lexicographic order.
std::vector<Permutation> find_all_isomorphisms(const CayleyTable& a, const CayleyTable& b);
/// Lexicographically first σ with anti_permute_table(a, σ) == b.
std::optional<Permutation> find_anti_isomorphism(const CayleyTable& a, const CayleyTable& b);
std::vector<Permutation> find_all_anti_isomorphisms(const CayleyTable& a, const CayleyTable& b);

/// Lexicographically least row-major table in the isomorphism class of `t`
/// (and of its transpose when `include_anti`). The id is not carried over.
CayleyTable canonical_form(const CayleyTable& t, bool include_anti);

}  // namespace sexpand
