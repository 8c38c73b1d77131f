#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sexpand/cayley.hpp"
#include "sexpand/rational.hpp"
#include "sexpand/resonance.hpp"

namespace sexpand {

/// One nonzero term C_ij^k of a bracket [X_i, X_j].
struct BracketTerm {
  int k;
  Rational value;
  friend bool operator==(const BracketTerm&, const BracketTerm&) = default;
};

/// Structure constants C_ij^k of an n-dimensional algebra, indices 1..n.
///
/// Stored sparsely per ordered pair; every write also sets the antisymmetric
/// partner, so C_ij^k = -C_ji^k holds by construction.
class StructureConstants {
 public:
  StructureConstants() = default;
  explicit StructureConstants(int dim);

  int dim() const noexcept { return dim_; }
  /// Sets C_ij^k = value and C_ji^k = -value. Throws std::invalid_argument on
  /// out-of-range indices or a nonzero value with i == j.
  void set_bracket(int i, int j, int k, const Rational& value);
  Rational operator()(int i, int j, int k) const;
  /// Nonzero terms of [X_i, X_j], sorted by k.
  const std::vector<BracketTerm>& bracket(int i, int j) const {
    return terms_[static_cast<std::size_t>((i - 1) * dim_ + (j - 1))];
  }
  bool is_zero() const;

  friend bool operator==(const StructureConstants&, const StructureConstants&) = default;

 private:
  std::vector<BracketTerm>& slot(int i, int j) { return terms_[static_cast<std::size_t>((i - 1) * dim_ + (j - 1))]; }

  int dim_ = 0;
  std::vector<std::vector<BracketTerm>> terms_;
};

/// Largest |[[X_i,X_j],X_k] + cyclic| coefficient; zero iff Jacobi holds.
Rational jacobi_defect(const StructureConstants& g);

/// g_ij = sum_{k,l} C_ik^l C_jl^k. Throws DomainError unless Jacobi holds.
MetricMatrix killing_metric(const StructureConstants& g);

/// Exact determinant by fraction-free (Bareiss) elimination.
Rational determinant(const MetricMatrix& m);

struct EigenSignature {
  int n_pos = 0;
  int n_neg = 0;
  int n_zero = 0;
  friend bool operator==(const EigenSignature&, const EigenSignature&) = default;
};

constexpr double kDefaultTolerance = 1e-9;

/// Sign counts of the spectrum of a symmetric matrix. Eigenvalues with
/// |λ| <= tau * max|entry| count as zero. Throws std::invalid_argument if `m`
/// is not symmetric.
EigenSignature eigen_signature(const MetricMatrix& m, double tau = kDefaultTolerance);
std::string to_string(const EigenSignature& s);

bool is_semisimple(const StructureConstants& g);
/// Semisimple with a negative-definite Killing metric.
bool is_compact(const StructureConstants& g, double tau = kDefaultTolerance);
bool is_abelian(const StructureConstants& g);
bool is_solvable(const StructureConstants& g);
bool is_nilpotent(const StructureConstants& g);

/// Z2 grading of the generator indices: a disjoint cover 1..n = V0 ∪ V1.
struct SubspaceDecomposition {
  Subset v0;
  Subset v1;

  /// Throws std::invalid_argument unless v0, v1 partition 1..n.
  SubspaceDecomposition(Subset v0_, Subset v1_);
  int grade(int i) const { return v0.contains(i) ? 0 : 1; }
  friend bool operator==(const SubspaceDecomposition&, const SubspaceDecomposition&) = default;
};

/// [V0,V0] ⊂ V0, [V0,V1] ⊂ V1, [V1,V1] ⊂ V0 at the level of C_ij^k.
bool check_subspace_structure(const StructureConstants& g, const SubspaceDecomposition& d);

/// The n adjoint matrices (C_ij^k with row j, column k), one box per X_i.
std::string show_adjoint(const StructureConstants& g);

/// Built-in algebras by name: sl2, sl2ch (sl2 in the basis h, e, f), so3,
/// solv2 ([X1,X2] = X1), abelian<n>. Throws std::invalid_argument otherwise.
StructureConstants builtin_algebra(const std::string& name);
std::vector<std::string> builtin_algebra_names();
/// Grading used when none is given explicitly (V0 = {1}, V1 = rest for the
/// three-dimensional simple algebras).
std::optional<SubspaceDecomposition> default_grading(const std::string& name);

// Algebra text format: "dim <n>" followed by lines "i j k value" (value may
// be p, p/q or a decimal), one per independent C_ij^k; '#' starts a comment.
StructureConstants parse_algebra(std::istream& in);
StructureConstants read_algebra_file(const std::string& path);
void write_algebra(std::ostream& os, const StructureConstants& g);

/// {"dim": n, "constants": [[i, j, k, "value"], ...]} with i < j.
nlohmann::json to_json(const StructureConstants& g);
nlohmann::json to_json(const MetricMatrix& m);

}  // namespace sexpand
