#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "sexpand/cayley.hpp"
#include "sexpand/liealg.hpp"
#include "sexpand/resonance.hpp"

namespace sexpand {

enum class ExpansionMode { full, resonant, reduced, resonant_reduced };

/// "full", "res", "red", "resred".
std::string to_string(ExpansionMode m);
ExpansionMode parse_mode(const std::string& text);

/// Generator X_(i,a) = X_i λ_a of an expansion.
struct DoubleIndex {
  int i;
  int a;
  friend auto operator<=>(const DoubleIndex&, const DoubleIndex&) = default;
};

/// An empty retained set; only degenerate inputs produce one.
class DegenerateExpansion : public DomainError {
 public:
  using DomainError::DomainError;
};

/// S ⊗ G or one of its resonant / 0_S-reduced sectors.
///
/// `retained` is sorted by the flattened index p = (i-1)*m + a. The effective
/// structure constants over the retained generators are built (and, for the
/// resonant sector, closure-checked) at construction.
class ExpandedAlgebra {
 public:
  int base_dim() const noexcept { return source_.dim(); }
  int sg_order() const noexcept { return table_.order(); }
  int dim() const noexcept { return static_cast<int>(retained_.size()); }
  const StructureConstants& source() const noexcept { return source_; }
  const CayleyTable& table() const noexcept { return table_; }
  const std::vector<DoubleIndex>& retained() const noexcept { return retained_; }
  ExpansionMode mode() const noexcept { return mode_; }
  const std::optional<ResonantPair>& resonance() const noexcept { return resonance_; }
  const std::optional<SubspaceDecomposition>& grading() const noexcept { return grading_; }
  const std::optional<int>& zero() const noexcept { return zero_; }

  /// p = (i-1)*m + a.
  int flat_index(DoubleIndex x) const { return (x.i - 1) * sg_order() + x.a; }
  /// 1-based position of x among the retained generators, or 0.
  int position(DoubleIndex x) const;

  const StructureConstants& constants() const noexcept { return constants_; }

 private:
  friend ExpandedAlgebra expand(const StructureConstants&, const CayleyTable&);
  friend ExpandedAlgebra resonant_subalgebra(const ExpandedAlgebra&, const ResonantPair&, const SubspaceDecomposition&);
  friend ExpandedAlgebra zero_reduce(const ExpandedAlgebra&);

  void build();

  StructureConstants source_;
  CayleyTable table_;
  std::vector<DoubleIndex> retained_;
  ExpansionMode mode_ = ExpansionMode::full;
  std::optional<ResonantPair> resonance_;
  std::optional<SubspaceDecomposition> grading_;
  std::optional<int> zero_;
  std::vector<int> position_;  // by flat index
  StructureConstants constants_;
};

/// Full expansion: [X_(i,a), X_(j,b)] = C_ij^k X_(k, a·b). Throws DomainError
/// unless `t` is associative and commutative and `g` satisfies Jacobi.
ExpandedAlgebra expand(const StructureConstants& g, const CayleyTable& t);

/// (S0 ⊗ V0) ⊕ (S1 ⊗ V1) of a full expansion. Throws DomainError if `e` is
/// not full, `p` is not resonant, or `d` is not a grading of the source.
ExpandedAlgebra resonant_subalgebra(const ExpandedAlgebra& e, const ResonantPair& p, const SubspaceDecomposition& d);

/// Drops the generators X_(i,z) for the zero z. Throws DomainError if the
/// table has no zero or `e` is already reduced, DegenerateExpansion if nothing
/// is left.
ExpandedAlgebra zero_reduce(const ExpandedAlgebra& e);

/// Structure constants re-indexed to 1..dim in the order of `retained`.
const StructureConstants& effective_constants(const ExpandedAlgebra& e);

/// Killing metric of the effective constants.
MetricMatrix kc_metric(const ExpandedAlgebra& e);

enum class RenderWhat { commutators, constants, metric, adjoint };
RenderWhat parse_render_what(const std::string& text);  // commut | sc | metric | adjoint

std::string render(const ExpandedAlgebra& e, RenderWhat what);

nlohmann::json to_json(const ExpandedAlgebra& e);

}  // namespace sexpand
