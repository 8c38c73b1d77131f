#include "sexpand/expansion.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace sexpand {

std::string to_string(ExpansionMode m) {
  switch (m) {
    case ExpansionMode::full: return "full";
    case ExpansionMode::resonant: return "res";
    case ExpansionMode::reduced: return "red";
    case ExpansionMode::resonant_reduced: return "resred";
  }
  return "?";
}

ExpansionMode parse_mode(const std::string& text) {
  if (text == "full") return ExpansionMode::full;
  if (text == "res" || text == "resonant") return ExpansionMode::resonant;
  if (text == "red" || text == "reduced") return ExpansionMode::reduced;
  if (text == "resred" || text == "resonant_reduced") return ExpansionMode::resonant_reduced;
  throw std::invalid_argument("unknown mode '" + text + "' (expected full, res, red or resred)");
}

int ExpandedAlgebra::position(DoubleIndex x) const {
  if (x.i < 1 || x.i > base_dim() || x.a < 1 || x.a > sg_order()) return 0;
  return position_[static_cast<std::size_t>(flat_index(x))];
}

void ExpandedAlgebra::build() {
  if (retained_.empty()) throw DegenerateExpansion("the expansion retains no generators");
  position_.assign(static_cast<std::size_t>(base_dim() * sg_order()) + 1, 0);
  for (std::size_t p = 0; p < retained_.size(); ++p)
    position_[static_cast<std::size_t>(flat_index(retained_[p]))] = static_cast<int>(p) + 1;
  constants_ = StructureConstants(dim());
  for (int u = 1; u <= dim(); ++u)
    for (int v = u + 1; v <= dim(); ++v) {
      const DoubleIndex x = retained_[static_cast<std::size_t>(u - 1)], y = retained_[static_cast<std::size_t>(v - 1)];
      const int c = table_.at(x.a, y.a);
      for (const auto& t : source_.bracket(x.i, y.i)) {
        const int w = position({t.k, c});
        if (w != 0) {
          constants_.set_bracket(u, v, w, t.value);
        } else if (!(zero_ && c == *zero_)) {
          throw std::logic_error("bracket of retained generators leaves the retained sector");
        }
      }
    }
}

ExpandedAlgebra expand(const StructureConstants& g, const CayleyTable& t) {
  if (!is_associative(t)) throw DomainError("expansion requires an associative table");
  if (!is_commutative(t)) throw DomainError("expansion requires a commutative semigroup");
  if (jacobi_defect(g) != 0) throw DomainError("structure constants violate the Jacobi identity");
  ExpandedAlgebra e;
  e.source_ = g;
  e.table_ = t.with_id(std::nullopt);
  e.mode_ = ExpansionMode::full;
  for (int i = 1; i <= g.dim(); ++i)
    for (int a = 1; a <= t.order(); ++a) e.retained_.push_back({i, a});
  e.build();
  return e;
}

ExpandedAlgebra resonant_subalgebra(const ExpandedAlgebra& e, const ResonantPair& p, const SubspaceDecomposition& d) {
  if (e.mode() != ExpansionMode::full) throw DomainError("resonant subalgebras are taken from the full expansion");
  if (p.s0.ambient() != e.sg_order() || !is_resonant(e.table(), p))
    throw DomainError("the given pair is not a resonant decomposition of the semigroup");
  if (d.v0.ambient() != e.base_dim() || !check_subspace_structure(e.source(), d))
    throw DomainError("the given grading is not a subspace structure of the algebra");
  ExpandedAlgebra r;
  r.source_ = e.source_;
  r.table_ = e.table_;
  r.mode_ = ExpansionMode::resonant;
  r.resonance_ = p;
  r.grading_ = d;
  for (const auto& x : e.retained())
    if ((p.s0.contains(x.a) && d.v0.contains(x.i)) || (p.s1.contains(x.a) && d.v1.contains(x.i)))
      r.retained_.push_back(x);
  r.build();
  return r;
}

ExpandedAlgebra zero_reduce(const ExpandedAlgebra& e) {
  if (e.mode() == ExpansionMode::reduced || e.mode() == ExpansionMode::resonant_reduced)
    throw DomainError("the algebra is already 0_S-reduced");
  const auto z = find_zero(e.table());
  if (!z) throw DomainError("the semigroup has no zero element");
  ExpandedAlgebra r;
  r.source_ = e.source_;
  r.table_ = e.table_;
  r.mode_ = e.mode() == ExpansionMode::full ? ExpansionMode::reduced : ExpansionMode::resonant_reduced;
  r.resonance_ = e.resonance_;
  r.grading_ = e.grading_;
  r.zero_ = z;
  for (const auto& x : e.retained())
    if (x.a != *z) r.retained_.push_back(x);
  r.build();
  return r;
}

const StructureConstants& effective_constants(const ExpandedAlgebra& e) { return e.constants(); }

MetricMatrix kc_metric(const ExpandedAlgebra& e) { return killing_metric(e.constants()); }

RenderWhat parse_render_what(const std::string& text) {
  if (text == "commut" || text == "commutators") return RenderWhat::commutators;
  if (text == "sc" || text == "constants") return RenderWhat::constants;
  if (text == "metric") return RenderWhat::metric;
  if (text == "adjoint") return RenderWhat::adjoint;
  throw std::invalid_argument("unknown listing '" + text + "' (expected commut, sc, metric or adjoint)");
}

namespace {

std::string title(ExpansionMode m) {
  switch (m) {
    case ExpansionMode::full: return "Expanded algebra";
    case ExpansionMode::resonant: return "Resonant Subalgebra";
    case ExpansionMode::reduced: return "Reduced algebra";
    case ExpansionMode::resonant_reduced: return "Reduction of the Resonant Subalgebra";
  }
  return "";
}

std::string label(DoubleIndex x) { return std::to_string(x.i) + "," + std::to_string(x.a); }

// "= -2" / "=  2", the sign column of the listings.
std::string signed_value(const Rational& v) { return (v < 0 ? "= " : "=  ") + to_string(v); }

void commutators(std::ostream& os, const ExpandedAlgebra& e) {
  const std::string name = title(e.mode());
  os << "Non vanishing commutators of the '" << name << "'\n\n";
  os << "n = " << e.base_dim() << " , Dimension of the original Lie algebra.\n";
  os << "m = " << e.sg_order() << " , Order of the semigroup.\n\n";
  os << "With the notation: X_{i,a}= X_{i} lambda_{a}, the generators of the\n";
  os << "'" << name << "' are given by:\n";
  std::size_t width = 0;
  for (const auto& x : e.retained()) width = std::max(width, ("Y_{" + std::to_string(e.flat_index(x)) + "}").size());
  for (const auto& x : e.retained()) {
    os << ' ' << std::left << std::setw(static_cast<int>(width)) << "Y_{" + std::to_string(e.flat_index(x)) + "}"
       << std::right << " =  X_{" << label(x) << "}\n";
  }
  os << "\nThe non vanishing commutators of the '" << name << "' are given by:\n";
  const auto& c = e.constants();
  for (int u = 1; u <= e.dim(); ++u)
    for (int v = u + 1; v <= e.dim(); ++v)
      for (const auto& t : c.bracket(u, v))
        os << " [ X_{" << label(e.retained()[static_cast<std::size_t>(u - 1)]) << "} , X_{"
           << label(e.retained()[static_cast<std::size_t>(v - 1)]) << "} ] " << signed_value(t.value) << " X_{"
           << label(e.retained()[static_cast<std::size_t>(t.k - 1)]) << "}\n";
}

void constants(std::ostream& os, const ExpandedAlgebra& e) {
  os << "Non vanishing structure constants of the '" << title(e.mode()) << "' are given by:\n";
  const auto& c = e.constants();
  for (int u = 1; u <= e.dim(); ++u)
    for (int v = u + 1; v <= e.dim(); ++v)
      for (const auto& t : c.bracket(u, v))
        os << " C_{(" << label(e.retained()[static_cast<std::size_t>(u - 1)]) << ")("
           << label(e.retained()[static_cast<std::size_t>(v - 1)]) << ")}^{("
           << label(e.retained()[static_cast<std::size_t>(t.k - 1)]) << ")} " << signed_value(t.value) << '\n';
}

void metric(std::ostream& os, const ExpandedAlgebra& e) {
  const MetricMatrix g = kc_metric(e);
  os << "The Killing-Cartan Metric of the " << title(e.mode()) << " is:\n\n" << g;
  os << "\nThe determinant of the Killing-Cartan Metric of the " << title(e.mode()) << " is:\n"
     << to_string(determinant(g)) << '\n';
}

void adjoint(std::ostream& os, const ExpandedAlgebra& e) {
  os << "NOTATION for the " << title(e.mode()) << ":\n\n";
  os << "To print the structure constants notice that for (i,a) fixed,\n"
     << "the quantities C_{(i,a)(j,b)}^{(k,c)}=M_{A,B} are elements\n"
     << "of a matrix M whose indices have the following values:\n";
  std::string flat, pairs;
  for (const auto& x : e.retained()) {
    flat += (flat.empty() ? "" : ", ") + std::to_string(e.flat_index(x));
    pairs += (pairs.empty() ? "(" : ", (") + label(x) + ")";
  }
  os << "A,B = " << flat << "\nOr equivalently,\nA,B = " << pairs << '\n';
  const auto& c = e.constants();
  std::size_t width = 1;
  for (int u = 1; u <= e.dim(); ++u)
    for (int v = 1; v <= e.dim(); ++v)
      for (const auto& t : c.bracket(u, v)) width = std::max(width, to_string(t.value).size());
  for (int u = 1; u <= e.dim(); ++u) {
    const DoubleIndex& x = e.retained()[static_cast<std::size_t>(u - 1)];
    if (u == 1 || e.retained()[static_cast<std::size_t>(u - 2)].i != x.i)
      os << "\nHere we print the matrices C_{(" << x.i << ",a) (j,b)}^{(k,c)}, with the double indices\n"
         << "having the values described above.\n";
    os << "******\nC_{(" << label(x) << ") (j,b)}^{(k,c)}\n";
    for (int v = 1; v <= e.dim(); ++v) {
      for (int w = 1; w <= e.dim(); ++w) os << ' ' << std::setw(static_cast<int>(width)) << to_string(c(u, v, w));
      os << '\n';
    }
  }
}

}  // namespace

std::string render(const ExpandedAlgebra& e, RenderWhat what) {
  if (e.dim() == 0) return "";
  std::ostringstream os;
  switch (what) {
    case RenderWhat::commutators: commutators(os, e); break;
    case RenderWhat::constants: constants(os, e); break;
    case RenderWhat::metric: metric(os, e); break;
    case RenderWhat::adjoint: adjoint(os, e); break;
  }
  return os.str();
}

nlohmann::json to_json(const ExpandedAlgebra& e) {
  nlohmann::json generators = nlohmann::json::array();
  for (const auto& x : e.retained()) generators.push_back({{"i", x.i}, {"a", x.a}, {"flat", e.flat_index(x)}});
  const MetricMatrix g = kc_metric(e);
  nlohmann::json out = {{"mode", to_string(e.mode())},
                        {"base_dim", e.base_dim()},
                        {"order", e.sg_order()},
                        {"generators", generators},
                        {"constants", to_json(e.constants())},
                        {"metric", to_json(g)},
                        {"determinant", to_string(determinant(g))}};
  if (e.zero()) out["zero"] = *e.zero();
  if (e.resonance()) out["resonance"] = {{"S0", e.resonance()->s0.members()}, {"S1", e.resonance()->s1.members()}};
  if (e.grading()) out["grading"] = {{"V0", e.grading()->v0.members()}, {"V1", e.grading()->v1.members()}};
  return out;
}

}  // namespace sexpand
