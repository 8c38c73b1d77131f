#include "sexpand/liealg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace sexpand {

StructureConstants::StructureConstants(int dim) : dim_(dim) {
  if (dim < 0) throw std::invalid_argument("negative algebra dimension");
  terms_.resize(static_cast<std::size_t>(dim) * static_cast<std::size_t>(dim));
}

namespace {

void set_term(std::vector<BracketTerm>& terms, int k, const Rational& value) {
  auto it = std::lower_bound(terms.begin(), terms.end(), k, [](const BracketTerm& t, int key) { return t.k < key; });
  if (it != terms.end() && it->k == k) {
    if (value == 0) terms.erase(it);
    else it->value = value;
  } else if (value != 0) {
    terms.insert(it, BracketTerm{k, value});
  }
}

}  // namespace

void StructureConstants::set_bracket(int i, int j, int k, const Rational& value) {
  for (int x : {i, j, k})
    if (x < 1 || x > dim_)
      throw std::invalid_argument("generator index " + std::to_string(x) + " outside 1.." + std::to_string(dim_));
  if (i == j) {
    if (value != 0) throw std::invalid_argument("C_ii^k must vanish (antisymmetry)");
    return;
  }
  set_term(slot(i, j), k, value);
  set_term(slot(j, i), k, -value);
}

Rational StructureConstants::operator()(int i, int j, int k) const {
  for (const auto& t : bracket(i, j))
    if (t.k == k) return t.value;
  return 0;
}

bool StructureConstants::is_zero() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& v) { return v.empty(); });
}

Rational jacobi_defect(const StructureConstants& g) {
  const int n = g.dim();
  Rational worst = 0;
  std::vector<Rational> acc(static_cast<std::size_t>(n) + 1);
  // [[X_a, X_b], X_c] accumulated into acc.
  auto add_nested = [&](int a, int b, int c) {
    for (const auto& outer : g.bracket(a, b))
      for (const auto& inner : g.bracket(outer.k, c)) acc[static_cast<std::size_t>(inner.k)] += outer.value * inner.value;
  };
  // The cyclic sum is totally antisymmetric, so i < j < k covers every case.
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      for (int k = j + 1; k <= n; ++k) {
        for (auto& v : acc) v = 0;
        add_nested(i, j, k);
        add_nested(j, k, i);
        add_nested(k, i, j);
        for (const auto& v : acc) worst = std::max(worst, Rational(abs(v)));
      }
  return worst;
}

MetricMatrix killing_metric(const StructureConstants& g) {
  if (jacobi_defect(g) != 0) throw DomainError("structure constants violate the Jacobi identity");
  const int n = g.dim();
  MetricMatrix m(n);
  for (int i = 1; i <= n; ++i)
    for (int j = i; j <= n; ++j) {
      Rational sum = 0;
      for (int k = 1; k <= n; ++k)
        for (const auto& t : g.bracket(i, k))
          for (const auto& u : g.bracket(j, t.k))
            if (u.k == k) sum += t.value * u.value;
      m(i - 1, j - 1) = sum;
      m(j - 1, i - 1) = sum;
    }
  return m;
}

Rational determinant(const MetricMatrix& m) {
  const int n = m.dim();
  if (n == 0) return 1;
  std::vector<std::vector<BigInt>> a(static_cast<std::size_t>(n), std::vector<BigInt>(static_cast<std::size_t>(n)));
  BigInt scale = 1;
  for (int i = 0; i < n; ++i) {
    BigInt l = 1;
    for (int j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    for (int j = 0; j < n; ++j) a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = m(i, j).get_num() * (l / m(i, j).get_den());
    scale *= l;
  }
  int sign = 1;
  BigInt prev = 1;
  for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < a.size() && a[r][k] == 0) ++r;
      if (r == a.size()) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < a.size(); ++i) {
      for (std::size_t j = k + 1; j < a.size(); ++j) {
        BigInt v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  Rational det(a.back().back() * sign, scale);
  det.canonicalize();
  return det;
}

EigenSignature eigen_signature(const MetricMatrix& m, double tau) {
  if (!m.is_symmetric()) throw std::invalid_argument("eigen_signature requires a symmetric matrix");
  const int n = m.dim();
  EigenSignature s;
  if (n == 0) return s;
  Eigen::MatrixXd a(n, n);
  double scale = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a(i, j) = m(i, j).get_d();
      scale = std::max(scale, std::abs(a(i, j)));
    }
  if (scale == 0) {
    s.n_zero = n;
    return s;
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::EigenvaluesOnly);
  for (int i = 0; i < n; ++i) {
    const double lambda = solver.eigenvalues()(i);
    if (std::abs(lambda) <= tau * scale) ++s.n_zero;
    else if (lambda > 0) ++s.n_pos;
    else ++s.n_neg;
  }
  return s;
}

std::string to_string(const EigenSignature& s) {
  return "(" + std::to_string(s.n_pos) + " pos, " + std::to_string(s.n_neg) + " neg, " + std::to_string(s.n_zero) +
         " zero)";
}

bool is_semisimple(const StructureConstants& g) { return determinant(killing_metric(g)) != 0; }

bool is_compact(const StructureConstants& g, double tau) {
  const MetricMatrix k = killing_metric(g);
  return determinant(k) != 0 && eigen_signature(k, tau).n_neg == g.dim();
}

bool is_abelian(const StructureConstants& g) { return g.is_zero(); }

namespace {

using Vec = std::vector<Rational>;  // coordinates 1..n stored at 0..n-1

// Reduced row echelon basis grown one vector at a time.
class Echelon {
 public:
  explicit Echelon(int n) : n_(n) {}

  void insert(Vec v) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const auto p = static_cast<std::size_t>(pivots_[r]);
      if (v[p] != 0) {
        const Rational f = v[p];
        for (int j = 0; j < n_; ++j) v[static_cast<std::size_t>(j)] -= f * rows_[r][static_cast<std::size_t>(j)];
      }
    }
    int p = 0;
    while (p < n_ && v[static_cast<std::size_t>(p)] == 0) ++p;
    if (p == n_) return;
    const Rational inv = 1 / v[static_cast<std::size_t>(p)];
    for (auto& x : v) x *= inv;
    for (auto& row : rows_)
      if (row[static_cast<std::size_t>(p)] != 0) {
        const Rational f = row[static_cast<std::size_t>(p)];
        for (int j = 0; j < n_; ++j) row[static_cast<std::size_t>(j)] -= f * v[static_cast<std::size_t>(j)];
      }
    rows_.push_back(std::move(v));
    pivots_.push_back(p);
  }

  int rank() const { return static_cast<int>(rows_.size()); }
  const std::vector<Vec>& rows() const { return rows_; }

 private:
  int n_;
  std::vector<Vec> rows_;
  std::vector<int> pivots_;
};

Vec bracket(const StructureConstants& g, const Vec& x, const Vec& y) {
  const int n = g.dim();
  Vec out(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    if (x[static_cast<std::size_t>(i - 1)] == 0) continue;
    for (int j = 1; j <= n; ++j) {
      if (y[static_cast<std::size_t>(j - 1)] == 0) continue;
      const Rational xy = x[static_cast<std::size_t>(i - 1)] * y[static_cast<std::size_t>(j - 1)];
      for (const auto& t : g.bracket(i, j)) out[static_cast<std::size_t>(t.k - 1)] += xy * t.value;
    }
  }
  return out;
}

std::vector<Vec> unit_basis(int n) {
  std::vector<Vec> basis(static_cast<std::size_t>(n), Vec(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) basis[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
  return basis;
}

// Iterates term -> span{[a, b] : a in left(term), b in term} until the span
// vanishes (true) or stops shrinking (false).
template <class Left>
bool series_vanishes(const StructureConstants& g, Left left) {
  std::vector<Vec> current = unit_basis(g.dim());
  while (!current.empty()) {
    Echelon next(g.dim());
    const auto& lhs = left(current);
    for (const auto& a : lhs) {
      for (const auto& b : current) {
        next.insert(bracket(g, a, b));
        if (next.rank() == static_cast<int>(current.size())) return false;
      }
    }
    current = next.rows();
  }
  return true;
}

}  // namespace

bool is_solvable(const StructureConstants& g) {
  return series_vanishes(g, [](const std::vector<Vec>& term) -> const std::vector<Vec>& { return term; });
}

bool is_nilpotent(const StructureConstants& g) {
  const std::vector<Vec> whole = unit_basis(g.dim());
  return series_vanishes(g, [&](const std::vector<Vec>&) -> const std::vector<Vec>& { return whole; });
}

SubspaceDecomposition::SubspaceDecomposition(Subset v0_, Subset v1_) : v0(std::move(v0_)), v1(std::move(v1_)) {
  if (v0.ambient() != v1.ambient()) throw std::invalid_argument("V0 and V1 live in different ambient sets");
  if ((v0.mask() & v1.mask()) != 0) throw std::invalid_argument("V0 and V1 must be disjoint");
  if ((v0.mask() | v1.mask()) != Subset::full(v0.ambient()).mask())
    throw std::invalid_argument("V0 and V1 must cover every generator");
}

bool check_subspace_structure(const StructureConstants& g, const SubspaceDecomposition& d) {
  if (d.v0.ambient() != g.dim()) throw std::invalid_argument("grading does not match the algebra dimension");
  for (int i = 1; i <= g.dim(); ++i)
    for (int j = 1; j <= g.dim(); ++j)
      for (const auto& t : g.bracket(i, j))
        if ((d.grade(i) + d.grade(j)) % 2 != d.grade(t.k)) return false;
  return true;
}

std::string show_adjoint(const StructureConstants& g) {
  const int n = g.dim();
  std::size_t width = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      for (const auto& t : g.bracket(i, j)) width = std::max(width, to_string(t.value).size());
  std::ostringstream os;
  os << "For the considered Lie algebra of dimension n, we print the n matrices C_{ij}^{k}=M_{jk}\n"
     << "(with i=1,...,n) which gives the adjoint representation for the elements of the algebra.\n";
  for (int i = 1; i <= n; ++i) {
    os << "*********\n";
    os << "Adj [ X_{" << i << "} ] = ( C_{" << i << ",j}^{k} ) =\n";
    for (int j = 1; j <= n; ++j) {
      for (int k = 1; k <= n; ++k) os << ' ' << std::setw(static_cast<int>(width)) << to_string(g(i, j, k));
      os << '\n';
    }
  }
  return os.str();
}

StructureConstants builtin_algebra(const std::string& name) {
  if (name == "sl2") {
    StructureConstants g(3);
    g.set_bracket(1, 2, 3, -2);
    g.set_bracket(1, 3, 2, 2);
    g.set_bracket(2, 3, 1, 2);
    return g;
  }
  if (name == "sl2ch") {
    StructureConstants g(3);
    g.set_bracket(1, 2, 2, 2);
    g.set_bracket(1, 3, 3, -2);
    g.set_bracket(2, 3, 1, 1);
    return g;
  }
  if (name == "so3") {
    StructureConstants g(3);
    g.set_bracket(1, 2, 3, 1);
    g.set_bracket(2, 3, 1, 1);
    g.set_bracket(3, 1, 2, 1);
    return g;
  }
  if (name == "solv2") {
    StructureConstants g(2);
    g.set_bracket(1, 2, 1, 1);
    return g;
  }
  if (name.rfind("abelian", 0) == 0 && name.size() > 7 &&
      std::all_of(name.begin() + 7, name.end(), [](unsigned char c) { return std::isdigit(c); })) {
    const int n = std::stoi(name.substr(7));
    if (n >= 1 && n <= 64) return StructureConstants(n);
  }
  throw std::invalid_argument("unknown algebra '" + name + "'");
}

std::vector<std::string> builtin_algebra_names() { return {"sl2", "sl2ch", "so3", "solv2", "abelian<n>"}; }

std::optional<SubspaceDecomposition> default_grading(const std::string& name) {
  if (name == "sl2" || name == "sl2ch" || name == "so3") return SubspaceDecomposition(Subset(3, {1}), Subset(3, {2, 3}));
  return std::nullopt;
}

namespace {

StructureConstants algebra_from_json(const nlohmann::json& j) {
  StructureConstants g(j.at("dim").get<int>());
  for (const auto& row : j.at("constants")) {
    if (!row.is_array() || row.size() != 4) throw std::invalid_argument("constants entries must be [i, j, k, value]");
    const auto& v = row[3];
    const Rational value = v.is_string() ? parse_rational(v.get<std::string>())
                           : v.is_number_integer() ? Rational(v.get<long>())
                                                   : parse_rational(v.dump());
    g.set_bracket(row[0].get<int>(), row[1].get<int>(), row[2].get<int>(), value);
  }
  return g;
}

}  // namespace

StructureConstants parse_algebra(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    try {
      return algebra_from_json(nlohmann::json::parse(text));
    } catch (const nlohmann::json::exception& e) {
      throw ParseError(1, std::string("invalid algebra JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
      throw ParseError(1, e.what());
    }
  }
  std::istringstream lines(text);
  std::string line;
  int lineno = 0;
  std::optional<StructureConstants> g;
  while (std::getline(lines, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream is(line);
    std::string head;
    if (!(is >> head)) continue;
    if (!g) {
      int n = 0;
      std::string extra;
      if (head != "dim" || !(is >> n) || n < 1 || (is >> extra)) throw ParseError(lineno, "expected 'dim <n>'");
      g.emplace(n);
      continue;
    }
    std::string js, ks, vs, extra;
    if (!(is >> js >> ks >> vs) || (is >> extra)) throw ParseError(lineno, "expected 'i j k value'");
    try {
      g->set_bracket(std::stoi(head), std::stoi(js), std::stoi(ks), parse_rational(vs));
    } catch (const std::exception& e) {
      throw ParseError(lineno, e.what());
    }
  }
  if (!g) throw ParseError(lineno, "missing 'dim <n>' header");
  return *g;
}

StructureConstants read_algebra_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_algebra(in);
}

void write_algebra(std::ostream& os, const StructureConstants& g) {
  os << "dim " << g.dim() << '\n';
  for (int i = 1; i <= g.dim(); ++i)
    for (int j = i + 1; j <= g.dim(); ++j)
      for (const auto& t : g.bracket(i, j)) os << i << ' ' << j << ' ' << t.k << ' ' << to_string(t.value) << '\n';
}

nlohmann::json to_json(const StructureConstants& g) {
  nlohmann::json constants = nlohmann::json::array();
  for (int i = 1; i <= g.dim(); ++i)
    for (int j = i + 1; j <= g.dim(); ++j)
      for (const auto& t : g.bracket(i, j)) constants.push_back({i, j, t.k, to_string(t.value)});
  return {{"dim", g.dim()}, {"constants", constants}};
}

nlohmann::json to_json(const MetricMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (int i = 0; i < m.dim(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (int j = 0; j < m.dim(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace sexpand
