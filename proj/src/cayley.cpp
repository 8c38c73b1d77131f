#include "sexpand/cayley.hpp"

#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>

namespace sexpand {

CayleyTable::CayleyTable(const std::vector<std::vector<int>>& rows, std::optional<int> id)
    : order_(static_cast<int>(rows.size())), id_(id) {
  if (order_ < 1) throw std::invalid_argument("a multiplication table needs at least one element");
  if (order_ > 255) throw std::invalid_argument("table order exceeds 255");
  cells_.reserve(static_cast<std::size_t>(order_) * order_);
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != order_)
      throw std::invalid_argument("multiplication table is not square");
    for (int v : row) {
      if (v < 1 || v > order_)
        throw std::invalid_argument("table entry " + std::to_string(v) + " outside 1.." +
                                    std::to_string(order_));
      cells_.push_back(static_cast<std::uint8_t>(v));
    }
  }
}

CayleyTable::CayleyTable(int order, std::vector<std::uint8_t> flat, std::optional<int> id)
    : order_(order), cells_(std::move(flat)), id_(id) {
  if (order_ < 1 || order_ > 255) throw std::invalid_argument("table order out of range");
  if (cells_.size() != static_cast<std::size_t>(order_) * order_)
    throw std::invalid_argument("flat table has the wrong number of cells");
  for (auto v : cells_)
    if (v < 1 || v > order_) throw std::invalid_argument("table entry outside 1..n");
}

std::vector<std::vector<int>> CayleyTable::rows() const {
  std::vector<std::vector<int>> out(static_cast<std::size_t>(order_));
  for (int a = 1; a <= order_; ++a)
    for (int b = 1; b <= order_; ++b) out[static_cast<std::size_t>(a - 1)].push_back(at(a, b));
  return out;
}

CayleyTable CayleyTable::with_id(std::optional<int> id) const {
  CayleyTable copy = *this;
  copy.id_ = id;
  return copy;
}

bool is_associative(const CayleyTable& t) {
  const int n = t.order();
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      const int ab = t.at(a, b);
      for (int c = 1; c <= n; ++c)
        if (t.at(ab, c) != t.at(a, t.at(b, c))) return false;
    }
  return true;
}

bool is_commutative(const CayleyTable& t) {
  const int n = t.order();
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (t.at(a, b) != t.at(b, a)) return false;
  return true;
}

bool tables_equal(const CayleyTable& a, const CayleyTable& b) { return a == b; }

CayleyTable transpose(const CayleyTable& t) {
  const int n = t.order();
  std::vector<std::uint8_t> flat(static_cast<std::size_t>(n) * n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b)
      flat[static_cast<std::size_t>((a - 1) * n + (b - 1))] = static_cast<std::uint8_t>(t.at(b, a));
  return CayleyTable(n, std::move(flat));
}

std::optional<int> find_zero(const CayleyTable& t) {
  const int n = t.order();
  for (int z = 1; z <= n; ++z) {
    bool absorbs = true;
    for (int a = 1; a <= n && absorbs; ++a) absorbs = t.at(a, z) == z && t.at(z, a) == z;
    if (absorbs) return z;
  }
  return std::nullopt;
}

Selector::Selector(const CayleyTable& t)
    : order_(t.order()), data_(static_cast<std::size_t>(order_) * order_ * order_, 0) {
  for (int a = 1; a <= order_; ++a)
    for (int b = 1; b <= order_; ++b)
      data_[static_cast<std::size_t>(((a - 1) * order_ + (b - 1)) * order_ + (t.at(a, b) - 1))] = 1;
}

std::vector<std::vector<int>> Selector::box(int a) const {
  std::vector<std::vector<int>> m(static_cast<std::size_t>(order_), std::vector<int>(static_cast<std::size_t>(order_)));
  for (int b = 1; b <= order_; ++b)
    for (int c = 1; c <= order_; ++c) m[static_cast<std::size_t>(b - 1)][static_cast<std::size_t>(c - 1)] = (*this)(a, b, c);
  return m;
}

Selector get_selector(const CayleyTable& t) { return Selector(t); }

bool MetricMatrix::is_symmetric() const {
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      if ((*this)(i, j) != (*this)(j, i)) return false;
  return true;
}

bool MetricMatrix::is_zero() const {
  for (const auto& e : entries_)
    if (e != 0) return false;
  return true;
}

MetricMatrix MetricMatrix::from_rows(const std::vector<std::vector<long>>& rows) {
  MetricMatrix m(static_cast<int>(rows.size()));
  for (int i = 0; i < m.dim(); ++i) {
    if (static_cast<int>(rows[static_cast<std::size_t>(i)].size()) != m.dim())
      throw std::invalid_argument("metric rows must be square");
    for (int j = 0; j < m.dim(); ++j) m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  return m;
}

MetricMatrix MetricMatrix::diagonal(const std::vector<long>& diag) {
  MetricMatrix m(static_cast<int>(diag.size()));
  for (int i = 0; i < m.dim(); ++i) m(i, i) = diag[static_cast<std::size_t>(i)];
  return m;
}

std::ostream& operator<<(std::ostream& os, const MetricMatrix& m) {
  std::vector<std::string> cells;
  std::size_t width = 1;
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) {
      cells.push_back(to_string(m(i, j)));
      width = std::max(width, cells.back().size());
    }
  for (int i = 0; i < m.dim(); ++i) {
    for (int j = 0; j < m.dim(); ++j)
      os << ' ' << std::setw(static_cast<int>(width)) << cells[static_cast<std::size_t>(i * m.dim() + j)];
    os << '\n';
  }
  return os;
}

MetricMatrix semigroup_metric(const CayleyTable& t) {
  if (!is_associative(t)) throw DomainError("semigroup metric requires an associative table");
  // g_ab counts the c with b·(a·c) = c, i.e. the trace of L_b L_a.
  const int n = t.order();
  MetricMatrix g(n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      long fixed = 0;
      for (int c = 1; c <= n; ++c)
        if (t.at(b, t.at(a, c)) == c) ++fixed;
      g(a - 1, b - 1) = fixed;
    }
  return g;
}

MetricMatrix kronecker(const MetricMatrix& inner, const MetricMatrix& outer) {
  const int m = inner.dim(), n = outer.dim();
  MetricMatrix out(m * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (outer(i, j) == 0) continue;
      for (int a = 0; a < m; ++a)
        for (int b = 0; b < m; ++b) out(i * m + a, j * m + b) = inner(a, b) * outer(i, j);
    }
  return out;
}

CayleyTable make_se(int N) {
  if (N < 0) throw std::invalid_argument("S_E^(N) needs N >= 0");
  const int n = N + 2;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = (a + b <= N + 1 ? a + b : N + 1) + 1;
  return CayleyTable(rows);
}

CayleyTable make_sm(int N) {
  if (N < 1) throw std::invalid_argument("S_M^(N) needs N >= 1");
  const int n = N + 1;
  std::vector<std::vector<int>> rows(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      int c = a + b;
      if (a != 0 && b != 0 && c > N) c -= N;
      rows[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = c + 1;
    }
  return CayleyTable(rows);
}

namespace {

bool next_content_line(std::istream& in, std::string& line, int& lineno) {
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (line.find_first_not_of(" \t") == std::string::npos) continue;
    return true;
  }
  return false;
}

}  // namespace

CayleyTable parse_table(std::istream& in) {
  std::string line;
  int lineno = 0;
  if (!next_content_line(in, line, lineno)) throw ParseError(lineno + 1, "expected 'order <n>'");
  std::istringstream header(line);
  std::string keyword;
  int n = 0;
  std::string extra;
  if (!(header >> keyword >> n) || keyword != "order" || (header >> extra))
    throw ParseError(lineno, "expected 'order <n>'");
  if (n < 1 || n > 255) throw ParseError(lineno, "order must be between 1 and 255");
  std::vector<std::vector<int>> rows;
  for (int r = 0; r < n; ++r) {
    if (!next_content_line(in, line, lineno))
      throw ParseError(lineno + 1, "expected " + std::to_string(n) + " rows, found " + std::to_string(r));
    std::istringstream row_in(line);
    std::vector<int> row;
    std::string tok;
    while (row_in >> tok) {
      try {
        std::size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        if (v < 1 || v > n) throw ParseError(lineno, "entry " + tok + " outside 1.." + std::to_string(n));
        row.push_back(v);
      } catch (const std::logic_error&) {
        throw ParseError(lineno, "not an integer: '" + tok + "'");
      }
    }
    if (static_cast<int>(row.size()) != n)
      throw ParseError(lineno, "row has " + std::to_string(row.size()) + " entries, expected " + std::to_string(n));
    rows.push_back(std::move(row));
  }
  return CayleyTable(rows);
}

CayleyTable read_table_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_table(in);
}

void write_table(std::ostream& os, const CayleyTable& t) {
  os << "order " << t.order() << '\n';
  for (int a = 1; a <= t.order(); ++a) {
    for (int b = 1; b <= t.order(); ++b) os << (b > 1 ? " " : "") << t.at(a, b);
    os << '\n';
  }
}

std::string to_string(const CayleyTable& t) {
  std::ostringstream os;
  for (int a = 1; a <= t.order(); ++a) {
    for (int b = 1; b <= t.order(); ++b) os << (b > 1 ? " " : "") << t.at(a, b);
    os << '\n';
  }
  return os.str();
}

}  // namespace sexpand
