#include "sexpand/catalog.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

namespace sexpand {

std::string to_string(Equivalence e) { return e == Equivalence::iso_only ? "iso" : "iso-anti"; }

Equivalence parse_equivalence(const std::string& text) {
  if (text == "iso") return Equivalence::iso_only;
  if (text == "iso-anti") return Equivalence::iso_and_anti;
  throw std::invalid_argument("unknown equivalence '" + text + "' (expected iso or iso-anti)");
}

const CayleyTable* Catalog::find_id(int id) const {
  for (const auto& t : tables)
    if (t.id() == id) return &t;
  return nullptr;
}

namespace {

constexpr std::uint8_t kUnset = 0xFF;
constexpr int kMaxCells = kMaxCatalogOrder * kMaxCatalogOrder;

// Relabeling σ (optionally composed with transposition) in the form the
// canonicity test needs: cell q of σ·t is img[t[src[q]]].
struct Relabeling {
  std::array<std::uint8_t, kMaxCells> src{};
  std::array<std::uint8_t, kMaxCatalogOrder> img{};
};

struct Live {
  std::uint16_t perm;
  std::uint8_t resume;
};

struct Node {
  std::array<std::uint8_t, kMaxCells> cells{};
  int depth = 0;  // number of cells already filled
  std::vector<Live> live;
};

// Fills cells row-major, values 0..n-1, keeping a table only if it is
// associative and no relabeling makes it lexicographically smaller. Each
// relabeling carries the first cell at which the comparison is still
// undecided; a branch dies as soon as some relabeling is strictly smaller,
// and relabelings that come out strictly larger are dropped for the subtree.
class Generator {
 public:
  Generator(int n, Equivalence eq) : n_(n), cells_(n * n) {
    std::vector<int> image(static_cast<std::size_t>(n));
    for (int pass = 0; pass < (eq == Equivalence::iso_and_anti ? 2 : 1); ++pass) {
      const bool anti = pass == 1;
      std::iota(image.begin(), image.end(), 0);
      do {
        bool identity = true;
        for (int i = 0; i < n; ++i) identity = identity && image[static_cast<std::size_t>(i)] == i;
        if (identity && !anti) continue;
        Relabeling r;
        std::array<int, kMaxCatalogOrder> inv{};
        for (int i = 0; i < n; ++i) {
          r.img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(image[static_cast<std::size_t>(i)]);
          inv[static_cast<std::size_t>(image[static_cast<std::size_t>(i)])] = i;
        }
        for (int x = 0; x < n; ++x)
          for (int y = 0; y < n; ++y) {
            const int sx = inv[static_cast<std::size_t>(x)], sy = inv[static_cast<std::size_t>(y)];
            r.src[static_cast<std::size_t>(x * n + y)] = static_cast<std::uint8_t>(anti ? sy * n + sx : sx * n + sy);
          }
        perms_.push_back(r);
      } while (std::next_permutation(image.begin(), image.end()));
    }
  }

  Node root() const {
    Node node;
    node.cells.fill(kUnset);
    node.live.reserve(perms_.size());
    for (std::size_t k = 0; k < perms_.size(); ++k) node.live.push_back({static_cast<std::uint16_t>(k), 0});
    return node;
  }

  // Children of `node` that survive both tests, in increasing value order.
  template <class Visit>
  void expand(Node& node, Visit&& visit) const {
    const int p = node.depth;
    std::vector<Live> next;
    next.reserve(node.live.size());
    for (int v = 0; v < n_; ++v) {
      node.cells[static_cast<std::size_t>(p)] = static_cast<std::uint8_t>(v);
      if (!associative_at(node.cells, p)) continue;
      if (!minimal_at(node.cells, p, node.live, next)) continue;
      Node child;
      child.cells = node.cells;
      child.depth = p + 1;
      child.live = next;
      visit(child);
    }
    node.cells[static_cast<std::size_t>(p)] = kUnset;
  }

  template <class Emit>
  void run(Node& node, Emit& emit) const {
    if (node.depth == cells_) {
      emit(node.cells);
      return;
    }
    expand(node, [&](Node& child) { run(child, emit); });
  }

  int cells() const { return cells_; }

 private:
  std::uint8_t at(const std::array<std::uint8_t, kMaxCells>& t, int x, int y) const {
    return t[static_cast<std::size_t>(x * n_ + y)];
  }

  // Every triple whose last-filled cell is p = (a, b) must associate.
  bool associative_at(const std::array<std::uint8_t, kMaxCells>& t, int p) const {
    const int a = p / n_, b = p % n_;
    const int v = t[static_cast<std::size_t>(p)];
    auto compose = [&](int x, int y) -> int {  // x·y, or -1 if unknown
      if (x < 0 || y < 0) return -1;
      const auto c = at(t, x, y);
      return c == kUnset ? -1 : c;
    };
    for (int z = 0; z < n_; ++z) {
      const int lhs = compose(v, z), rhs = compose(a, compose(b, z));
      if (lhs >= 0 && rhs >= 0 && lhs != rhs) return false;
    }
    for (int x = 0; x < n_; ++x) {
      const int lhs = compose(x, v), rhs = compose(compose(x, a), b);
      if (lhs >= 0 && rhs >= 0 && lhs != rhs) return false;
    }
    for (int x = 0; x < n_; ++x)
      for (int y = 0; y < n_; ++y) {
        if (compose(x, y) == a) {
          const int rhs = compose(x, compose(y, b));
          if (rhs >= 0 && rhs != v) return false;
        }
        if (compose(x, y) == b) {
          const int lhs = compose(compose(a, x), y);
          if (lhs >= 0 && lhs != v) return false;
        }
      }
    return true;
  }

  bool minimal_at(const std::array<std::uint8_t, kMaxCells>& t, int p, const std::vector<Live>& live,
                  std::vector<Live>& next) const {
    next.clear();
    for (const Live& l : live) {
      const Relabeling& r = perms_[l.perm];
      int q = l.resume;
      while (true) {
        if (q > p) {
          next.push_back({l.perm, static_cast<std::uint8_t>(q)});
          break;
        }
        const int s = r.src[static_cast<std::size_t>(q)];
        if (s > p) {
          next.push_back({l.perm, static_cast<std::uint8_t>(q)});
          break;
        }
        const int image = r.img[t[static_cast<std::size_t>(s)]];
        const int mine = t[static_cast<std::size_t>(q)];
        if (image < mine) return false;
        if (image > mine) break;
        if (++q == cells_) break;  // automorphism
      }
    }
    return true;
  }

  int n_;
  int cells_;
  std::vector<Relabeling> perms_;
};

CayleyTable to_table(int n, const std::array<std::uint8_t, kMaxCells>& cells, int id) {
  std::vector<std::uint8_t> flat(static_cast<std::size_t>(n) * n);
  for (std::size_t q = 0; q < flat.size(); ++q) flat[q] = static_cast<std::uint8_t>(cells[q] + 1);
  return CayleyTable(n, std::move(flat), id);
}

}  // namespace

Catalog enumerate(int order, Equivalence equivalence, unsigned threads) {
  if (order < 1 || order > kMaxCatalogOrder)
    throw std::invalid_argument("enumeration supports orders 1.." + std::to_string(kMaxCatalogOrder));
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());

  const Generator gen(order, equivalence);
  std::vector<std::array<std::uint8_t, kMaxCells>> found;

  // Split the tree at a fixed depth into independent subtrees; each worker
  // keeps its own output so the concatenation stays in lexicographic order.
  std::vector<Node> frontier{gen.root()};
  const int split = threads > 1 ? std::min(gen.cells(), order + 2) : 0;
  for (int d = 0; d < split; ++d) {
    std::vector<Node> deeper;
    for (auto& node : frontier) gen.expand(node, [&](Node& child) { deeper.push_back(std::move(child)); });
    frontier = std::move(deeper);
  }

  std::vector<std::vector<std::array<std::uint8_t, kMaxCells>>> parts(frontier.size());
  std::atomic<std::size_t> cursor{0};
  auto worker = [&] {
    for (std::size_t i = cursor++; i < frontier.size(); i = cursor++) {
      auto emit = [&](const std::array<std::uint8_t, kMaxCells>& cells) { parts[i].push_back(cells); };
      gen.run(frontier[i], emit);
    }
  };
  if (threads == 1 || frontier.size() <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
  }

  Catalog out;
  out.order = order;
  out.equivalence = equivalence;
  int id = 0;
  for (const auto& part : parts)
    for (const auto& cells : part) out.tables.push_back(to_table(order, cells, ++id));
  return out;
}

Catalog filter_commutative(const Catalog& c) {
  Catalog out{c.order, c.equivalence, {}};
  for (const auto& t : c.tables)
    if (is_commutative(t)) out.tables.push_back(t);
  return out;
}

std::optional<LookupResult> lookup(const Catalog& c, const CayleyTable& t) {
  if (t.order() != c.order) return std::nullopt;
  if (!is_associative(t)) throw DomainError("lookup requires an associative table");
  const bool with_anti = c.equivalence == Equivalence::iso_and_anti;
  const CayleyTable canon = canonical_form(t, with_anti);
  const auto it = std::find(c.tables.begin(), c.tables.end(), canon);
  if (it == c.tables.end()) return std::nullopt;
  LookupResult r;
  r.id = it->id().value_or(static_cast<int>(it - c.tables.begin()) + 1);
  if (auto sigma = find_isomorphism(*it, t)) {
    r.witness = *sigma;
  } else if (auto tau = with_anti ? find_anti_isomorphism(*it, t) : std::nullopt) {
    r.witness = *tau;
    r.anti = true;
  } else {
    throw std::logic_error("canonical form matched but no witness found");
  }
  return r;
}

void write_catalog(std::ostream& os, const Catalog& c) {
  os << "semigroup-catalog v1\n";
  os << "order " << c.order << " count " << c.tables.size() << " equivalence " << to_string(c.equivalence) << '\n';
  for (std::size_t i = 0; i < c.tables.size(); ++i) {
    const auto& t = c.tables[i];
    os << "\nid " << t.id().value_or(static_cast<int>(i) + 1) << '\n';
    for (int a = 1; a <= t.order(); ++a) {
      for (int b = 1; b <= t.order(); ++b) os << (b > 1 ? " " : "") << t.at(a, b);
      os << '\n';
    }
  }
}

Catalog read_catalog(std::istream& in) {
  int line_no = 0;
  std::string line;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line() || line.rfind("semigroup-catalog v1", 0) != 0)
    throw ParseError(line_no, "expected 'semigroup-catalog v1'");
  if (!next_line()) throw ParseError(line_no, "missing catalog header");
  Catalog c;
  std::size_t count = 0;
  {
    std::istringstream hs(line);
    std::string k1, k2, k3, eq;
    if (!(hs >> k1 >> c.order >> k2 >> count >> k3 >> eq) || k1 != "order" || k2 != "count" || k3 != "equivalence")
      throw ParseError(line_no, "expected 'order <n> count <Q> equivalence <iso|iso-anti>'");
    try {
      c.equivalence = parse_equivalence(eq);
    } catch (const std::invalid_argument& e) {
      throw ParseError(line_no, e.what());
    }
    if (c.order < 1 || c.order > 255) throw ParseError(line_no, "order out of range");
  }
  while (next_line()) {
    std::istringstream is(line);
    std::string key;
    int id = 0;
    if (!(is >> key >> id) || key != "id") throw ParseError(line_no, "expected 'id <a>'");
    std::vector<std::uint8_t> flat;
    for (int r = 0; r < c.order; ++r) {
      if (!next_line()) throw ParseError(line_no, "table " + std::to_string(id) + " is truncated");
      std::istringstream rs(line);
      int v = 0, k = 0;
      for (; rs >> v; ++k) {
        if (v < 1 || v > c.order) throw ParseError(line_no, "label " + std::to_string(v) + " out of range");
        flat.push_back(static_cast<std::uint8_t>(v));
      }
      if (k != c.order || !rs.eof()) throw ParseError(line_no, "expected " + std::to_string(c.order) + " labels");
    }
    c.tables.emplace_back(c.order, std::move(flat), id);
  }
  if (c.tables.size() != count)
    throw ParseError(line_no, "header announces " + std::to_string(count) + " tables, found " +
                                  std::to_string(c.tables.size()));
  return c;
}

void save(const Catalog& c, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot write " + path);
  write_catalog(os, c);
  if (!os) throw std::runtime_error("error writing " + path);
}

Catalog load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return read_catalog(in);
}

nlohmann::json to_json(const Catalog& c) {
  nlohmann::json tables = nlohmann::json::array();
  for (std::size_t i = 0; i < c.tables.size(); ++i)
    tables.push_back({{"id", c.tables[i].id().value_or(static_cast<int>(i) + 1)}, {"table", c.tables[i].rows()}});
  return {{"order", c.order}, {"equivalence", to_string(c.equivalence)}, {"count", c.tables.size()},
          {"tables", tables}};
}

}  // namespace sexpand
