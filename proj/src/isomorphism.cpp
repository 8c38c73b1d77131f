#include "sexpand/isomorphism.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace sexpand {

Permutation::Permutation(std::vector<int> image) : image_(std::move(image)) {
  const int n = size();
  std::vector<bool> seen(static_cast<std::size_t>(n) + 1, false);
  for (int v : image_) {
    if (v < 1 || v > n || seen[static_cast<std::size_t>(v)])
      throw std::invalid_argument("not a permutation of 1.." + std::to_string(n));
    seen[static_cast<std::size_t>(v)] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  return Permutation(std::move(image));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (image_[static_cast<std::size_t>(i)] != i + 1) return false;
  return true;
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(image_.size());
  for (int i = 0; i < size(); ++i) inv[static_cast<std::size_t>(image_[static_cast<std::size_t>(i)] - 1)] = i + 1;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) throw std::invalid_argument("composing permutations of different degree");
  std::vector<int> image(static_cast<std::size_t>(q.size()));
  for (int i = 1; i <= q.size(); ++i) image[static_cast<std::size_t>(i - 1)] = p(q(i));
  return Permutation(std::move(image));
}

std::string to_string(const Permutation& p) {
  std::string out = "(";
  for (int i = 1; i <= p.size(); ++i) {
    if (i > 1) out += ' ';
    out += std::to_string(p(i));
  }
  return out + ")";
}

Permutation parse_permutation(const std::string& text) {
  std::string cleaned;
  for (char c : text) cleaned += (c == '(' || c == ')' || c == ',') ? ' ' : c;
  std::istringstream in(cleaned);
  std::vector<int> image;
  int v = 0;
  while (in >> v) image.push_back(v);
  if (!in.eof()) throw std::invalid_argument("malformed permutation: " + text);
  return Permutation(std::move(image));
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 1 || n > 8) throw std::invalid_argument("all_permutations supports 1 <= n <= 8");
  std::vector<int> image(static_cast<std::size_t>(n));
  std::iota(image.begin(), image.end(), 1);
  std::vector<Permutation> out;
  do {
    out.emplace_back(image);
  } while (std::next_permutation(image.begin(), image.end()));
  return out;
}

Permutation inverse(const Permutation& p) { return p.inverse(); }

namespace {

void require_same_degree(const CayleyTable& t, const Permutation& sigma) {
  if (t.order() != sigma.size())
    throw std::invalid_argument("permutation degree " + std::to_string(sigma.size()) +
                                " does not match table order " + std::to_string(t.order()));
}

CayleyTable relabel(const CayleyTable& t, const Permutation& sigma, bool anti) {
  require_same_degree(t, sigma);
  const int n = t.order();
  std::vector<std::uint8_t> flat(static_cast<std::size_t>(n) * n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      int product = anti ? t.at(b, a) : t.at(a, b);
      flat[static_cast<std::size_t>((sigma(a) - 1) * n + (sigma(b) - 1))] = static_cast<std::uint8_t>(sigma(product));
    }
  return CayleyTable(n, std::move(flat));
}

// Depth-first search over σ(1), σ(2), ... with values tried in increasing
// order, so witnesses come out lexicographically sorted. After fixing σ(k)
// every pair (x, y) with x, y <= k is checked: the image cell b[σx][σy] must
// equal σ(a[x][y]) when that is already fixed, and must not be an image
// already taken by another element otherwise.
class IsoSearch {
 public:
  IsoSearch(const CayleyTable& a, const CayleyTable& b, bool anti, bool want_all)
      : a_(a), b_(b), anti_(anti), want_all_(want_all), n_(a.order()),
        sigma_(static_cast<std::size_t>(n_) + 1, 0), preimage_(static_cast<std::size_t>(n_) + 1, 0) {}

  std::vector<Permutation> run() {
    if (a_.order() != b_.order()) return {};
    extend(1);
    return std::move(found_);
  }

 private:
  int product(int x, int y) const { return anti_ ? a_.at(y, x) : a_.at(x, y); }

  bool consistent(int k) const {
    for (int x = 1; x <= k; ++x)
      for (int y = 1; y <= k; ++y) {
        const int c = product(x, y);
        const int target = b_.at(sigma_[static_cast<std::size_t>(x)], sigma_[static_cast<std::size_t>(y)]);
        if (c <= k) {
          if (sigma_[static_cast<std::size_t>(c)] != target) return false;
        } else if (preimage_[static_cast<std::size_t>(target)] != 0) {
          return false;
        }
      }
    return true;
  }

  bool extend(int k) {
    if (k > n_) {
      std::vector<int> image(sigma_.begin() + 1, sigma_.end());
      found_.emplace_back(std::move(image));
      return !want_all_;
    }
    for (int v = 1; v <= n_; ++v) {
      if (preimage_[static_cast<std::size_t>(v)] != 0) continue;
      sigma_[static_cast<std::size_t>(k)] = v;
      preimage_[static_cast<std::size_t>(v)] = k;
      if (consistent(k) && extend(k + 1)) return true;
      preimage_[static_cast<std::size_t>(v)] = 0;
      sigma_[static_cast<std::size_t>(k)] = 0;
    }
    return false;
  }

  const CayleyTable& a_;
  const CayleyTable& b_;
  bool anti_;
  bool want_all_;
  int n_;
  std::vector<int> sigma_;
  std::vector<int> preimage_;
  std::vector<Permutation> found_;
};

std::optional<Permutation> first_of(std::vector<Permutation> v) {
  if (v.empty()) return std::nullopt;
  return std::move(v.front());
}

}  // namespace

CayleyTable permute_table(const CayleyTable& t, const Permutation& sigma) { return relabel(t, sigma, false); }

CayleyTable anti_permute_table(const CayleyTable& t, const Permutation& sigma) { return relabel(t, sigma, true); }

std::optional<Permutation> find_isomorphism(const CayleyTable& a, const CayleyTable& b) {
  return first_of(IsoSearch(a, b, false, false).run());
}

std::vector<Permutation> find_all_isomorphisms(const CayleyTable& a, const CayleyTable& b) {
  return IsoSearch(a, b, false, true).run();
}

std::optional<Permutation> find_anti_isomorphism(const CayleyTable& a, const CayleyTable& b) {
  return first_of(IsoSearch(a, b, true, false).run());
}

std::vector<Permutation> find_all_anti_isomorphisms(const CayleyTable& a, const CayleyTable& b) {
  return IsoSearch(a, b, true, true).run();
}

CayleyTable canonical_form(const CayleyTable& t, bool include_anti) {
  const int n = t.order();
  if (n > 8) throw std::invalid_argument("canonical_form supports orders up to 8");
  const std::size_t cells = static_cast<std::size_t>(n) * n;
  std::vector<std::uint8_t> best(t.flat().begin(), t.flat().end());
  std::vector<int> image(static_cast<std::size_t>(n)), inv(static_cast<std::size_t>(n));
  std::vector<std::uint8_t> candidate(cells);
  for (int pass = 0; pass < (include_anti ? 2 : 1); ++pass) {
    const bool anti = pass == 1;
    std::iota(image.begin(), image.end(), 0);
    do {
      for (int i = 0; i < n; ++i) inv[static_cast<std::size_t>(image[static_cast<std::size_t>(i)])] = i;
      // Compare cell by cell against the incumbent, bailing out as soon as
      // the candidate is larger.
      bool smaller = false, larger = false;
      for (std::size_t q = 0; q < cells && !larger; ++q) {
        const int x = inv[q / static_cast<std::size_t>(n)] + 1, y = inv[q % static_cast<std::size_t>(n)] + 1;
        const int src = anti ? t.at(y, x) : t.at(x, y);
        const auto v = static_cast<std::uint8_t>(image[static_cast<std::size_t>(src - 1)] + 1);
        candidate[q] = v;
        if (!smaller) {
          if (v < best[q]) smaller = true;
          else if (v > best[q]) larger = true;
        }
      }
      if (smaller) best = candidate;
    } while (std::next_permutation(image.begin(), image.end()));
  }
  return CayleyTable(n, std::move(best));
}

}  // namespace sexpand
