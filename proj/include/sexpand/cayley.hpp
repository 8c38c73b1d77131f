#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sexpand/rational.hpp"

namespace sexpand {

/// Raised when an input violates a mathematical precondition (a table that is
/// not associative, an algebra that fails Jacobi, ...). The CLI maps it to
/// exit code 1.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised on malformed text input. Carries the 1-based line number.
class ParseError : public std::runtime_error {
 public:
  ParseError(int line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Multiplication table of a finite magma on the labels 1..n.
///
/// `at(a, b)` is the product a·b. Nothing beyond closure is assumed at
/// construction; associativity and commutativity are tested by the free
/// predicates below.
class CayleyTable {
 public:
  CayleyTable() = default;
  explicit CayleyTable(const std::vector<std::vector<int>>& rows,
                       std::optional<int> id = std::nullopt);
  /// Row-major labels, each in 1..order.
  CayleyTable(int order, std::vector<std::uint8_t> flat,
              std::optional<int> id = std::nullopt);

  int order() const noexcept { return order_; }
  int at(int a, int b) const {
    return cells_[static_cast<std::size_t>((a - 1) * order_ + (b - 1))];
  }
  std::span<const std::uint8_t> flat() const noexcept { return cells_; }
  std::vector<std::vector<int>> rows() const;

  std::optional<int> id() const noexcept { return id_; }
  CayleyTable with_id(std::optional<int> id) const;

  /// Identical order and entries; ids are ignored.
  friend bool operator==(const CayleyTable& a, const CayleyTable& b) {
    return a.order_ == b.order_ && a.cells_ == b.cells_;
  }
  /// Row-major lexicographic order on equal-order tables.
  friend bool operator<(const CayleyTable& a, const CayleyTable& b) {
    if (a.order_ != b.order_) return a.order_ < b.order_;
    return a.cells_ < b.cells_;
  }

 private:
  int order_ = 0;
  std::vector<std::uint8_t> cells_;
  std::optional<int> id_;
};

bool is_associative(const CayleyTable& t);
bool is_commutative(const CayleyTable& t);
bool tables_equal(const CayleyTable& a, const CayleyTable& b);
CayleyTable transpose(const CayleyTable& t);

/// Two-sided zero: z with a·z = z·a = z for every a.
std::optional<int> find_zero(const CayleyTable& t);

/// K_ab^c = 1 iff a·b = c. Box a (fixed first index) is the matrix of λ_a in
/// the regular representation: row b, column c.
class Selector {
 public:
  explicit Selector(const CayleyTable& t);

  int order() const noexcept { return order_; }
  int operator()(int a, int b, int c) const {
    return data_[static_cast<std::size_t>(((a - 1) * order_ + (b - 1)) * order_ + (c - 1))];
  }
  std::vector<std::vector<int>> box(int a) const;

 private:
  int order_;
  std::vector<std::uint8_t> data_;
};

Selector get_selector(const CayleyTable& t);

/// Dense symmetric matrix of exact rationals (Killing-type metrics).
class MetricMatrix {
 public:
  MetricMatrix() = default;
  explicit MetricMatrix(int dim) : dim_(dim), entries_(static_cast<std::size_t>(dim) * dim) {}

  int dim() const noexcept { return dim_; }
  Rational& operator()(int i, int j) {
    return entries_[static_cast<std::size_t>(i * dim_ + j)];
  }
  const Rational& operator()(int i, int j) const {
    return entries_[static_cast<std::size_t>(i * dim_ + j)];
  }
  bool is_symmetric() const;
  bool is_zero() const;
  friend bool operator==(const MetricMatrix& a, const MetricMatrix& b) {
    return a.dim_ == b.dim_ && a.entries_ == b.entries_;
  }

  /// Entries are indexed from 0; `from_rows` is a convenience for tests.
  static MetricMatrix from_rows(const std::vector<std::vector<long>>& rows);
  static MetricMatrix diagonal(const std::vector<long>& diag);

 private:
  int dim_ = 0;
  std::vector<Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const MetricMatrix& m);

/// g^S_ab = sum_{c,d} K_ac^d K_bd^c. Throws DomainError unless associative.
MetricMatrix semigroup_metric(const CayleyTable& t);

/// Kronecker product with the left factor as the inner (fast) index:
/// result((i-1)*m + a, (j-1)*m + b) = inner(a,b) * outer(i,j), where m is
/// inner.dim(). This is the double-index layout X_(i,a) used for expansions.
MetricMatrix kronecker(const MetricMatrix& inner, const MetricMatrix& outer);

// Named tables used throughout the examples, labels shifted to start at 1.

/// S_E^(N): λ_a λ_b = λ_{a+b} if a+b <= N+1, else λ_{N+1}. Order N+2.
CayleyTable make_se(int N);
/// S_M^(N): λ_0 is the identity; for a,b >= 1, λ_a λ_b = λ_{a+b} if a+b <= N,
/// else λ_{a+b-N}. Order N+1.
CayleyTable make_sm(int N);

// Text format: "order <n>" followed by n rows of n labels.
CayleyTable parse_table(std::istream& in);
CayleyTable read_table_file(const std::string& path);
void write_table(std::ostream& os, const CayleyTable& t);
std::string to_string(const CayleyTable& t);

}  // namespace sexpand
