#include <doctest.h>

#include <sstream>

#include "support.hpp"

using namespace sexpand;

TEST_SUITE("cayley") {

TEST_CASE("associativity of the example tables") {
  CHECK_FALSE(is_associative(testing::data_table("s_ex1")));
  for (const char* name : {"s_ex2", "s_ex3", "s_ex4", "s_ex5", "s_ex6"}) {
    CAPTURE(name);
    CHECK(is_associative(testing::data_table(name)));
  }
  CHECK(is_associative(CayleyTable(std::vector<std::vector<int>>{{1}})));
}

TEST_CASE("commutativity of the example tables") {
  CHECK(is_commutative(testing::data_table("s_ex1")));
  CHECK_FALSE(is_commutative(testing::data_table("s_ex2")));
  CHECK(is_commutative(testing::data_table("s_ex3")));
  CHECK(is_commutative(testing::data_table("s_ex4")));
  CHECK(is_commutative(testing::data_table("s_ex5")));
  CHECK_FALSE(is_commutative(testing::data_table("s_ex6")));
  for (const char* name : {"s_e2", "s_k3", "s_n1", "s_n2", "s_n3", "s_s3", "s_s2", "s_m3", "s_m4"}) {
    CAPTURE(name);
    const CayleyTable t = testing::data_table(name);
    CHECK(is_associative(t));
    CHECK(is_commutative(t));
  }
}

TEST_CASE("zero elements") {
  for (const char* name : {"s_e2", "s_k3", "s_n1", "s_n2", "s_n3", "s_s3"}) {
    CAPTURE(name);
    CHECK(find_zero(testing::data_table(name)) == 4);
  }
  for (const char* name : {"s_s2", "s_m3", "s_m4"}) {
    CAPTURE(name);
    CHECK_FALSE(find_zero(testing::data_table(name)).has_value());
  }
  CHECK(find_zero(CayleyTable(std::vector<std::vector<int>>{{1}})) == 1);
}

TEST_CASE("predicates agree with the reference implementation on random tables") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = 1 + trial % 4;
    std::uniform_int_distribution<int> label(1, n);
    oracle::Rows rows(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
    for (auto& r : rows)
      for (auto& v : r) v = label(rng);
    const CayleyTable t(rows);
    CHECK(is_associative(t) == oracle::associative(rows));
    CHECK(is_commutative(t) == oracle::commutative(rows));
    CHECK(find_zero(t).value_or(0) == oracle::zero(rows));
    CHECK(transpose(t).rows() == oracle::transposed(rows));
  }
}

TEST_CASE("selector boxes") {
  const Selector k(testing::data_table("s_e2"));
  CHECK(k.box(2) == std::vector<std::vector<int>>{{0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {0, 0, 0, 1}});
  CHECK(k.box(1) == std::vector<std::vector<int>>{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}});

  const Selector one(CayleyTable(std::vector<std::vector<int>>{{1}}));
  CHECK(one(1, 1, 1) == 1);

  const Selector z2 = get_selector(CayleyTable({{1, 2}, {2, 1}}));
  CHECK(z2(1, 1, 1) == 1);
  CHECK(z2(1, 2, 2) == 1);
  CHECK(z2(2, 1, 2) == 1);
  CHECK(z2(2, 2, 1) == 1);
  CHECK(z2(1, 1, 2) == 0);
  CHECK(z2(2, 2, 2) == 0);
}

TEST_CASE("semigroup metric") {
  CHECK(semigroup_metric(CayleyTable(std::vector<std::vector<int>>{{1}})) == MetricMatrix::diagonal({1}));
  CHECK(semigroup_metric(CayleyTable({{1, 2}, {2, 1}})) == MetricMatrix::diagonal({2, 2}));
  for (const char* name : {"s_e2", "s_k3", "s_n3", "s_m4", "s_ex6"}) {
    CAPTURE(name);
    const CayleyTable t = testing::data_table(name);
    CHECK(testing::dense(semigroup_metric(t)) == oracle::semigroup_metric(t.rows()));
  }
  CHECK_THROWS_AS(semigroup_metric(testing::data_table("s_ex1")), DomainError);
}

TEST_CASE("table equality is stricter than isomorphism") {
  const CayleyTable a = testing::data_table("s_ex1");
  CHECK(tables_equal(a, a));
  CHECK_FALSE(tables_equal(a, testing::data_table("s_ex2")));
  CHECK_FALSE(tables_equal(testing::t42(), testing::data_table("s_n3")));
}

TEST_CASE("S_E and S_M families") {
  CHECK(make_se(5) == testing::data_table("se5"));
  CHECK(make_sm(6) == testing::data_table("sm6"));
  CHECK(make_se(2) == testing::data_table("s_e2"));
  CHECK(make_sm(4) == testing::data_table("s_m4"));
  // The printed S_M^(3) is the cyclic group of order 4, not the family member.
  CHECK_FALSE(make_sm(3) == testing::data_table("s_m3"));
  CHECK(make_sm(3).at(4, 2) == 2);
  CHECK(make_sm(2) == testing::data_table("s_s2"));
  for (int n = 0; n < 6; ++n) {
    CHECK(is_associative(make_se(n)));
    CHECK(is_associative(make_sm(n + 1)));
  }
}

TEST_CASE("table text format") {
  const CayleyTable t = testing::data_table("s_n3");
  std::stringstream ss;
  write_table(ss, t);
  CHECK(parse_table(ss) == t);

  std::istringstream comments("# a comment\n\norder 2\n1 2   # trailing\n2 1\n");
  CHECK(parse_table(comments) == CayleyTable({{1, 2}, {2, 1}}));

  std::istringstream short_rows("order 2\n1 2\n");
  CHECK_THROWS_AS(parse_table(short_rows), ParseError);
  std::istringstream bad_label("order 2\n1 3\n2 1\n");
  try {
    parse_table(bad_label);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.line() == 2);
  }
  std::istringstream not_number("order 2\n1 x\n2 1\n");
  CHECK_THROWS_AS(parse_table(not_number), ParseError);
  CHECK_THROWS_AS(read_table_file(testing::data_path("missing.tbl")), std::runtime_error);
}

TEST_CASE("construction rejects malformed tables") {
  CHECK_THROWS_AS(CayleyTable(std::vector<std::vector<int>>{{1, 2}, {1}}), std::invalid_argument);
  CHECK_THROWS_AS(CayleyTable(std::vector<std::vector<int>>{{1, 3}, {1, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(CayleyTable(std::vector<std::vector<int>>{}), std::invalid_argument);
}

TEST_CASE("kronecker product layout") {
  const MetricMatrix inner = MetricMatrix::from_rows({{1, 2}, {3, 4}});
  const MetricMatrix outer = MetricMatrix::diagonal({5, 7});
  const MetricMatrix k = kronecker(inner, outer);
  REQUIRE(k.dim() == 4);
  // index (i, a) -> (i-1)*m + a with the outer factor carrying i
  CHECK(k(0, 1) == 10);
  CHECK(k(3, 2) == 21);
  CHECK(k(0, 2) == 0);
}

}  // TEST_SUITE
