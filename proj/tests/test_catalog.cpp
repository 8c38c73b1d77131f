#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"

using namespace sexpand;

TEST_SUITE("catalog") {

TEST_CASE("class counts up to isomorphism and anti-isomorphism") {
  const int expected[] = {1, 4, 18, 126, 1160};
  for (int n = 1; n <= 5; ++n) {
    CAPTURE(n);
    CHECK(static_cast<int>(testing::catalog(n).tables.size()) == expected[n - 1]);
  }
  CHECK(testing::catalog(1).tables.front() == CayleyTable(std::vector<std::vector<int>>{{1}}));
}

TEST_CASE("class counts up to isomorphism only") {
  const int expected[] = {1, 5, 24, 188};
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const Catalog c = enumerate(n, Equivalence::iso_only);
    CHECK(static_cast<int>(c.tables.size()) == expected[n - 1]);
    CHECK(c.tables.size() >= testing::catalog(n).tables.size());
  }
}

TEST_CASE("commutative members") {
  const Catalog c2 = filter_commutative(testing::catalog(2));
  REQUIRE(c2.tables.size() == 3);
  CHECK(c2.tables[0].id() == 1);
  CHECK(c2.tables[1].id() == 2);
  CHECK(c2.tables[2].id() == 4);
  CHECK(testing::commutative_catalog(3).tables.size() == 12);
  CHECK(testing::commutative_catalog(4).tables.size() == 58);
  CHECK(testing::commutative_catalog(5).tables.size() == 325);
  CHECK(testing::commutative_catalog(1).tables.size() == 1);
}

TEST_CASE("catalog invariants") {
  for (int n = 1; n <= 4; ++n) {
    CAPTURE(n);
    const Catalog& c = testing::catalog(n);
    for (std::size_t k = 0; k < c.tables.size(); ++k) {
      const CayleyTable& t = c.tables[k];
      CHECK(t.id() == static_cast<int>(k) + 1);
      CHECK(is_associative(t));
      CHECK(canonical_form(t, true) == t);
      if (k > 0) CHECK(c.tables[k - 1] < t);
    }
    for (std::size_t a = 0; a < c.tables.size(); ++a)
      for (std::size_t b = a + 1; b < c.tables.size(); ++b) {
        CHECK_FALSE(find_isomorphism(c.tables[a], c.tables[b]).has_value());
        CHECK_FALSE(find_anti_isomorphism(c.tables[a], c.tables[b]).has_value());
      }
  }
}

TEST_CASE("exhaustive against all tables of orders 2 and 3") {
  for (int n = 2; n <= 3; ++n)
    for (const bool anti : {false, true}) {
      CAPTURE(n);
      CAPTURE(anti);
      const auto expected = oracle::brute_force_classes(n, anti);
      const Catalog c = enumerate(n, anti ? Equivalence::iso_and_anti : Equivalence::iso_only);
      std::vector<oracle::Rows> got;
      for (const auto& t : c.tables) got.push_back(t.rows());
      CHECK(got == expected);
    }
}

TEST_CASE("threaded enumeration matches the sequential one") {
  CHECK(enumerate(4, Equivalence::iso_and_anti, 3) == testing::catalog(4));
  CHECK(enumerate(4, Equivalence::iso_only, 2) == enumerate(4, Equivalence::iso_only, 1));
}

TEST_CASE("lookup") {
  const Catalog& c4 = testing::catalog(4);
  const auto hit = lookup(c4, testing::data_table("s_n3"));
  REQUIRE(hit.has_value());
  CHECK(hit->id == 42);
  CHECK(to_string(hit->witness) == "(4 1 3 2)");
  CHECK_FALSE(hit->anti);
  CHECK(*c4.find_id(42) == testing::t42());

  for (const auto& t : c4.tables) {
    const auto self = lookup(c4, t);
    REQUIRE(self.has_value());
    CHECK(self->id == t.id());
    CHECK(self->witness.is_identity());
  }

  const Catalog& c5 = testing::catalog(5);
  const auto h770 = lookup(c5, testing::s770());
  REQUIRE(h770.has_value());
  CHECK(permute_table(*c5.find_id(h770->id), h770->witness) == testing::s770());
  CHECK(h770->id == 770);

  // A non-commutative table found through its transpose.
  const CayleyTable left({{1, 1, 1}, {2, 2, 2}, {3, 3, 3}});
  for (const auto& t : {left, transpose(left)}) {
    const auto h = lookup(testing::catalog(3), t);
    REQUIRE(h.has_value());
    const CayleyTable& rep = *testing::catalog(3).find_id(h->id);
    CHECK((h->anti ? anti_permute_table(rep, h->witness) : permute_table(rep, h->witness)) == t);
  }

  CHECK_FALSE(lookup(c4, CayleyTable(std::vector<std::vector<int>>{{1}})).has_value());
  CHECK_THROWS_AS(lookup(testing::catalog(3), testing::data_table("s_ex1")), DomainError);
}

TEST_CASE("catalog files") {
  const auto dir = std::filesystem::temp_directory_path() / "sexpand-catalog-test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "order3.cat").string();
  save(testing::catalog(3), path);
  CHECK(load(path) == testing::catalog(3));

  const Catalog c4 = filter_commutative(testing::catalog(4));
  std::stringstream ss;
  write_catalog(ss, c4);
  const Catalog back = read_catalog(ss);
  CHECK(back.tables.size() == 58);
  CHECK(back == c4);

  std::ostringstream text;
  write_catalog(text, testing::catalog(2));
  const std::string full = text.str();
  CHECK(full.rfind("semigroup-catalog v1\norder 2 count 4 equivalence iso-anti\n", 0) == 0);
  std::istringstream truncated(full.substr(0, full.size() - 6));
  CHECK_THROWS_AS(read_catalog(truncated), ParseError);
  std::istringstream bad_header("semigroup-catalog v2\n");
  CHECK_THROWS_AS(read_catalog(bad_header), ParseError);
  CHECK_THROWS_AS(load((dir / "missing.cat").string()), std::runtime_error);

  const auto j = to_json(testing::catalog(2));
  CHECK(j["order"] == 2);
  CHECK(j["tables"].size() == 4);
  std::filesystem::remove_all(dir);
}

TEST_CASE("order bounds") {
  CHECK_THROWS_AS(enumerate(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate(kMaxCatalogOrder + 1), std::invalid_argument);
  CHECK(parse_equivalence("iso") == Equivalence::iso_only);
  CHECK(to_string(Equivalence::iso_and_anti) == "iso-anti");
  CHECK_THROWS_AS(parse_equivalence("graph"), std::invalid_argument);
}

}  // TEST_SUITE
