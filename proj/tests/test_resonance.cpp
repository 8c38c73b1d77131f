#include <doctest.h>

#include "support.hpp"

using namespace sexpand;

namespace {

ResonantPair pair(int n, std::vector<int> s0, std::vector<int> s1) { return {Subset(n, s0), Subset(n, s1)}; }

}  // namespace

TEST_SUITE("resonance") {

TEST_CASE("subsets") {
  CHECK(subsets(3, 3) == std::vector<Subset>{Subset(3, {1, 2, 3})});
  CHECK(subsets(4, 1) == std::vector<Subset>{Subset(4, {1}), Subset(4, {2}), Subset(4, {3}), Subset(4, {4})});
  CHECK(subsets(5, 2).size() == 10);
  const auto s = subsets(6, 3);
  CHECK(s.size() == 20);
  CHECK(std::is_sorted(s.begin(), s.end()));
  CHECK(Subset(5, {4, 1, 4}).members() == std::vector<int>{1, 4});
  CHECK(to_string(Subset(5, {1, 3, 4})) == "1 3 4");
  CHECK(parse_subset(5, "{1, 3,4}") == Subset(5, {1, 3, 4}));
  CHECK_THROWS_AS(Subset(3, {4}), std::invalid_argument);
}

TEST_CASE("covering") {
  CHECK(fills_space(pair(4, {1, 3, 4}, {2, 4})));
  CHECK_FALSE(fills_space(pair(3, {1}, {2})));
  CHECK(fills_space({Subset::full(5), Subset(5, {2})}));
}

TEST_CASE("resonance conditions") {
  CHECK(is_resonant(testing::s770(), pair(5, {1, 2, 3}, {1, 4, 5})));
  CHECK(is_resonant(testing::data_table("s_n3"), pair(4, {2, 4}, {1, 3, 4})));
  CHECK(is_resonant(CayleyTable({{1, 2}, {2, 1}}), pair(2, {1}, {2})));
  CHECK_FALSE(is_resonant(CayleyTable({{1, 2}, {2, 1}}), pair(2, {2}, {1})));
  CHECK(is_resonant(testing::data_table("s_e2"), pair(4, {1, 3, 4}, {2, 4})));
}

TEST_CASE("resonances of given sizes") {
  const CayleyTable n3 = testing::data_table("s_n3");
  CHECK(find_resonances(n3, 2, 3) == std::vector<ResonantPair>{pair(4, {2, 4}, {1, 3, 4})});
  CHECK(find_resonances(n3, 3, 2) == std::vector<ResonantPair>{pair(4, {1, 2, 4}, {3, 4}), pair(4, {2, 3, 4}, {1, 4})});
  CHECK_THROWS_AS(find_resonances(n3, 4, 4), std::invalid_argument);
  CHECK_THROWS_AS(find_resonances(n3, 0, 2), std::invalid_argument);
  CHECK_THROWS_AS(find_resonances(testing::data_table("s_ex1"), 1, 2), DomainError);
}

TEST_CASE("all resonances of the example tables") {
  const auto n3 = find_all_resonances(testing::data_table("s_n3"));
  CHECK(testing::as_pairs(n3) == std::vector<oracle::Pair>{{{1, 2, 4}, {1, 3, 4}},
                                                           {{1, 2, 4}, {3, 4}},
                                                           {{2, 3, 4}, {1, 3, 4}},
                                                           {{2, 3, 4}, {1, 4}},
                                                           {{2, 4}, {1, 3, 4}}});
  CHECK(find_all_resonances(testing::data_table("s_s3")).size() == 2);
  CHECK(find_all_resonances(CayleyTable(std::vector<std::vector<int>>{{1}})).empty());
  CHECK(find_all_resonances(CayleyTable({{1, 2}, {2, 1}})).size() == 1);

  // #42 as listed. Within one size class our order is lexicographic, so the
  // comparison is by set, with the unique (2,3) pair first.
  const auto r42 = find_all_resonances(testing::t42());
  REQUIRE(r42.size() == 5);
  CHECK(r42[0] == pair(4, {1, 4}, {1, 2, 3}));
  CHECK(testing::as_pairs(r42) == testing::as_pairs({pair(4, {1, 4}, {1, 2, 3}), pair(4, {1, 3, 4}, {1, 2}),
                                                     pair(4, {1, 2, 4}, {1, 3}), pair(4, {1, 3, 4}, {1, 2, 3}),
                                                     pair(4, {1, 2, 4}, {1, 2, 3})}));
}

TEST_CASE("all resonances agree with the reference search") {
  for (int order = 1; order <= 4; ++order)
    for (const auto& t : testing::commutative_catalog(order).tables) {
      CAPTURE(to_string(t));
      const auto rs = find_all_resonances(t);
      CHECK(testing::as_pairs(rs) == oracle::resonances(t.rows()));
      for (const auto& p : rs) {
        CHECK(is_resonant(t, p));
        CHECK(fills_space(p));
      }
      CHECK(std::is_sorted(rs.begin(), rs.end()));
    }
}

TEST_CASE("resonances are covariant under relabeling") {
  std::mt19937 rng(29);
  const auto& cat = testing::commutative_catalog(5);
  std::uniform_int_distribution<std::size_t> pick(0, cat.tables.size() - 1);
  for (int trial = 0; trial < 200; ++trial) {
    const CayleyTable t = cat.tables[pick(rng)];
    const Permutation s = testing::random_permutation(5, rng);
    const CayleyTable u = permute_table(t, s);
    std::vector<ResonantPair> mapped;
    for (const auto& p : find_all_resonances(t)) mapped.push_back({image(s, p.s0), image(s, p.s1)});
    std::sort(mapped.begin(), mapped.end());
    CHECK(mapped == find_all_resonances(u));
  }
}

}  // TEST_SUITE
