#include <doctest.h>

#include "support.hpp"

using namespace sexpand;

namespace {

const SubspaceDecomposition kSl2Grading(Subset(3, {1}), Subset(3, {2, 3}));

ExpandedAlgebra s770_resonant() {
  const ResonantPair p{Subset(5, {1, 2, 3}), Subset(5, {1, 4, 5})};
  return resonant_subalgebra(expand(builtin_algebra("sl2"), testing::s770()), p, kSl2Grading);
}

std::vector<DoubleIndex> pairs(std::initializer_list<std::pair<int, int>> xs) {
  std::vector<DoubleIndex> out;
  for (auto [i, a] : xs) out.push_back({i, a});
  return out;
}

std::vector<std::size_t> zero_based(const ExpandedAlgebra& e) {
  std::vector<std::size_t> keep;
  for (const auto& x : e.retained()) keep.push_back(static_cast<std::size_t>(e.flat_index(x) - 1));
  return keep;
}

}  // namespace

TEST_SUITE("expansion") {

TEST_CASE("full expansion of sl2 by #770") {
  const ExpandedAlgebra e = expand(builtin_algebra("sl2"), testing::s770());
  CHECK(e.dim() == 15);
  CHECK(e.mode() == ExpansionMode::full);
  CHECK(e.constants()(e.position({1, 1}), e.position({2, 1}), e.position({3, 1})) == -2);
  CHECK(e.constants()(e.position({1, 1}), e.position({2, 2}), e.position({3, 1})) == -2);
  const MetricMatrix g = kc_metric(e);
  CHECK(determinant(g) == Rational("-144115188075855872"));
  CHECK(g == kronecker(semigroup_metric(testing::s770()), killing_metric(builtin_algebra("sl2"))));
  CHECK(g(1, 1) == -24);
  CHECK(g(5, 6) == 8);
  CHECK(testing::cube(e.constants()) == oracle::expand(testing::cube(builtin_algebra("sl2")), testing::s770().rows()));
}

TEST_CASE("resonant subalgebra and its reduction") {
  const ExpandedAlgebra r = s770_resonant();
  CHECK(r.mode() == ExpansionMode::resonant);
  CHECK(r.retained() == pairs({{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 4}, {2, 5}, {3, 1}, {3, 4}, {3, 5}}));

  const ExpandedAlgebra rr = zero_reduce(r);
  CHECK(rr.mode() == ExpansionMode::resonant_reduced);
  CHECK(rr.zero() == 1);
  CHECK(rr.retained() == pairs({{1, 2}, {1, 3}, {2, 4}, {2, 5}, {3, 4}, {3, 5}}));
  const auto& c = effective_constants(rr);
  int brackets = 0;
  for (int u = 1; u <= rr.dim(); ++u)
    for (int v = u + 1; v <= rr.dim(); ++v) brackets += static_cast<int>(c.bracket(u, v).size());
  CHECK(brackets == 6);
  CHECK(c(rr.position({1, 2}), rr.position({2, 5}), rr.position({3, 5})) == -2);
  CHECK(c(rr.position({1, 2}), rr.position({3, 5}), rr.position({2, 5})) == 2);
  CHECK(c(rr.position({1, 3}), rr.position({2, 4}), rr.position({3, 4})) == -2);
  CHECK(c(rr.position({1, 3}), rr.position({3, 4}), rr.position({2, 4})) == 2);
  CHECK(c(rr.position({2, 4}), rr.position({3, 4}), rr.position({1, 3})) == 2);
  CHECK(c(rr.position({2, 5}), rr.position({3, 5}), rr.position({1, 2})) == 2);
  const MetricMatrix g = kc_metric(rr);
  CHECK(g == MetricMatrix::diagonal({-8, -8, 8, 8, 8, 8}));
  CHECK(determinant(g) == 262144);
}

TEST_CASE("reduction of the full expansion") {
  const ExpandedAlgebra red = zero_reduce(expand(builtin_algebra("sl2"), testing::s770()));
  CHECK(red.dim() == 12);
  for (const auto& x : red.retained()) CHECK(x.a != 1);
  CHECK_THROWS_AS(zero_reduce(red), DomainError);
  CHECK_THROWS_AS(zero_reduce(expand(builtin_algebra("sl2"), testing::data_table("s_m3"))), DomainError);
}

TEST_CASE("resonant subalgebra of the S_E^(2) example") {
  const ResonantPair p{Subset(4, {1, 3, 4}), Subset(4, {2, 4})};
  const ExpandedAlgebra r = resonant_subalgebra(expand(builtin_algebra("sl2"), testing::data_table("s_e2")), p, kSl2Grading);
  CHECK(r.retained() == pairs({{1, 1}, {1, 3}, {1, 4}, {2, 2}, {2, 4}, {3, 2}, {3, 4}}));
  CHECK(jacobi_defect(r.constants()) == 0);
}

TEST_CASE("preconditions") {
  const StructureConstants sl2 = builtin_algebra("sl2");
  CHECK_THROWS_AS(expand(sl2, testing::data_table("s_ex1")), DomainError);
  CHECK_THROWS_AS(expand(sl2, testing::data_table("s_ex2")), DomainError);
  StructureConstants bad(3);
  bad.set_bracket(1, 2, 3, 1);
  bad.set_bracket(2, 3, 1, 1);
  bad.set_bracket(1, 3, 3, 1);
  CHECK_THROWS_AS(expand(bad, testing::s770()), DomainError);

  const ExpandedAlgebra e = expand(sl2, testing::s770());
  CHECK_THROWS_AS(resonant_subalgebra(e, {Subset(5, {2, 3}), Subset(5, {1, 4, 5})}, kSl2Grading), DomainError);
  CHECK_THROWS_AS(resonant_subalgebra(e, {Subset(5, {1, 2, 3}), Subset(5, {1, 4, 5})},
                                      SubspaceDecomposition(Subset(3, {1, 2}), Subset(3, {3}))),
                  DomainError);
  CHECK_THROWS_AS(resonant_subalgebra(s770_resonant(), {Subset(5, {1, 2, 3}), Subset(5, {1, 4, 5})}, kSl2Grading),
                  DomainError);
}

TEST_CASE("trivial semigroup") {
  const StructureConstants sl2 = builtin_algebra("sl2");
  const ExpandedAlgebra e = expand(sl2, CayleyTable(std::vector<std::vector<int>>{{1}}));
  CHECK(e.constants() == sl2);
  CHECK(kc_metric(e) == killing_metric(sl2));
  CHECK_THROWS_AS(zero_reduce(e), DegenerateExpansion);
  CHECK(expand(builtin_algebra("abelian2"), testing::s770()).constants().is_zero());
}

TEST_CASE("listings") {
  const ExpandedAlgebra e = expand(builtin_algebra("sl2"), testing::s770());
  const std::string commut = render(e, RenderWhat::commutators);
  CHECK(commut.find(" Y_{1}  =  X_{1,1}\n") != std::string::npos);
  CHECK(commut.find(" Y_{10} =  X_{2,5}\n") != std::string::npos);
  CHECK(commut.find(" [ X_{1,1} , X_{2,1} ] = -2 X_{3,1}\n [ X_{1,1} , X_{2,2} ] = -2 X_{3,1}\n") !=
        std::string::npos);
  CHECK(render(e, RenderWhat::constants).find(" C_{(1,1)(2,1)}^{(3,1)} = -2\n") != std::string::npos);
  CHECK(render(e, RenderWhat::metric).find("-144115188075855872") != std::string::npos);

  const ExpandedAlgebra rr = zero_reduce(s770_resonant());
  const std::string adj = render(rr, RenderWhat::adjoint);
  CHECK(adj.find("A,B = 2, 3, 9, 10, 14, 15\n") != std::string::npos);
  CHECK(adj.find("C_{(1,2) (j,b)}^{(k,c)}\n  0  0  0  0  0  0\n  0  0  0  0  0  0\n  0  0  0  0  0  0\n"
                 "  0  0  0  0  0 -2\n  0  0  0  0  0  0\n  0  0  0  2  0  0\n") != std::string::npos);
  CHECK(parse_render_what("sc") == RenderWhat::constants);
  CHECK_THROWS_AS(parse_render_what("pretty"), std::invalid_argument);

  const auto j = to_json(rr);
  CHECK(j["determinant"] == "262144");
  CHECK(j["generators"].size() == 6);
  CHECK(j["mode"] == "resred");
}

TEST_CASE("mode names") {
  for (auto m : {ExpansionMode::full, ExpansionMode::resonant, ExpansionMode::reduced, ExpansionMode::resonant_reduced})
    CHECK(parse_mode(to_string(m)) == m);
  CHECK(parse_mode("resonant_reduced") == ExpansionMode::resonant_reduced);
  CHECK_THROWS_AS(parse_mode("half"), std::invalid_argument);
}

TEST_CASE("restricted modes match the reference restriction") {
  const StructureConstants sl2 = builtin_algebra("sl2");
  for (const auto& t : testing::commutative_catalog(4).tables) {
    const ExpandedAlgebra e = expand(sl2, t);
    const oracle::Cube full = oracle::expand(testing::cube(sl2), t.rows());
    if (find_zero(t)) {
      // brackets into the zero sector are dropped, the rest is the restriction
      const ExpandedAlgebra red = zero_reduce(e);
      oracle::Cube want = oracle::restrict_to(full, zero_based(red));
      CHECK(testing::cube(red.constants()) == want);
    }
    for (const auto& p : find_all_resonances(t)) {
      const ExpandedAlgebra r = resonant_subalgebra(e, p, kSl2Grading);
      CHECK(testing::cube(r.constants()) == oracle::restrict_to(full, zero_based(r)));
    }
  }
}

}  // TEST_SUITE
