#include "doctest.h"
#include "khov/builder.hpp"
#include "khov/catalog.hpp"
#include "khov/checks.hpp"
#include "khov/error.hpp"
#include "khov/homology.hpp"

using namespace khov;

namespace {

HomologyGroup Z(int r, std::vector<Integer> t = {}) { return {r, std::move(t)}; }

LaurentPoly t_poly(std::initializer_list<std::pair<int, int>> terms) {
  LaurentPoly p;
  for (auto [e, c] : terms) p += LaurentPoly::monomial(e, c);
  return p;
}

std::map<Bidegree, HomologyGroup> nonzero(const GradedHomology& h) {
  std::map<Bidegree, HomologyGroup> out;
  for (const auto& [k, v] : h)
    if (!v.group.is_zero()) out[k] = v.group;
  return out;
}

}  // namespace

TEST_CASE("unknot and unlinks") {
  auto h = nonzero(homology(build_complex(catalog("unknot"))));
  CHECK(h == std::map<Bidegree, HomologyGroup>{{{0, -1}, Z(1)}, {{0, 1}, Z(1)}});
  auto k = nonzero(homology(build_complex(catalog("unknot_double_kinked"))));
  CHECK(k == h);
  auto u2 = nonzero(homology(build_complex(catalog("unlink(2)"))));
  CHECK(u2.at({0, 0}) == Z(2));
}

TEST_CASE("negative trefoil table") {
  auto h = nonzero(homology(build_complex(catalog("trefoil"))));
  std::map<Bidegree, HomologyGroup> expect{{{-3, -9}, Z(1)}, {{-2, -7}, Z(0, {2})}, {{-2, -5}, Z(1)}, {{0, -3}, Z(1)},
                                           {{0, -1}, Z(1)}};
  CHECK(h == expect);
}

TEST_CASE("reduction does not change homology") {
  for (std::string name : {"trefoil", "figure_eight", "hopf+", "granny", "torus_link(2,4)", "unknot_kinked-"}) {
    CAPTURE(name);
    BigradedComplex c = build_complex(catalog(name));
    HomologyOptions raw;
    raw.reduce = false;
    GradedHomology a = homology(c), b = homology(c, raw);
    CHECK(nonzero(a) == nonzero(b));
    BigradedComplex r = gauss_reduce(c);
    CHECK_FALSE(square_defect(r).has_value());
    CHECK(nonzero(homology(r, raw)) == nonzero(a));
    CHECK(r.total_rank() <= c.total_rank());
  }
}

TEST_CASE("threaded homology matches serial") {
  BigradedComplex c = build_complex(catalog("mutant_L(3,3)"));
  HomologyOptions par;
  par.threads = 4;
  GradedHomology a = homology(c), b = homology(c, par);
  REQUIRE(a.size() == b.size());
  for (const auto& [k, v] : a) {
    CHECK(b.at(k).group == v.group);
    CHECK(b.at(k).chain_rank == v.chain_rank);
    CHECK(b.at(k).d_rank == v.d_rank);
  }
}

TEST_CASE("chain and differential ranks are consistent") {
  GradedHomology h = homology(build_complex(catalog("figure_eight")));
  for (const auto& [k, v] : h) {
    auto prev = h.find({k.first - 1, k.second});
    int in = prev == h.end() ? 0 : prev->second.d_rank;
    CHECK(v.chain_rank == v.group.rank + in + v.d_rank);
  }
}

TEST_CASE("torus link Poincare polynomials at q = 1") {
  CHECK(poincare(catalog("torus_link(2,3)")).I == t_poly({{0, 2}, {-2, 1}, {-3, 1}}));
  CHECK(poincare(catalog("torus_link(2,4)")).I == t_poly({{0, 2}, {-2, 1}, {-3, 1}, {-4, 2}}));
}

TEST_CASE("Poincare polynomial is multiplicative under disjoint union") {
  LinkDiagram a = catalog("trefoil"), b = catalog("hopf+");
  TwoVarPoly pa = poincare(a).P, pb = poincare(b).P, pu = poincare(disjoint_union(a, b)).P;
  CHECK(pu == pa * pb);
}

TEST_CASE("homology refuses filtered theories and non-complexes") {
  ComplexOptions o;
  o.frob = FrobeniusSpec::lee();
  CHECK_THROWS_AS(homology(build_complex(catalog("trefoil"), o)), Error);
  BigradedComplex c = build_complex(catalog("hopf+"));
  c.d[0].add(0, 0, 5);
  c.d[1].add(0, 0, 5);
  CHECK_THROWS_AS(homology(c), Error);
}

TEST_CASE("group rendering and direct sums") {
  CHECK(Z(0).to_string() == "0");
  CHECK(Z(1).to_string() == "Z");
  CHECK(Z(2, {2}).to_string() == "Z^2 + Z/2");
  CHECK(direct_sum(Z(1, {2}), Z(0, {3})) == Z(1, {6}));
  CHECK(Z(0, {2, 2}).z2_count() == 2);
  CHECK(Z(0, {2, 2}).to_string() == "(Z/2)^2");
}

TEST_CASE("ungraded and rational homology of Lee complex") {
  ComplexOptions o;
  o.frob = FrobeniusSpec::lee();
  auto c = build_complex(catalog("trefoil"), o);
  int total = 0;
  for (auto [i, b] : rational_betti(c)) total += b;
  CHECK(total == 2);
  auto u = ungraded_homology(c);
  CHECK(u.at(0).rank == 2);
}

TEST_CASE("bracket-level homology of the positive trefoil") {
  auto h = nonzero(bracket_homology(catalog("trefoil+")));
  std::map<Bidegree, HomologyGroup> expect{{{0, -2}, Z(1)}, {{0, 0}, Z(1)}, {{2, 2}, Z(1)}, {{3, 4}, Z(0, {2})}, {{3, 6}, Z(1)}};
  CHECK(h == expect);
}

TEST_CASE("JSON export") {
  std::string s = homology_to_json(homology(build_complex(catalog("unknot"))));
  CHECK(s.find("rank") != std::string::npos);
}
