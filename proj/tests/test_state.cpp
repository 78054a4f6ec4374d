#include "doctest.h"
#include "khov/catalog.hpp"
#include "khov/state.hpp"
#include "oracles.hpp"

using namespace khov;

namespace {

std::vector<int> bits_of(std::uint64_t mask, int n) {
  std::vector<int> b(n);
  for (int i = 0; i < n; ++i) b[i] = (mask >> i) & 1;
  return b;
}

}  // namespace

TEST_CASE("state basics") {
  KauffmanState s = KauffmanState::from_mask(0b101, 3);
  CHECK(s.r() == 2);
  CHECK(s.to_string() == "101");
  CHECK(s.mask() == 0b101);
  s.set(1, true);
  CHECK(s.r() == 3);
}

TEST_CASE("circle counts agree with the dart-walking oracle") {
  for (const auto& name : standard_catalog()) {
    LinkDiagram d = catalog(name);
    if (d.num_crossings() > 10) continue;
    CircleCounter cc(d);
    int c = d.num_crossings();
    for (std::uint64_t m = 0; m < (1ull << c); ++m) {
      Resolution res = resolve(d, KauffmanState::from_mask(m, c));
      int expect = oracle::walk_circles(d, bits_of(m, c));
      CHECK(res.num_circles == expect);
      CHECK(cc.count(m) == expect);
    }
  }
}

TEST_CASE("every edge lies on exactly one circle") {
  LinkDiagram d = catalog("figure_eight");
  Resolution res = resolve(d, KauffmanState::from_mask(0b0110, 4));
  std::vector<int> seen(res.num_circles, 0);
  for (int e = 1; e <= d.num_edges(); ++e) {
    REQUIRE(res.circle_of_edge[e] >= 0);
    REQUIRE(res.circle_of_edge[e] < res.num_circles);
    ++seen[res.circle_of_edge[e]];
  }
  for (int k : seen) CHECK(k > 0);
}

TEST_CASE("single bit flips change the circle count by one") {
  for (const auto& name : standard_catalog()) {
    LinkDiagram d = catalog(name);
    int c = d.num_crossings();
    if (c > 10) continue;
    CircleCounter cc(d);
    for (std::uint64_t m = 0; m < (1ull << c); ++m)
      for (int x = 0; x < c; ++x) {
        int diff = cc.count(m) - cc.count(m ^ (1ull << x));
        CHECK((diff == 1 || diff == -1));
      }
  }
}

TEST_CASE("trivial resolutions") {
  LinkDiagram u = catalog("unlink(3)");
  CHECK(resolve(u, KauffmanState()).num_circles == 3);
  LinkDiagram t = catalog("trefoil");
  CHECK(resolve(t, KauffmanState::from_mask(0, 3)).num_circles == oracle::walk_circles(t, {0, 0, 0}));
  CHECK_THROWS(resolve(t, KauffmanState::from_mask(0, 2)));
}

TEST_CASE("crossing arcs record merge or split") {
  LinkDiagram t = catalog("trefoil");
  Resolution r = resolve(t, KauffmanState::from_mask(0, 3));
  for (int x = 0; x < 3; ++x) {
    Resolution flipped = resolve(t, KauffmanState::from_mask(1u << x, 3));
    bool merge = r.arcs[x][0] != r.arcs[x][1];
    CHECK(flipped.num_circles == r.num_circles + (merge ? -1 : 1));
  }
}
