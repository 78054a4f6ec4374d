#include "doctest.h"
#include "khov/bracket.hpp"
#include "khov/error.hpp"
#include "khov/pairings.hpp"
#include "oracles.hpp"

using namespace khov;

TEST_CASE("pairing counts equal binomials and brute force") {
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; 2 * k <= n; ++k) {
      auto ps = pairings({n}, {k});
      CHECK(Integer(static_cast<long>(ps.size())) == binomial(n - k, k));
      CHECK(static_cast<long>(ps.size()) == oracle::brute_pairings(n, k));
      for (const auto& p : ps) {
        REQUIRE(p.pairs.size() == 1);
        for (std::size_t a = 1; a < p.pairs[0].size(); ++a) CHECK(p.pairs[0][a] >= p.pairs[0][a - 1] + 2);
      }
    }
}

TEST_CASE("small pairing examples") {
  CHECK(pairings({4}, {1}).size() == 3);
  CHECK(pairings({5}, {0}).size() == 1);
  CHECK(pairings({4, 3}, {2, 1}).size() == 2);
  CHECK_THROWS_AS(pairings({3}, {2}), Error);
  CHECK_THROWS_AS(pairings({3}, {-1}), Error);
  CHECK_THROWS_AS(pairings({3, 2}, {1}), Error);
}

TEST_CASE("gamma graphs") {
  GammaGraph g2 = gamma_graph({2});
  CHECK(g2.vertices.size() == 2);
  CHECK(g2.edges.size() == 1);
  GammaGraph g3 = gamma_graph({3});
  CHECK(g3.vertices.size() == 3);
  CHECK(g3.edges.size() == 2);
  GammaGraph g43 = gamma_graph({4, 3});
  // (1 + 3 + 1) * (1 + 2) pairings.
  CHECK(g43.vertices.size() == 15);
  for (auto [a, b] : g43.edges) CHECK(g43.vertices[b].degree() == g43.vertices[a].degree() + 1);
  for (const auto& sq : g43.squares) {
    CHECK(g43.vertices[sq[3]].degree() == g43.vertices[sq[0]].degree() + 2);
  }
  CHECK_FALSE(g43.squares.empty());
}
