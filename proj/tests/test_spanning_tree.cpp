#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "khov/bracket.hpp"
#include "khov/catalog.hpp"
#include "khov/error.hpp"
#include "khov/spanning_tree.hpp"
#include "khov/state.hpp"
#include "khov/tait.hpp"
#include "oracles.hpp"

using namespace khov;

namespace {

std::vector<std::string> small_connected() {
  std::vector<std::string> out;
  for (const auto& n : standard_catalog()) {
    LinkDiagram d = catalog(n);
    if (d.is_connected() && d.num_crossings() > 0 && d.num_crossings() <= 8) out.push_back(n);
  }
  return out;
}

}  // namespace

TEST_CASE("one-circle states agree with spanning trees and Kirchhoff") {
  for (const auto& name : small_connected()) {
    CAPTURE(name);
    LinkDiagram d = catalog(name);
    auto brute = k1_states(d);
    CHECK(brute == k1_states_via_trees(d));
    CHECK(Integer(static_cast<long>(brute.size())) == oracle::kirchhoff(tait_graph(d)));
    for (const auto& s : brute) CHECK(oracle::walk_circles(d, std::vector<int>(s.bits().begin(), s.bits().end())) == 1);
  }
}

TEST_CASE("tree expansion reproduces the bracket under random orderings") {
  std::mt19937 rng(20261014);
  for (const auto& name : small_connected()) {
    CAPTURE(name);
    LinkDiagram d = catalog(name);
    const LaurentPoly expect = kauffman_bracket(d);
    std::vector<int> ord = identity_ordering(d.num_crossings());
    CHECK(kauffman_via_trees(d, ord) == expect);
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(ord.begin(), ord.end(), rng);
      CAPTURE(trial);
      CHECK(kauffman_via_trees(d, ord) == expect);
    }
  }
}

TEST_CASE("leaves are connected single-circle partial smoothings") {
  LinkDiagram d = catalog("figure_eight");
  auto ord = identity_ordering(d.num_crossings());
  auto leaves = expansion(d, ord);
  CHECK(static_cast<std::size_t>(std::distance(leaves.begin(), leaves.end())) == k1_states(d).size());
  for (const auto& leaf : leaves) {
    CHECK(partial_connected(d, leaf.choice));
    for (int x : leaf.intact()) CHECK(is_splitting(d, leaf.choice, x));
    ExpansionLeaf again = evaluate_leaf(d, leaf.choice);
    CHECK(again.writhe() == leaf.writhe());
  }
}

TEST_CASE("bigradings satisfy i = r - w and j = r - 2w -+ 1") {
  for (std::string name : {"trefoil+", "trefoil-", "figure_eight", "granny"}) {
    CAPTURE(name);
    LinkDiagram d = catalog(name);
    auto ord = identity_ordering(d.num_crossings());
    auto gens = st_bigradings(d, ord);
    CHECK(gens.size() == k1_states(d).size());
    for (const auto& g : gens) {
      CHECK(g.i == g.r - g.w_leaf);
      CHECK(g.j[0] == g.r - 2 * g.w_leaf - 1);
      CHECK(g.j[1] == g.r - 2 * g.w_leaf + 1);
      ExpansionLeaf leaf = leaf_of(d, ord, g.state);
      for (int x = 0; x < d.num_crossings(); ++x)
        if (leaf.choice[x] >= 0) CHECK(leaf.choice[x] == static_cast<int>(g.state.bit(x)));
    }
  }
}

// Generator pairs sit at j = r - 2w -+ 1 around the shift r - 2w.
TEST_CASE("trefoil+ bigradings") {
  LinkDiagram d = catalog("trefoil+");
  auto gens = st_bigradings(d, identity_ordering(3));
  std::vector<std::pair<int, int>> got;
  for (const auto& g : gens) got.push_back({g.i, (g.j[0] + g.j[1]) / 2});
  std::sort(got.begin(), got.end());
  CHECK(got == std::vector<std::pair<int, int>>{{0, -1}, {2, 3}, {3, 5}});
}

TEST_CASE("black smoothing count is constant on tree states") {
  LinkDiagram d = catalog("torus_link(2,5)");
  TaitGraph g = tait_graph(d);
  for (const auto& tree : spanning_trees(g)) {
    CHECK(tree.size() == static_cast<std::size_t>(g.num_vertices - 1));
  }
}

TEST_CASE("spanning-tree errors") {
  LinkDiagram d = catalog("trefoil");
  CHECK_THROWS_AS(expansion(d, {0, 1}), Error);
  CHECK_THROWS_AS(expansion(d, {0, 0, 1}), Error);
  CHECK_THROWS_AS(leaf_of(d, identity_ordering(3), KauffmanState({0, 0, 0})), Error);
}
