#pragma once

#include <array>
#include <optional>
#include <vector>

#include "khov/diagram.hpp"
#include "khov/laurent.hpp"
#include "khov/state.hpp"

namespace khov {

// A partially smoothed diagram: choice[x] is 0 or 1 for a smoothed crossing, -1 if intact.
struct ExpansionLeaf {
  std::vector<int> choice;
  int r = 0;  // 1-smoothings among the smoothed crossings
  int c_plus = 0;
  int c_minus = 0;
  int writhe() const { return c_plus - c_minus; }
  std::vector<int> intact() const;
};

// One-circle states by filtering all 2^c states.
std::vector<KauffmanState> k1_states(const LinkDiagram& d);
// One-circle states from spanning trees of the Tait graph, sorted.
std::vector<KauffmanState> k1_states_via_trees(const LinkDiagram& d, std::optional<int> outer = std::nullopt);

// Identity ordering 0..c-1.
std::vector<int> identity_ordering(int c);

// Binary descent in the given crossing order; a crossing is expanded when both
// of its smoothings keep the diagram connected. Leaves come out 0-branch first.
std::vector<ExpansionLeaf> expansion(const LinkDiagram& d, const std::vector<int>& ordering);

ExpansionLeaf leaf_of(const LinkDiagram& d, const std::vector<int>& ordering, const KauffmanState& s);

// Writhe data of a connected, single-component partial smoothing.
ExpansionLeaf evaluate_leaf(const LinkDiagram& d, std::vector<int> choice);

// True iff the partial smoothing is connected as a plane graph (intact crossings join all four ends).
bool partial_connected(const LinkDiagram& d, const std::vector<int>& choice);

// True iff cutting both strands at crossing x disconnects the rest.
bool is_splitting(const LinkDiagram& d, const std::vector<int>& choice, int x);

LaurentPoly kauffman_via_trees(const LinkDiagram& d, const std::vector<int>& ordering);

struct STGenerator {
  KauffmanState state;
  int r = 0;
  int w_leaf = 0;
  int i = 0;
  std::array<int, 2> j{};  // r - 2w - 1, r - 2w + 1
};

std::vector<STGenerator> st_bigradings(const LinkDiagram& d, const std::vector<int>& ordering);

}  // namespace khov
