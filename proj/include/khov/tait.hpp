#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "khov/diagram.hpp"
#include "khov/integer.hpp"

namespace khov {

// Face colors of a checkerboard coloring: 0 white, 1 black. Each piece's outer
// face is white; `outer` overrides the outer face of the piece containing it.
std::vector<int> checkerboard(const LinkDiagram& d, std::optional<int> outer = std::nullopt);

// Outer face of every piece under an optional override.
std::vector<int> outer_faces(const LinkDiagram& d, std::optional<int> outer = std::nullopt);

struct TaitGraph {
  int num_vertices = 0;
  std::vector<std::pair<int, int>> edges;  // edge k belongs to crossing k
  std::vector<int> vertex_face;            // black face of each vertex
  int outer_face = -1;
  std::vector<int> black_smoothing;        // per crossing: the smoothing joining its black corners
};

TaitGraph tait_graph(const LinkDiagram& d, std::optional<int> outer = std::nullopt);

// Matrix-tree count; loops are ignored and parallel edges counted.
Integer spanning_tree_count(const TaitGraph& g);

// All spanning trees as sorted edge-index lists, in lexicographic order.
std::vector<std::vector<int>> spanning_trees(const TaitGraph& g);

}  // namespace khov
