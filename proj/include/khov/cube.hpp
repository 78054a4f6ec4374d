#pragma once

#include <cstdint>
#include <vector>

#include "khov/diagram.hpp"
#include "khov/state.hpp"

namespace khov {

struct CubeEdge {
  std::uint64_t from = 0, to = 0;
  int crossing = -1;
  bool merge = false;
  int sign = 1;                 // (-1)^(number of 1s before the flipped crossing)
  std::vector<int> circle_map;  // circle of `from` -> circle of `to`
};

struct Cube {
  int dim = 0;
  std::vector<Resolution> vertices;  // indexed by state mask
  std::vector<CubeEdge> edges;       // by source mask, then crossing
  long squares = 0;
  bool squares_anticommute = true;
};

int edge_sign(std::uint64_t from, int crossing);

// Merge/split data of the edge from `from` flipping `crossing` (which must be 0 in `from`).
CubeEdge cube_edge(const LinkDiagram& d, const Resolution& src, const Resolution& dst,
                   std::uint64_t from, int crossing);

Cube build_cube(const LinkDiagram& d, int cap = 16);

}  // namespace khov
