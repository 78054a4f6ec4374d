#include "khov/cube.hpp"

#include <bit>

#include "khov/error.hpp"

namespace khov {

int edge_sign(std::uint64_t from, int crossing) {
  std::uint64_t below = from & ((std::uint64_t{1} << crossing) - 1);
  return std::popcount(below) % 2 ? -1 : 1;
}

CubeEdge cube_edge(const LinkDiagram& d, const Resolution& src, const Resolution& dst,
                   std::uint64_t from, int crossing) {
  CubeEdge e;
  e.from = from;
  e.to = from | (std::uint64_t{1} << crossing);
  e.crossing = crossing;
  e.sign = edge_sign(from, crossing);
  e.merge = src.arcs[crossing][0] != src.arcs[crossing][1];
  e.circle_map.assign(src.num_circles, -1);
  for (int lab = 1; lab <= d.num_edges(); ++lab) e.circle_map[src.circle_of_edge[lab]] = dst.circle_of_edge[lab];
  return e;
}

Cube build_cube(const LinkDiagram& d, int cap) {
  const int c = d.num_crossings();
  if (c > cap || c > 62)
    throw Error(ErrorCode::TooManyCrossings, std::to_string(c) + " crossings exceed the cube cap " + std::to_string(cap));
  Cube cube;
  cube.dim = c;
  const std::uint64_t n = std::uint64_t{1} << c;
  cube.vertices.reserve(n);
  for (std::uint64_t m = 0; m < n; ++m) cube.vertices.push_back(resolve(d, KauffmanState::from_mask(m, c)));
  for (std::uint64_t m = 0; m < n; ++m)
    for (int x = 0; x < c; ++x)
      if (!((m >> x) & 1)) cube.edges.push_back(cube_edge(d, cube.vertices[m], cube.vertices[m | (1ull << x)], m, x));
  for (std::uint64_t m = 0; m < n; ++m)
    for (int x = 0; x < c; ++x)
      for (int y = x + 1; y < c; ++y) {
        if (((m >> x) & 1) || ((m >> y) & 1)) continue;
        ++cube.squares;
        const std::uint64_t mx = m | (1ull << x), my = m | (1ull << y);
        int prod = edge_sign(m, x) * edge_sign(mx, y) * edge_sign(m, y) * edge_sign(my, x);
        if (prod != -1) cube.squares_anticommute = false;
      }
  return cube;
}

}  // namespace khov
