#include "khov/tait.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <stdexcept>

#include "khov/error.hpp"
#include "khov/union_find.hpp"

namespace khov {

std::vector<int> outer_faces(const LinkDiagram& d, std::optional<int> outer) {
  std::vector<int> out(d.num_pieces());
  for (int p = 0; p < d.num_pieces(); ++p) out[p] = d.default_outer_face(p);
  if (outer) {
    if (*outer < 0 || *outer >= d.num_faces())
      throw Error(ErrorCode::EmbeddingUnavailable, "face " + std::to_string(*outer) + " does not exist");
    out[d.piece_of_face(*outer)] = *outer;
  }
  return out;
}

std::vector<int> checkerboard(const LinkDiagram& d, std::optional<int> outer) {
  const int nf = d.num_faces();
  std::vector<std::vector<int>> adj(nf);
  for (int e = 1; e <= d.num_edges(); ++e) {
    if (d.is_free_label(e)) continue;
    int l = d.left_face(e), r = d.right_face(e);
    adj[l].push_back(r);
    adj[r].push_back(l);
  }
  std::vector<int> color(nf, -1);
  for (int f0 : outer_faces(d, outer)) {
    color[f0] = 0;
    std::deque<int> queue{f0};
    while (!queue.empty()) {
      int f = queue.front();
      queue.pop_front();
      for (int g : adj[f]) {
        if (color[g] < 0) {
          color[g] = 1 - color[f];
          queue.push_back(g);
        } else if (color[g] == color[f]) {
          throw Error(ErrorCode::NonPlanar, "faces do not admit a checkerboard coloring");
        }
      }
    }
  }
  return color;
}

TaitGraph tait_graph(const LinkDiagram& d, std::optional<int> outer) {
  if (d.num_crossings() == 0 || !d.is_connected())
    throw Error(ErrorCode::DisconnectedDiagram, "Tait graphs need a connected diagram with crossings");
  std::vector<int> color = checkerboard(d, outer);
  TaitGraph g;
  g.outer_face = outer_faces(d, outer)[0];
  std::vector<int> vertex_of(d.num_faces(), -1);
  for (int f = 0; f < d.num_faces(); ++f)
    if (color[f] == 1) {
      vertex_of[f] = g.num_vertices++;
      g.vertex_face.push_back(f);
    }
  for (int x = 0; x < d.num_crossings(); ++x) {
    // Corner 1 sits between slots 1 and 2; corners 1 and 3 are merged by the 0-smoothing.
    if (color[d.face_at(x, 1)] == 1) {
      g.edges.emplace_back(vertex_of[d.face_at(x, 1)], vertex_of[d.face_at(x, 3)]);
      g.black_smoothing.push_back(0);
    } else {
      g.edges.emplace_back(vertex_of[d.face_at(x, 0)], vertex_of[d.face_at(x, 2)]);
      g.black_smoothing.push_back(1);
    }
  }
  return g;
}

Integer spanning_tree_count(const TaitGraph& g) {
  const int n = g.num_vertices;
  if (n <= 1) return 1;
  std::vector<std::vector<Integer>> lap(n, std::vector<Integer>(n, 0));
  for (auto [u, v] : g.edges) {
    if (u == v) continue;
    lap[u][u] += 1;
    lap[v][v] += 1;
    lap[u][v] -= 1;
    lap[v][u] -= 1;
  }
  // Bareiss elimination on the minor without the last row and column.
  const int m = n - 1;
  Integer prev = 1;
  int sign = 1;
  for (int k = 0; k < m; ++k) {
    int piv = k;
    while (piv < m && lap[piv][k] == 0) ++piv;
    if (piv == m) return 0;
    if (piv != k) {
      std::swap(lap[piv], lap[k]);
      sign = -sign;
    }
    for (int i = k + 1; i < m; ++i) {
      for (int j = k + 1; j < m; ++j) {
        lap[i][j] = (lap[i][j] * lap[k][k] - lap[i][k] * lap[k][j]);
        mpz_divexact(lap[i][j].get_mpz_t(), lap[i][j].get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = lap[k][k];
  }
  return sign * lap[m - 1][m - 1];
}

std::vector<std::vector<int>> spanning_trees(const TaitGraph& g) {
  std::vector<std::vector<int>> out;
  const int need = g.num_vertices - 1;
  const int ne = static_cast<int>(g.edges.size());
  std::vector<int> chosen;
  // Include/exclude search; union-find state is rebuilt per branch.
  std::function<void(int)> rec = [&](int k) {
    if (static_cast<int>(chosen.size()) == need) {
      out.push_back(chosen);
      return;
    }
    if (k == ne || ne - k < need - static_cast<int>(chosen.size())) return;
    UnionFind uf(g.num_vertices);
    for (int e : chosen) uf.unite(g.edges[e].first, g.edges[e].second);
    auto [u, v] = g.edges[k];
    if (uf.find(u) != uf.find(v)) {
      chosen.push_back(k);
      rec(k + 1);
      chosen.pop_back();
    }
    rec(k + 1);
  };
  rec(0);
  return out;
}

}  // namespace khov
