#include "khov/pairings.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "khov/error.hpp"

namespace khov {

int Pairing::degree() const {
  int d = 0;
  for (const auto& p : pairs) d += static_cast<int>(p.size());
  return d;
}

namespace {

// Choices of k disjoint neighbor pairs among n dots, each as sorted lower dots.
std::vector<std::vector<int>> line_pairings(int n, int k) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur;
  std::function<void(int)> rec = [&](int first) {
    if (static_cast<int>(cur.size()) == k) {
      out.push_back(cur);
      return;
    }
    for (int i = first; i + 1 <= n; ++i) {
      cur.push_back(i);
      rec(i + 2);
      cur.pop_back();
    }
  };
  rec(1);
  return out;
}

}  // namespace

std::vector<Pairing> pairings(const std::vector<int>& n, const std::vector<int>& k) {
  if (n.size() != k.size()) throw Error(ErrorCode::BadBounds, "dot and pair counts differ in length");
  for (size_t j = 0; j < n.size(); ++j)
    if (n[j] < 0 || k[j] < 0 || 2 * k[j] > n[j])
      throw Error(ErrorCode::BadBounds, "need 0 <= k <= floor(n/2) on every component");
  std::vector<Pairing> out{Pairing{}};
  for (size_t j = 0; j < n.size(); ++j) {
    auto lines = line_pairings(n[j], k[j]);
    std::vector<Pairing> next;
    for (const auto& p : out)
      for (const auto& line : lines) {
        Pairing q = p;
        q.pairs.push_back(line);
        next.push_back(std::move(q));
      }
    out = std::move(next);
  }
  return out;
}

GammaGraph gamma_graph(const std::vector<int>& n) {
  GammaGraph g;
  std::vector<int> k(n.size(), 0);
  for (;;) {
    auto ps = pairings(n, k);
    g.vertices.insert(g.vertices.end(), ps.begin(), ps.end());
    size_t i = 0;
    while (i < n.size() && k[i] == n[i] / 2) k[i++] = 0;
    if (i == n.size()) break;
    ++k[i];
  }
  std::sort(g.vertices.begin(), g.vertices.end(), [](const Pairing& a, const Pairing& b) {
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return a < b;
  });
  std::map<Pairing, int> index;
  for (size_t v = 0; v < g.vertices.size(); ++v) index[g.vertices[v]] = static_cast<int>(v);

  // Children of a vertex: add one pair disjoint from existing ones.
  std::vector<std::vector<int>> children(g.vertices.size());
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    const Pairing& p = g.vertices[v];
    for (size_t j = 0; j < n.size(); ++j) {
      for (int i = 1; i + 1 <= n[j]; ++i) {
        bool clash = false;
        for (int a : p.pairs[j]) clash = clash || std::abs(a - i) <= 1;
        if (clash) continue;
        Pairing q = p;
        q.pairs[j].push_back(i);
        std::sort(q.pairs[j].begin(), q.pairs[j].end());
        int w = index.at(q);
        g.edges.emplace_back(static_cast<int>(v), w);
        children[v].push_back(w);
      }
    }
  }
  std::sort(g.edges.begin(), g.edges.end());
  std::map<std::pair<int, int>, bool> has_edge;
  for (auto e : g.edges) has_edge[e] = true;
  for (size_t v = 0; v < g.vertices.size(); ++v) {
    auto& ch = children[v];
    std::sort(ch.begin(), ch.end());
    for (size_t a = 0; a < ch.size(); ++a)
      for (size_t b = a + 1; b < ch.size(); ++b)
        for (int top : children[ch[a]])
          if (has_edge.count({ch[b], top})) g.squares.push_back({static_cast<int>(v), ch[a], ch[b], top});
  }
  return g;
}

}  // namespace khov
