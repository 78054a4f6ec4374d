#include "khov/state.hpp"

#include <algorithm>
#include <stdexcept>

#include "khov/error.hpp"
#include "khov/union_find.hpp"

namespace khov {

KauffmanState::KauffmanState(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto& b : bits_) b = b ? 1 : 0;
}

KauffmanState KauffmanState::from_mask(std::uint64_t mask, int n) {
  if (n > 64) throw std::invalid_argument("mask states support at most 64 crossings");
  std::vector<std::uint8_t> bits(n);
  for (int i = 0; i < n; ++i) bits[i] = (mask >> i) & 1;
  return KauffmanState(std::move(bits));
}

int KauffmanState::r() const { return static_cast<int>(std::count(bits_.begin(), bits_.end(), 1)); }

std::uint64_t KauffmanState::mask() const {
  if (bits_.size() > 64) throw std::logic_error("state too large for a mask");
  std::uint64_t m = 0;
  for (size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) m |= std::uint64_t{1} << i;
  return m;
}

std::string KauffmanState::to_string() const {
  std::string s;
  for (auto b : bits_) s += b ? '1' : '0';
  return s;
}

Resolution resolve(const LinkDiagram& d, const KauffmanState& s) {
  if (s.size() != d.num_crossings())
    throw Error(ErrorCode::BadBounds, "state has " + std::to_string(s.size()) + " bits for " +
                                          std::to_string(d.num_crossings()) + " crossings");
  const int ne = d.num_edges();
  UnionFind uf(ne + 1);
  for (int x = 0; x < d.num_crossings(); ++x)
    for (const auto& pr : smoothing_pairs(s.bit(x))) uf.unite(d.edge(x, pr[0]), d.edge(x, pr[1]));
  Resolution res;
  res.r = s.r();
  res.circle_of_edge.assign(ne + 1, -1);
  std::vector<int> id_of_root(ne + 1, -1);
  for (int e = 1; e <= ne; ++e) {
    int root = uf.find(e);
    if (id_of_root[root] < 0) id_of_root[root] = res.num_circles++;
    res.circle_of_edge[e] = id_of_root[root];
  }
  res.arcs.resize(d.num_crossings());
  for (int x = 0; x < d.num_crossings(); ++x)
    res.arcs[x] = {res.circle_of_edge[d.edge(x, 0)], res.circle_of_edge[d.edge(x, 2)]};
  return res;
}

CircleCounter::CircleCounter(const LinkDiagram& d) : edges_(d.num_edges()), parent_(d.num_edges() + 1) {
  if (d.num_crossings() > 64) throw std::invalid_argument("CircleCounter supports at most 64 crossings");
  for (const auto& c : d.crossings()) slots_.push_back(c.e);
}

int CircleCounter::find(int x) {
  while (parent_[x] != x) {
    parent_[x] = parent_[parent_[x]];
    x = parent_[x];
  }
  return x;
}

int CircleCounter::count(std::uint64_t mask) {
  for (int i = 0; i <= edges_; ++i) parent_[i] = i;
  int circles = edges_;
  auto join = [&](int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) {
      parent_[a] = b;
      --circles;
    }
  };
  for (size_t x = 0; x < slots_.size(); ++x) {
    const auto& e = slots_[x];
    if ((mask >> x) & 1) {
      join(e[0], e[3]);
      join(e[1], e[2]);
    } else {
      join(e[0], e[1]);
      join(e[2], e[3]);
    }
  }
  return circles;
}

}  // namespace khov
