#include "khov/spanning_tree.hpp"

#include <algorithm>
#include <functional>
#include <numeric>

#include "khov/error.hpp"
#include "khov/tait.hpp"
#include "khov/union_find.hpp"

namespace khov {

namespace {

void require_connected(const LinkDiagram& d) {
  if (!d.is_connected()) throw Error(ErrorCode::DisconnectedDiagram, "the diagram is not connected");
}

void check_ordering(const LinkDiagram& d, const std::vector<int>& ordering) {
  std::vector<int> sorted = ordering;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != identity_ordering(d.num_crossings()))
    throw Error(ErrorCode::BadOrdering, "ordering is not a permutation of the crossings");
}

UnionFind fragments(const LinkDiagram& d, const std::vector<int>& choice, int skip) {
  UnionFind uf(d.num_edges() + 1);
  for (int x = 0; x < d.num_crossings(); ++x) {
    if (x == skip) continue;
    const auto& e = d.crossings()[x].e;
    if (choice[x] < 0) {
      for (int k = 1; k < 4; ++k) uf.unite(e[0], e[k]);
    } else {
      for (const auto& pr : smoothing_pairs(choice[x] == 1)) uf.unite(e[pr[0]], e[pr[1]]);
    }
  }
  return uf;
}

}  // namespace

std::vector<int> ExpansionLeaf::intact() const {
  std::vector<int> out;
  for (int x = 0; x < static_cast<int>(choice.size()); ++x)
    if (choice[x] < 0) out.push_back(x);
  return out;
}

std::vector<int> identity_ordering(int c) {
  std::vector<int> o(c);
  std::iota(o.begin(), o.end(), 0);
  return o;
}

bool partial_connected(const LinkDiagram& d, const std::vector<int>& choice) {
  if (d.num_edges() == 0) return true;
  UnionFind uf = fragments(d, choice, -1);
  return uf.classes() == 2;  // slot 0 of the union-find is unused
}

bool is_splitting(const LinkDiagram& d, const std::vector<int>& choice, int x) {
  UnionFind uf = fragments(d, choice, x);
  // The four ends at x are the cut points; the remainder is
  // disconnected iff those ends fall into more than one class.
  const auto& e = d.crossings()[x].e;
  int root = uf.find(e[0]);
  for (int k = 1; k < 4; ++k)
    if (uf.find(e[k]) != root) return true;
  return false;
}

std::vector<KauffmanState> k1_states(const LinkDiagram& d) {
  require_connected(d);
  const int c = d.num_crossings();
  if (c > 30) throw Error(ErrorCode::TooManyCrossings, "brute K1 enumeration is limited to 30 crossings");
  CircleCounter cc(d);
  std::vector<KauffmanState> out;
  for (std::uint64_t m = 0; m < (std::uint64_t{1} << c); ++m)
    if (cc.count(m) == 1) out.push_back(KauffmanState::from_mask(m, c));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<KauffmanState> k1_states_via_trees(const LinkDiagram& d, std::optional<int> outer) {
  require_connected(d);
  if (d.num_crossings() == 0) return {KauffmanState()};
  TaitGraph g = tait_graph(d, outer);
  std::vector<KauffmanState> out;
  for (const auto& tree : spanning_trees(g)) {
    KauffmanState s(std::vector<std::uint8_t>(d.num_crossings()));
    for (int x = 0; x < d.num_crossings(); ++x) s.set(x, g.black_smoothing[x] == 0);
    for (int x : tree) s.set(x, g.black_smoothing[x] == 1);
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end());
  return out;
}

ExpansionLeaf evaluate_leaf(const LinkDiagram& d, std::vector<int> choice) {
  ExpansionLeaf leaf;
  leaf.choice = std::move(choice);
  for (int v : leaf.choice) leaf.r += v == 1;
  if (d.num_crossings() == 0) return leaf;
  // Walk the single strand of the residual diagram. The walk enters
  // (x, slot) and leaves through the partner slot.
  std::vector<int> under_dir(d.num_crossings(), 0), over_dir(d.num_crossings(), 0);
  const Dart start{0, 0};
  Dart at = start;
  int steps = 0;
  do {
    const int x = at.crossing, s = at.slot;
    int out;
    if (leaf.choice[x] < 0) {
      out = (s + 2) % 4;
      if (s % 2 == 0)
        under_dir[x] = s == 0 ? 1 : -1;
      else
        over_dir[x] = s == 3 ? 1 : -1;
    } else {
      out = -1;
      for (const auto& pr : smoothing_pairs(leaf.choice[x] == 1)) {
        if (pr[0] == s) out = pr[1];
        if (pr[1] == s) out = pr[0];
      }
    }
    at = d.other_end(Dart{x, out});
    if (++steps > 4 * d.num_crossings()) break;
  } while (!(at == start));
  for (int x = 0; x < d.num_crossings(); ++x) {
    if (leaf.choice[x] >= 0) continue;
    if (under_dir[x] == 0 || over_dir[x] == 0)
      throw Error(ErrorCode::NotConnectedState, "residual diagram has more than one component");
    (under_dir[x] * over_dir[x] > 0 ? leaf.c_plus : leaf.c_minus)++;
  }
  return leaf;
}

std::vector<ExpansionLeaf> expansion(const LinkDiagram& d, const std::vector<int>& ordering) {
  require_connected(d);
  check_ordering(d, ordering);
  std::vector<ExpansionLeaf> leaves;
  std::vector<int> choice(d.num_crossings(), -1);
  std::function<void(std::size_t)> descend = [&](std::size_t k) {
    if (k == ordering.size()) {
      leaves.push_back(evaluate_leaf(d, choice));
      return;
    }
    const int x = ordering[k];
    choice[x] = 0;
    const bool zero_ok = partial_connected(d, choice);
    choice[x] = 1;
    const bool one_ok = partial_connected(d, choice);
    if (zero_ok && one_ok) {
      choice[x] = 0;
      descend(k + 1);
      choice[x] = 1;
      descend(k + 1);
    } else {
      choice[x] = -1;
      descend(k + 1);
    }
    choice[x] = -1;
  };
  descend(0);
  return leaves;
}

ExpansionLeaf leaf_of(const LinkDiagram& d, const std::vector<int>& ordering, const KauffmanState& s) {
  require_connected(d);
  check_ordering(d, ordering);
  if (s.size() != d.num_crossings() || resolve(d, s).num_circles != 1)
    throw Error(ErrorCode::NotConnectedState, "state " + s.to_string() + " does not have exactly one circle");
  std::vector<int> choice(d.num_crossings(), -1);
  for (int x : ordering) {
    choice[x] = 0;
    const bool zero_ok = partial_connected(d, choice);
    choice[x] = 1;
    const bool one_ok = partial_connected(d, choice);
    choice[x] = zero_ok && one_ok ? static_cast<int>(s.bit(x)) : -1;
  }
  return evaluate_leaf(d, std::move(choice));
}

LaurentPoly kauffman_via_trees(const LinkDiagram& d, const std::vector<int>& ordering) {
  LaurentPoly sum;
  for (const ExpansionLeaf& leaf : expansion(d, ordering)) {
    // <D|D'> = (-q)^{r(D,D')}; an R1-trivial leaf contributes q^{-1} per positive
    // and -q^2 per negative curl.
    const int r = leaf.r, cp = leaf.c_plus, cm = leaf.c_minus;
    const int sign = (r + cm) % 2 ? -1 : 1;
    sum += LaurentPoly::monomial(r - cp + 2 * cm, sign) * LaurentPoly::circle();
  }
  return sum;
}

std::vector<STGenerator> st_bigradings(const LinkDiagram& d, const std::vector<int>& ordering) {
  std::vector<STGenerator> out;
  for (const KauffmanState& s : k1_states(d)) {
    ExpansionLeaf leaf = leaf_of(d, ordering, s);
    STGenerator g;
    g.state = s;
    g.r = s.r();
    g.w_leaf = leaf.writhe();
    g.i = g.r - g.w_leaf;
    g.j = {g.r - 2 * g.w_leaf - 1, g.r - 2 * g.w_leaf + 1};
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace khov
