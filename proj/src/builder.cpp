#include "khov/builder.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "khov/error.hpp"
#include "khov/union_find.hpp"

namespace khov {

long RawDiagram::key(long id) const {
  auto it = order_key.find(id);
  return it == order_key.end() ? id : it->second;
}

LinkDiagram canonicalize(const RawDiagram& raw) {
  struct Ends {
    Dart head, tail;
    int heads = 0, tails = 0;
  };
  std::map<long, Ends> ends;
  const int nx = static_cast<int>(raw.crossings.size());
  for (int x = 0; x < nx; ++x) {
    const RawCrossing& c = raw.crossings[x];
    if (c.over_in != 1 && c.over_in != 3) throw std::logic_error("over_in must be 1 or 3");
    for (int s = 0; s < 4; ++s) {
      Ends& en = ends[c.e[s]];
      if (s == 0 || s == c.over_in) {
        en.head = {x, s};
        ++en.heads;
      } else {
        en.tail = {x, s};
        ++en.tails;
      }
    }
  }
  for (const auto& [id, en] : ends)
    if (en.heads != 1 || en.tails != 1)
      throw Error(ErrorCode::BadNumbering, "edge " + std::to_string(id) + " is not oriented consistently");

  struct Comp {
    std::vector<long> ids;
    long key;
  };
  std::vector<Comp> comps;
  std::set<long> visited;
  for (const auto& [id0, en0] : ends) {
    if (visited.count(id0)) continue;
    Comp comp;
    long cur = id0;
    do {
      comp.ids.push_back(cur);
      visited.insert(cur);
      Dart h = ends.at(cur).head;
      cur = raw.crossings[h.crossing].e[(h.slot + 2) % 4];
    } while (cur != id0);
    bool has_under = false;
    for (long id : comp.ids) has_under = has_under || ends.at(id).head.slot == 0;
    size_t start = 0;
    if (comp.ids.size() == 2 && !has_under) {
      start = ends.at(comp.ids[0]).head.crossing < ends.at(comp.ids[1]).head.crossing ? 0 : 1;
    } else {
      for (size_t k = 1; k < comp.ids.size(); ++k)
        if (raw.key(comp.ids[k]) < raw.key(comp.ids[start])) start = k;
    }
    std::rotate(comp.ids.begin(), comp.ids.begin() + static_cast<long>(start), comp.ids.end());
    comp.key = raw.key(comp.ids[0]);
    for (long id : comp.ids) comp.key = std::min(comp.key, raw.key(id));
    comps.push_back(std::move(comp));
  }
  for (long k : raw.free_keys) comps.push_back({{}, k});
  std::stable_sort(comps.begin(), comps.end(), [](const Comp& a, const Comp& b) { return a.key < b.key; });

  std::map<long, int> label;
  std::vector<int> frees;
  int next = 1;
  for (const auto& comp : comps) {
    if (comp.ids.empty()) {
      frees.push_back(next++);
      continue;
    }
    for (long id : comp.ids) label[id] = next++;
  }
  std::vector<Crossing> crossings(nx);
  for (int x = 0; x < nx; ++x)
    for (int s = 0; s < 4; ++s) crossings[x].e[s] = label.at(raw.crossings[x].e[s]);
  LinkDiagram d(std::move(crossings), std::move(frees));
  for (int x = 0; x < nx; ++x)
    if (d.sign(x) != (raw.crossings[x].over_in == 3 ? 1 : -1))
      throw std::logic_error("canonicalize lost the orientation at crossing " + std::to_string(x));
  return d;
}

RawDiagram to_raw(const LinkDiagram& d, long offset) {
  RawDiagram raw;
  for (int x = 0; x < d.num_crossings(); ++x) {
    RawCrossing rc;
    for (int s = 0; s < 4; ++s) rc.e[s] = d.edge(x, s) + offset;
    rc.over_in = d.over_in_slot(x);
    raw.crossings.push_back(rc);
  }
  for (int f : d.free_labels()) raw.free_keys.push_back(f + offset);
  return raw;
}

namespace {

void append(RawDiagram& into, const RawDiagram& from) {
  into.crossings.insert(into.crossings.end(), from.crossings.begin(), from.crossings.end());
  into.free_keys.insert(into.free_keys.end(), from.free_keys.begin(), from.free_keys.end());
  for (const auto& kv : from.order_key) into.order_key.insert(kv);
}

void replace_id(RawDiagram& raw, long from, long to) {
  for (auto& c : raw.crossings)
    for (auto& id : c.e)
      if (id == from) id = to;
}

void check_edge(const LinkDiagram& d, int e) {
  if (e < 1 || e > d.num_edges())
    throw Error(ErrorCode::EdgeOutOfRange, "edge " + std::to_string(e) + " not in 1.." + std::to_string(d.num_edges()));
}

}  // namespace

LinkDiagram braid_closure(int strands, const std::vector<int>& word) {
  if (strands < 1) throw Error(ErrorCode::BadBounds, "a braid needs at least one strand");
  RawDiagram raw;
  long next_id = 1;
  std::vector<long> bottom(strands), cur(strands);
  for (int p = 0; p < strands; ++p) bottom[p] = cur[p] = next_id++;
  for (int g : word) {
    int i = std::abs(g) - 1;
    if (g == 0 || i + 1 >= strands)
      throw Error(ErrorCode::BadBounds, "generator " + std::to_string(g) + " on " + std::to_string(strands) + " strands");
    long bl = cur[i], br = cur[i + 1], tl = next_id++, tr = next_id++;
    RawCrossing rc;
    if (g > 0) {
      rc.e = {br, tr, tl, bl};
      rc.over_in = 3;
    } else {
      rc.e = {bl, br, tr, tl};
      rc.over_in = 1;
    }
    raw.crossings.push_back(rc);
    cur[i] = tl;
    cur[i + 1] = tr;
  }
  for (int p = 0; p < strands; ++p) {
    if (cur[p] == bottom[p]) {
      raw.free_keys.push_back(bottom[p]);
    } else {
      replace_id(raw, bottom[p], cur[p]);
      raw.order_key[cur[p]] = bottom[p];
    }
  }
  return canonicalize(raw);
}

LinkDiagram mirror(const LinkDiagram& d) {
  RawDiagram raw = to_raw(d);
  for (auto& c : raw.crossings) {
    auto e = c.e;
    if (c.over_in == 3) {
      c.e = {e[3], e[0], e[1], e[2]};
      c.over_in = 1;
    } else {
      c.e = {e[1], e[2], e[3], e[0]};
      c.over_in = 3;
    }
  }
  return canonicalize(raw);
}

LinkDiagram reverse_components(const LinkDiagram& d, const std::vector<bool>& which) {
  if (static_cast<int>(which.size()) != d.num_components())
    throw Error(ErrorCode::ComponentOutOfRange, "orientation flags for " + std::to_string(which.size()) + " of " +
                                                    std::to_string(d.num_components()) + " components");
  RawDiagram raw = to_raw(d);
  for (int x = 0; x < d.num_crossings(); ++x) {
    auto& c = raw.crossings[x];
    bool under_rev = which[d.component_of(d.edge(x, 0))];
    bool over_rev = which[d.component_of(d.edge(x, 1))];
    int over_in = c.over_in;
    if (over_rev) over_in = (over_in + 2) % 4;
    if (under_rev) {
      auto e = c.e;
      for (int s = 0; s < 4; ++s) c.e[s] = e[(s + 2) % 4];
      over_in = (over_in + 2) % 4;
    }
    c.over_in = over_in;
  }
  return canonicalize(raw);
}

LinkDiagram reverse_all(const LinkDiagram& d) {
  return reverse_components(d, std::vector<bool>(d.num_components(), true));
}

LinkDiagram cable(const LinkDiagram& d, const std::vector<int>& m) {
  if (static_cast<int>(m.size()) != d.num_components())
    throw Error(ErrorCode::ComponentOutOfRange, "multiplicities for " + std::to_string(m.size()) + " of " +
                                                    std::to_string(d.num_components()) + " components");
  for (int v : m)
    if (v < 0) throw Error(ErrorCode::BadBounds, "negative cable multiplicity");

  // Segments are the pieces of cable strands between grid crossings.
  struct Seg {
    long key;
  };
  std::vector<Seg> segs;
  const long internal_key = 1L << 40;
  auto new_seg = [&]() {
    segs.push_back({internal_key + static_cast<long>(segs.size())});
    return static_cast<int>(segs.size()) - 1;
  };
  struct GridCrossing {
    std::array<int, 4> seg;
    int over_in;
  };
  std::vector<GridCrossing> grid;
  // port[x][slot][k-1]: boundary segment of copy k at that slot.
  std::vector<std::array<std::vector<int>, 4>> port(d.num_crossings());

  for (int x = 0; x < d.num_crossings(); ++x) {
    const int p = m[d.component_of(d.edge(x, 0))];
    const int q = m[d.component_of(d.edge(x, 1))];
    const bool over_east = d.sign(x) > 0;  // over strand runs d (west) -> b (east)
    std::vector<std::vector<int>> v(p + 1), h(q + 1);
    for (int k = 1; k <= p; ++k)
      for (int s = 0; s <= q; ++s) v[k].push_back(new_seg());
    for (int l = 1; l <= q; ++l)
      for (int t = 0; t <= p; ++t) h[l].push_back(new_seg());
    for (int k = 1; k <= p; ++k) {
      port[x][0].push_back(v[k][0]);
      port[x][2].push_back(v[k][q]);
    }
    for (int l = 1; l <= q; ++l) {
      port[x][3].push_back(h[l][0]);
      port[x][1].push_back(h[l][p]);
    }
    for (int k = 1; k <= p; ++k) {
      const bool up = k % 2 == 1;
      for (int l = 1; l <= q; ++l) {
        const int y = over_east ? q + 1 - l : l;
        const bool east = over_east != (l % 2 == 0);
        const int below = v[k][y - 1], above = v[k][y];
        const int west = h[l][k - 1], eastseg = h[l][k];
        GridCrossing gc;
        if (up) {
          gc.seg = {below, eastseg, above, west};
          gc.over_in = east ? 3 : 1;
        } else {
          gc.seg = {above, west, below, eastseg};
          gc.over_in = east ? 1 : 3;
        }
        grid.push_back(gc);
      }
    }
  }

  UnionFind uf(static_cast<int>(segs.size()));
  std::vector<long> key(segs.size());
  for (size_t i = 0; i < segs.size(); ++i) key[i] = segs[i].key;
  for (int e = 1; e <= d.num_edges(); ++e) {
    if (d.is_free_label(e)) continue;
    const int mult = m[d.component_of(e)];
    Dart t = d.tail(e), h = d.head(e);
    for (int k = 0; k < mult; ++k) {
      int a = port[t.crossing][t.slot][k], b = port[h.crossing][h.slot][k];
      long kk = std::min({key[uf.find(a)], key[uf.find(b)], static_cast<long>(e) * 65536 + k + 1});
      uf.unite(a, b);
      key[uf.find(a)] = kk;
    }
  }

  RawDiagram raw;
  std::set<int> used;
  for (const auto& gc : grid) {
    RawCrossing rc;
    for (int s = 0; s < 4; ++s) {
      int r = uf.find(gc.seg[s]);
      rc.e[s] = r;
      used.insert(r);
      raw.order_key[r] = key[r];
    }
    rc.over_in = gc.over_in;
    raw.crossings.push_back(rc);
  }
  std::set<int> circles;
  for (size_t i = 0; i < segs.size(); ++i) {
    int r = uf.find(static_cast<int>(i));
    if (!used.count(r)) circles.insert(r);
  }
  for (int r : circles) raw.free_keys.push_back(key[r]);
  for (int f : d.free_labels())
    for (int k = 0; k < m[d.component_of(f)]; ++k) raw.free_keys.push_back(static_cast<long>(f) * 65536 + k + 1);
  return canonicalize(raw);
}

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b) {
  RawDiagram raw = to_raw(a);
  append(raw, to_raw(b, a.num_edges()));
  return canonicalize(raw);
}

LinkDiagram connected_sum(const LinkDiagram& a, int ea, const LinkDiagram& b, int eb) {
  check_edge(a, ea);
  check_edge(b, eb);
  const long off = a.num_edges();
  RawDiagram ra = to_raw(a), rb = to_raw(b, off);
  auto drop_free = [](RawDiagram& r, long id) { r.free_keys.erase(std::find(r.free_keys.begin(), r.free_keys.end(), id)); };
  if (a.is_free_label(ea)) {
    drop_free(ra, ea);
    append(ra, rb);
    return canonicalize(ra);
  }
  if (b.is_free_label(eb)) {
    drop_free(rb, eb + off);
    append(ra, rb);
    return canonicalize(ra);
  }
  const int xoff = a.num_crossings();
  append(ra, rb);
  const long alpha = 2 * (off + b.num_edges()) + 1, beta = alpha + 1;
  Dart t1 = a.tail(ea), h1 = a.head(ea), t2 = b.tail(eb), h2 = b.head(eb);
  ra.crossings[t1.crossing].e[t1.slot] = alpha;
  ra.crossings[h2.crossing + xoff].e[h2.slot] = alpha;
  ra.crossings[t2.crossing + xoff].e[t2.slot] = beta;
  ra.crossings[h1.crossing].e[h1.slot] = beta;
  ra.order_key[alpha] = ea;
  ra.order_key[beta] = eb + off;
  return canonicalize(ra);
}

LinkDiagram hopf_sum(const LinkDiagram& d, int e, HopfChirality chirality) {
  check_edge(d, e);
  const int g = chirality == HopfChirality::Negative ? -1 : 1;
  return connected_sum(d, e, braid_closure(2, {g, g}), 1);
}

bool is_curl(const LinkDiagram& d, int x) {
  if (x < 0 || x >= d.num_crossings()) return false;
  for (int k = 0; k < 4; ++k)
    if (d.edge(x, k) == d.edge(x, (k + 1) % 4)) return true;
  return false;
}

LinkDiagram remove_curl(const LinkDiagram& d, int x) {
  if (!is_curl(d, x)) throw Error(ErrorCode::NotACurl, "crossing " + std::to_string(x) + " is not a curl");
  int k = 0;
  while (d.edge(x, k) != d.edge(x, (k + 1) % 4)) ++k;
  const long f = d.edge(x, (k + 2) % 4), g = d.edge(x, (k + 3) % 4);
  RawDiagram raw = to_raw(d);
  raw.crossings.erase(raw.crossings.begin() + x);
  if (f == g) {
    raw.free_keys.push_back(f);
  } else {
    replace_id(raw, g, f);
    raw.order_key[f] = std::min(f, g);
  }
  return canonicalize(raw);
}

}  // namespace khov
