#include "khov/lee.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <set>

#include "khov/error.hpp"
#include "khov/state.hpp"
#include "khov/tait.hpp"
#include "khov/union_find.hpp"
#include "reduction.hpp"

namespace khov {

BigradedComplex lee_complex(const LinkDiagram& d, Grading grading, int cap) {
  ComplexOptions opt;
  opt.frob = FrobeniusSpec::lee();
  opt.grading = grading;
  opt.cap = cap;
  return build_complex(d, opt);
}

int LeeHomology::total_dimension() const {
  int n = 0;
  for (const auto& [i, dim] : rational) n += dim;
  return n;
}

LeeHomology lee_homology(const LinkDiagram& d, Domain domain, Grading grading, int cap) {
  BigradedComplex c = lee_complex(d, grading, cap);
  LeeHomology h;
  h.rational = rational_betti(c);
  if (domain == Domain::Integers) h.integral = ungraded_homology(c);
  return h;
}

LeeClass canonical_generator(const LinkDiagram& d, const BigradedComplex& lee, const Orientation& o,
                             std::optional<int> outer) {
  if (static_cast<int>(o.size()) != d.num_components())
    throw Error(ErrorCode::ComponentOutOfRange, "orientation needs one flag per component");
  const int c = d.num_crossings();
  auto reversed = [&](int edge) { return o[d.component_of(edge)]; };

  // Oriented resolution: 0-smoothing exactly at the crossings positive under o.
  std::uint64_t mask = 0;
  for (int x = 0; x < c; ++x) {
    int s = d.sign(x);
    if (reversed(d.edge(x, 0)) != reversed(d.edge(x, 1))) s = -s;
    if (s < 0) mask |= std::uint64_t{1} << x;
  }
  const Resolution res = resolve(d, KauffmanState::from_mask(mask, c));

  // Regions of the resolution: faces of D glued across each smoothing, all outer
  // faces forming the unbounded region, and one inside region per free circle.
  const int nf = d.num_faces();
  const int free_base = nf;
  UnionFind uf(nf + d.free_circles());
  for (int x = 0; x < c; ++x) {
    if ((mask >> x) & 1)
      uf.unite(d.face_at(x, 0), d.face_at(x, 2));
    else
      uf.unite(d.face_at(x, 1), d.face_at(x, 3));
  }
  const std::vector<int> outers = outer_faces(d, outer);
  for (int f : outers) uf.unite(f, outers[0]);
  // Node nf + free_circles stands for the unbounded region when there are no pieces.
  std::vector<std::vector<int>> adj(nf + d.free_circles() + 1);
  const int outside = d.num_pieces() ? uf.find(outers[0]) : static_cast<int>(adj.size()) - 1;
  for (int e = 1; e <= d.num_edges(); ++e) {
    if (d.is_free_label(e)) continue;
    int l = uf.find(d.left_face(e)), r = uf.find(d.right_face(e));
    adj[l].push_back(r);
    adj[r].push_back(l);
  }
  for (int k = 0; k < d.free_circles(); ++k) {
    adj[free_base + k].push_back(outside);
    adj[outside].push_back(free_base + k);
  }
  std::vector<int> color(adj.size(), -1);
  std::vector<int> queue{outside};
  color[outside] = 0;
  for (std::size_t h = 0; h < queue.size(); ++h)
    for (int g : adj[queue[h]])
      if (color[g] < 0) {
        color[g] = 1 - color[queue[h]];
        queue.push_back(g);
      }

  LeeClass cls;
  cls.orientation = o;
  cls.state = mask;
  cls.degree = lee.min_degree + std::popcount(mask);
  cls.circle_labels.assign(res.num_circles, '?');
  for (int e = 1; e <= d.num_edges(); ++e) {
    const int circ = res.circle_of_edge[e];
    if (cls.circle_labels[circ] != '?') continue;
    int right_region;
    if (d.is_free_label(e)) {
      // Free circles run counterclockwise; their right side is outside.
      const int k = static_cast<int>(std::find(d.free_labels().begin(), d.free_labels().end(), e) - d.free_labels().begin());
      right_region = reversed(e) ? free_base + k : outside;
    } else {
      right_region = uf.find(reversed(e) ? d.left_face(e) : d.right_face(e));
    }
    if (color[right_region] < 0) throw Error(ErrorCode::EmbeddingUnavailable, "region coloring failed");
    cls.circle_labels[circ] = color[right_region] == 1 ? 'a' : 'b';
  }

  const auto& group = lee.group(cls.degree);
  cls.coords.assign(group.size(), 0);
  bool any = false;
  for (std::uint64_t lab = 0; lab < (std::uint64_t{1} << res.num_circles); ++lab) {
    int sign = 1;
    for (int k = 0; k < res.num_circles; ++k)
      if (cls.circle_labels[k] == 'b' && !((lab >> k) & 1)) sign = -sign;
    const int idx = lee.index_of(cls.degree, BasisElement{mask, lab, 0});
    if (idx < 0) continue;
    cls.coords[idx] = sign;
    any = true;
  }
  if (!any) throw Error(ErrorCode::EmbeddingUnavailable, "oriented resolution missing from the complex");
  return cls;
}

Vector apply_differential(const BigradedComplex& c, int degree, const Vector& v) {
  const SparseMatrix m = c.differential(degree);
  Vector out(m.rows(), 0);
  for (int x = 0; x < m.cols(); ++x) {
    if (v[x] == 0) continue;
    for (const auto& [y, val] : m.column(x)) out[y] += v[x] * Rational(val);
  }
  return out;
}

namespace {

void require_cycle(const BigradedComplex& c, int degree, const Vector& z) {
  if (z.size() != c.group(degree).size())
    throw Error(ErrorCode::NotACycle, "vector length does not match the chain group");
  for (const auto& v : apply_differential(c, degree, z))
    if (v != 0) throw Error(ErrorCode::NotACycle, "the vector is not a cycle");
}

// Is target in the span of the columns (all given over the same rows)?
bool in_span(std::vector<std::vector<Rational>> cols, std::vector<Rational> target) {
  const std::size_t rows = target.size();
  std::vector<std::vector<Rational>> echelon;  // reduced rows keyed by pivot
  std::vector<std::size_t> pivots;
  auto reduce = [&](std::vector<Rational>& v) {
    for (std::size_t k = 0; k < echelon.size(); ++k) {
      const Rational f = v[pivots[k]];
      if (f == 0) continue;
      for (std::size_t r = 0; r < rows; ++r)
        if (echelon[k][r] != 0) v[r] -= f * echelon[k][r];
    }
  };
  for (auto& col : cols) {
    reduce(col);
    std::size_t p = 0;
    while (p < rows && col[p] == 0) ++p;
    if (p == rows) continue;
    const Rational inv = 1 / col[p];
    for (auto& x : col) x *= inv;
    // Keep previous vectors reduced against the new pivot.
    for (auto& prev : echelon) {
      const Rational f = prev[p];
      if (f == 0) continue;
      for (std::size_t r = 0; r < rows; ++r) prev[r] -= f * col[r];
    }
    echelon.push_back(std::move(col));
    pivots.push_back(p);
  }
  reduce(target);
  return std::all_of(target.begin(), target.end(), [](const Rational& x) { return x == 0; });
}

// Scan q-levels from the top: the answer is the first level j at which the
// coordinates of z below j can be cancelled by a boundary.
int scan_levels(const std::vector<BasisElement>& basis, const Vector& z,
                const std::vector<Vector>& boundary_cols) {
  std::set<int, std::greater<int>> levels;
  for (const auto& e : basis) levels.insert(e.q);
  auto solvable_below = [&](std::optional<int> j) {
    std::vector<std::size_t> rows;
    for (std::size_t r = 0; r < basis.size(); ++r)
      if (!j || basis[r].q < *j) rows.push_back(r);
    std::vector<Rational> target;
    for (auto r : rows) target.push_back(z[r]);
    std::vector<std::vector<Rational>> cols;
    for (const auto& col : boundary_cols) {
      std::vector<Rational> c;
      for (auto r : rows) c.push_back(col[r]);
      cols.push_back(std::move(c));
    }
    return in_span(std::move(cols), std::move(target));
  };
  if (solvable_below(std::nullopt)) throw Error(ErrorCode::ZeroVector, "the class is zero in homology");
  for (int j : levels)
    if (solvable_below(j)) return j;
  throw std::logic_error("no filtration level found");
}

}  // namespace

int filtered_degree_direct(const BigradedComplex& lee, int degree, const Vector& z) {
  require_cycle(lee, degree, z);
  const SparseMatrix din = lee.differential(degree - 1);
  std::vector<Vector> cols;
  for (int x = 0; x < din.cols(); ++x) {
    Vector col(din.rows(), 0);
    for (const auto& [y, v] : din.column(x)) col[y] = Rational(v);
    cols.push_back(std::move(col));
  }
  return scan_levels(lee.group(degree), z, cols);
}

int filtered_degree(const BigradedComplex& lee, int degree, const Vector& z) {
  require_cycle(lee, degree, z);
  if (!lee.has_degree(degree)) throw Error(ErrorCode::ZeroVector, "no chain group in this degree");
  const int K = degree - lee.min_degree;
  detail::Reducer<Rational> red(lee);
  Vector w = z;
  red.run(true, [&](int k, int x, int y, const Rational& phi) {
    if (k == K) {
      w[x] = 0;
    } else if (k + 1 == K && w[y] != 0) {
      const Rational zy = w[y];
      for (const auto& [b, v] : red.column(k, x))
        if (b != y) w[b] -= zy * v / phi;
      w[y] = 0;
    }
  });
  const std::vector<int> keep = red.survivors(K);
  std::vector<int> pos(lee.groups[K].size(), -1);
  std::vector<BasisElement> basis;
  Vector zr;
  for (int x : keep) {
    pos[x] = static_cast<int>(basis.size());
    basis.push_back(lee.groups[K][x]);
    zr.push_back(w[x]);
  }
  std::vector<Vector> cols;
  if (K > 0)
    for (int x : red.survivors(K - 1)) {
      Vector col(basis.size(), 0);
      for (const auto& [y, v] : red.column(K - 1, x)) col[pos[y]] = v;
      cols.push_back(std::move(col));
    }
  return scan_levels(basis, zr, cols);
}

RasmussenData rasmussen(const LinkDiagram& d, std::optional<int> outer, int cap) {
  const BigradedComplex lee = lee_complex(d, Grading::Khovanov, cap);
  Orientation o(d.num_components(), false), ob(d.num_components(), true);
  const LeeClass so = canonical_generator(d, lee, o, outer);
  const LeeClass sob = canonical_generator(d, lee, ob, outer);
  Vector plus = so.coords, minus = so.coords;
  for (std::size_t k = 0; k < plus.size(); ++k) {
    plus[k] += sob.coords[k];
    minus[k] -= sob.coords[k];
  }
  RasmussenData r;
  r.deg_plus = filtered_degree(lee, so.degree, plus);
  r.deg_minus = filtered_degree(lee, so.degree, minus);
  r.s = (r.deg_plus + r.deg_minus) / 2;
  return r;
}

int rasmussen_s(const LinkDiagram& d, std::optional<int> outer, int cap) { return rasmussen(d, outer, cap).s; }

}  // namespace khov
