#include "khov/complex.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

#include "json.hpp"

#include "khov/cube.hpp"
#include "khov/error.hpp"
#include "khov/state.hpp"

namespace khov {

namespace {

int q_of(const BasisElement& e, int circles, int r, int shift) {
  const int xs = std::popcount(e.labels);
  return (circles - xs) - xs + r + shift;
}

struct StateInfo {
  Resolution res;
  int group = 0;
  int offset = 0;  // first basis index inside the group
  std::vector<std::uint64_t> labelings;  // admissible labelings in basis order
};

}  // namespace

const std::vector<BasisElement>& BigradedComplex::group(int i) const {
  static const std::vector<BasisElement> empty;
  return has_degree(i) ? groups[i - min_degree] : empty;
}

SparseMatrix BigradedComplex::differential(int i) const {
  if (has_degree(i) && has_degree(i + 1)) return d[i - min_degree];
  return SparseMatrix(static_cast<int>(group(i + 1).size()), static_cast<int>(group(i).size()));
}

std::size_t BigradedComplex::total_rank() const {
  std::size_t n = 0;
  for (const auto& g : groups) n += g.size();
  return n;
}

std::map<std::pair<int, int>, int> BigradedComplex::chain_ranks() const {
  std::map<std::pair<int, int>, int> out;
  for (std::size_t k = 0; k < groups.size(); ++k)
    for (const auto& e : groups[k]) ++out[{min_degree + static_cast<int>(k), e.q}];
  return out;
}

std::map<int, Integer> BigradedComplex::euler_characteristic() const {
  std::map<int, Integer> out;
  for (const auto& [key, n] : chain_ranks()) {
    out[key.second] += (key.first % 2 ? -1 : 1) * n;
    if (out[key.second] == 0) out.erase(key.second);
  }
  return out;
}

int BigradedComplex::index_of(int i, const BasisElement& e) const {
  const auto& g = group(i);
  auto it = std::lower_bound(g.begin(), g.end(), e, [](const BasisElement& a, const BasisElement& b) {
    return std::pair(a.state, a.labels) < std::pair(b.state, b.labels);
  });
  if (it == g.end() || it->state != e.state || it->labels != e.labels) return -1;
  return static_cast<int>(it - g.begin());
}

BigradedComplex build_complex(const LinkDiagram& d, const ComplexOptions& opt) {
  const int c = d.num_crossings();
  if (c > opt.cap || c > 62)
    throw Error(ErrorCode::TooManyCrossings, std::to_string(c) + " crossings exceed the complex cap " + std::to_string(opt.cap));
  const bool restricted = opt.part != Part::Full;
  if (restricted) {
    if (opt.basepoint < 1 || opt.basepoint > d.num_edges())
      throw Error(ErrorCode::BadBasepoint, "basepoint edge " + std::to_string(opt.basepoint) + " does not exist");
    if (opt.part == Part::Reduced && opt.frob.t != 0)
      throw Error(ErrorCode::WrongSpecialization, "labeling the basepoint X is a subcomplex only for t = 0");
  }
  const int hshift = opt.grading == Grading::Khovanov ? -d.c_minus() : 0;
  const int qshift = opt.grading == Grading::Khovanov ? d.c_plus() - 2 * d.c_minus() : 0;

  BigradedComplex cx;
  cx.frob = opt.frob;
  cx.part = opt.part;
  cx.crossings = c;
  cx.min_degree = hshift;
  cx.groups.assign(c + 1, {});
  const std::uint64_t n = std::uint64_t{1} << c;
  std::vector<StateInfo> info(n);
  // States in increasing mask order inside each group keep group bases sorted.
  for (std::uint64_t m = 0; m < n; ++m) {
    StateInfo& si = info[m];
    si.res = resolve(d, KauffmanState::from_mask(m, c));
    si.group = std::popcount(m);
    cx.num_states_circles_max = std::max(cx.num_states_circles_max, si.res.num_circles);
    auto& g = cx.groups[si.group];
    si.offset = static_cast<int>(g.size());
    const int nc = si.res.num_circles;
    const std::uint64_t base_bit = restricted ? std::uint64_t{1} << si.res.circle_of_edge[opt.basepoint] : 0;
    for (std::uint64_t lab = 0; lab < (std::uint64_t{1} << nc); ++lab) {
      if (restricted && (((lab & base_bit) != 0) != (opt.part == Part::Reduced))) continue;
      BasisElement e{m, lab, 0};
      e.q = q_of(e, nc, si.group, qshift);
      si.labelings.push_back(lab);
      g.push_back(e);
    }
  }
  for (int k = 0; k < c; ++k)
    cx.d.emplace_back(static_cast<int>(cx.groups[k + 1].size()), static_cast<int>(cx.groups[k].size()));

  for (std::uint64_t m = 0; m < n; ++m) {
    const StateInfo& src = info[m];
    for (int x = 0; x < c; ++x) {
      if ((m >> x) & 1) continue;
      const std::uint64_t t = m | (std::uint64_t{1} << x);
      const StateInfo& dst = info[t];
      const CubeEdge ce = cube_edge(d, src.res, dst.res, m, x);
      SparseMatrix& mat = cx.d[src.group];
      auto target_index = [&](std::uint64_t lab) -> int {
        auto it = std::lower_bound(dst.labelings.begin(), dst.labelings.end(), lab);
        if (it == dst.labelings.end() || *it != lab) return -1;
        return dst.offset + static_cast<int>(it - dst.labelings.begin());
      };
      const int a = src.res.arcs[x][0], b = src.res.arcs[x][1];
      for (std::size_t li = 0; li < src.labelings.size(); ++li) {
        const std::uint64_t lab = src.labelings[li];
        const int col = src.offset + static_cast<int>(li);
        // Carry labels of uninvolved circles.
        std::uint64_t rest = 0;
        for (int k = 0; k < src.res.num_circles; ++k)
          if (k != a && k != b && ((lab >> k) & 1)) rest |= std::uint64_t{1} << ce.circle_map[k];
        if (ce.merge) {
          const int out = ce.circle_map[a];
          for (const Term1& term : multiply(opt.frob, (lab >> a) & 1, (lab >> b) & 1)) {
            const std::uint64_t tl = rest | (static_cast<std::uint64_t>(term.label) << out);
            const int row = target_index(tl);
            if (row >= 0) mat.add(row, col, ce.sign * term.coeff);
          }
        } else {
          const int o1 = dst.res.arcs[x][0], o2 = dst.res.arcs[x][1];
          for (const Term2& term : comultiply(opt.frob, (lab >> a) & 1)) {
            const std::uint64_t tl = rest | (static_cast<std::uint64_t>(term.first) << o1) |
                                     (static_cast<std::uint64_t>(term.second) << o2);
            const int row = target_index(tl);
            if (row >= 0) mat.add(row, col, ce.sign * term.coeff);
          }
        }
      }
    }
  }
  return cx;
}

std::optional<int> square_defect(const BigradedComplex& c) {
  for (int i = c.min_degree; i + 2 <= c.max_degree(); ++i)
    if (!(c.differential(i + 1) * c.differential(i)).is_zero()) return i;
  return std::nullopt;
}

int filtration_level(const std::vector<BasisElement>& basis, const Vector& v) {
  std::optional<int> level;
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) level = level ? std::min(*level, basis[k].q) : basis[k].q;
  if (!level) throw Error(ErrorCode::ZeroVector, "the zero vector has no filtration level");
  return *level;
}

namespace {

// Coordinates in the {1,X} basis of the product basis element with labels
// `ab` (bit set = b): a = 1 + X, b = X - 1. Entry l of the result is the
// coefficient of the {1,X} labeling l.
void expand_ab(int n, std::uint64_t ab, std::vector<Rational>& out) {
  out.assign(std::size_t{1} << n, 0);
  for (std::uint64_t l = 0; l < (std::uint64_t{1} << n); ++l) {
    int sign = 1;
    for (int k = 0; k < n; ++k)
      if (((ab >> k) & 1) && !((l >> k) & 1)) sign = -sign;  // the 1 term of b carries -1
    out[l] = sign;
  }
}

// Circles of a state from the size of its contiguous block in a full group.
int block_circles(const std::vector<BasisElement>& g, std::uint64_t state) {
  auto lo = std::lower_bound(g.begin(), g.end(), state, [](const BasisElement& e, std::uint64_t s) { return e.state < s; });
  auto hi = std::upper_bound(g.begin(), g.end(), state, [](std::uint64_t s, const BasisElement& e) { return s < e.state; });
  return std::countr_zero(static_cast<std::uint64_t>(hi - lo));
}

}  // namespace

RationalComplex lee_basis_change(const BigradedComplex& c) {
  if (!(c.frob.h == 0 && c.frob.t == 1))
    throw Error(ErrorCode::WrongSpecialization, "the a/b basis exists only for (h,t) = (0,1)");
  RationalComplex out;
  out.min_degree = c.min_degree;
  out.groups = c.groups;
  // Per degree: P maps ab-coordinates to 1X-coordinates; P^{-1} = P^T / 2^n per state block.
  if (c.part != Part::Full) throw Error(ErrorCode::WrongSpecialization, "the a/b basis needs the full complex");
  auto circles_of = [&](int gk, const BasisElement& e) { return block_circles(c.groups[gk], e.state); };
  std::vector<std::vector<std::vector<Rational>>> P(c.groups.size()), Pinv(c.groups.size());
  for (std::size_t k = 0; k < c.groups.size(); ++k) {
    const auto& g = c.groups[k];
    const std::size_t sz = g.size();
    if (sz > 4096) throw Error(ErrorCode::TooManyCrossings, "basis change is limited to groups of 4096 elements");
    P[k].assign(sz, std::vector<Rational>(sz, 0));
    Pinv[k].assign(sz, std::vector<Rational>(sz, 0));
    for (std::size_t col = 0; col < sz; ++col) {
      const int n = circles_of(static_cast<int>(k), g[col]);
      std::vector<Rational> coords;
      expand_ab(n, g[col].labels, coords);
      const std::size_t base = col - g[col].labels;
      for (std::uint64_t l = 0; l < coords.size(); ++l) {
        P[k][base + l][col] = coords[l];
        Pinv[k][col][base + l] = coords[l] / Rational(Integer(1) << n);
      }
    }
    for (auto& e : out.groups[k]) e.q = e.q - 2 * (circles_of(static_cast<int>(k), e) - std::popcount(e.labels));
  }
  for (std::size_t k = 0; k + 1 < c.groups.size(); ++k) {
    auto dd = c.d[k].dense();
    const std::size_t rows = c.groups[k + 1].size(), cols = c.groups[k].size();
    std::vector<std::vector<Rational>> tmp(rows, std::vector<Rational>(cols, 0)), res(rows, std::vector<Rational>(cols, 0));
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t l = 0; l < cols; ++l) {
        if (dd[i][l] == 0) continue;
        for (std::size_t j = 0; j < cols; ++j)
          if (P[k][l][j] != 0) tmp[i][j] += Rational(dd[i][l]) * P[k][l][j];
      }
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t i = 0; i < rows; ++i) {
        if (Pinv[k + 1][r][i] == 0) continue;
        for (std::size_t j = 0; j < cols; ++j)
          if (tmp[i][j] != 0) res[r][j] += Pinv[k + 1][r][i] * tmp[i][j];
      }
    out.d.push_back(std::move(res));
  }
  return out;
}

RationalComplex lee_basis_restore(const RationalComplex& ab, const BigradedComplex& shape) {
  RationalComplex out = ab;
  out.groups = shape.groups;
  for (std::size_t k = 0; k + 1 < shape.groups.size(); ++k) {
    const auto& src = shape.groups[k];
    const auto& dst = shape.groups[k + 1];
    const std::size_t rows = dst.size(), cols = src.size();
    // d = P_{k+1} d_ab P_k^{-1}
    std::vector<std::vector<Rational>> tmp(rows, std::vector<Rational>(cols, 0)), res(rows, std::vector<Rational>(cols, 0));
    for (std::size_t j = 0; j < cols; ++j) {
      const int n = block_circles(src, src[j].state);
      const std::size_t base = j - src[j].labels;
      // Column j of P_k^{-1} has entries at ab-indices base + l.
      for (std::uint64_t l = 0; l < (std::uint64_t{1} << n); ++l) {
        std::vector<Rational> coords;
        expand_ab(n, l, coords);
        const Rational pinv = coords[src[j].labels] / Rational(Integer(1) << n);
        if (pinv == 0) continue;
        for (std::size_t i = 0; i < rows; ++i)
          if (ab.d[k][i][base + l] != 0) tmp[i][j] += ab.d[k][i][base + l] * pinv;
      }
    }
    for (std::size_t i = 0; i < rows; ++i) {
      const int n = block_circles(dst, dst[i].state);
      std::vector<Rational> coords;
      const std::size_t base = i - dst[i].labels;
      for (std::uint64_t l = 0; l < (std::uint64_t{1} << n); ++l) {
        expand_ab(n, l, coords);
        const Rational p = coords[dst[i].labels];
        for (std::size_t j = 0; j < cols; ++j)
          if (tmp[base + l][j] != 0) res[i][j] += p * tmp[base + l][j];
      }
    }
    out.d[k] = std::move(res);
  }
  return out;
}

std::string complex_to_json(const BigradedComplex& c) {
  nlohmann::ordered_json j;
  j["min_degree"] = c.min_degree;
  j["frobenius"] = {{"h", c.frob.h.get_str()}, {"t", c.frob.t.get_str()}};
  auto groups = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < c.groups.size(); ++k) {
    nlohmann::ordered_json g;
    g["i"] = c.min_degree + static_cast<int>(k);
    auto basis = nlohmann::ordered_json::array();
    for (const auto& e : c.groups[k]) {
      std::string bits = KauffmanState::from_mask(e.state, c.crossings).to_string();
      basis.push_back({{"state", bits}, {"labels", e.labels}, {"j", e.q}});
    }
    g["basis"] = basis;
    if (k < c.d.size()) {
      auto trip = nlohmann::ordered_json::array();
      for (int col = 0; col < c.d[k].cols(); ++col)
        for (const auto& [row, v] : c.d[k].column(col)) trip.push_back({row, col, v.get_str()});
      g["d"] = trip;
    }
    groups.push_back(g);
  }
  j["groups"] = groups;
  return j.dump(2);
}

}  // namespace khov
