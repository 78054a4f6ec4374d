#include "khov/checks.hpp"

#include <algorithm>
#include <set>

#include "khov/bracket.hpp"
#include "khov/catalog.hpp"
#include "khov/cube.hpp"
#include "khov/error.hpp"
#include "khov/lee.hpp"
#include "khov/pairings.hpp"
#include "khov/spanning_tree.hpp"
#include "khov/tait.hpp"

namespace khov {

GradedHomology bracket_homology(const LinkDiagram& d, Part part, int basepoint) {
  ComplexOptions opt;
  opt.grading = Grading::Bracket;
  opt.part = part;
  opt.basepoint = basepoint;
  return homology(build_complex(d, opt));
}

AlternatingReport alternating_report(const LinkDiagram& d) {
  if (!is_alternating(d)) throw Error(ErrorCode::NotAlternating, "the diagram is not alternating");
  if (!d.is_connected()) throw Error(ErrorCode::DisconnectedDiagram, "the diagram is not connected");
  AlternatingReport rep;
  const auto gens = st_bigradings(d, identity_ordering(d.num_crossings()));
  rep.n1 = gens.front().r;
  rep.i_minus = rep.i_plus = gens.front().i;
  for (const auto& g : gens) {
    if (g.r != rep.n1) rep.n1_constant = false;
    rep.i_minus = std::min(rep.i_minus, g.i);
    rep.i_plus = std::max(rep.i_plus, g.i);
  }
  std::vector<int> none(d.num_crossings(), -1);
  for (int x = 0; x < d.num_crossings(); ++x)
    if (is_splitting(d, none, x)) rep.has_splitting = true;

  const GradedHomology h = bracket_homology(d);
  rep.support_ok = rep.torsion_ok = true;
  for (const auto& [key, data] : h) {
    if (data.group.is_zero()) continue;
    const auto [i, j] = key;
    const bool lower = j == 2 * i - rep.n1 - 1, upper = j == 2 * i - rep.n1 + 1;
    if (!(lower || upper) || i < rep.i_minus || i > rep.i_plus) rep.support_ok = false;
    if (!data.group.torsion.empty() && !lower) rep.torsion_ok = false;
  }
  auto group_at = [&](int i, int j) {
    auto it = h.find({i, j});
    return it == h.end() ? HomologyGroup{} : it->second.group;
  };
  const HomologyGroup lo = group_at(rep.i_minus, 2 * rep.i_minus - rep.n1 - 1);
  const HomologyGroup hi = group_at(rep.i_plus, 2 * rep.i_plus - rep.n1 + 1);
  rep.corners_ok = lo.rank > 0 && lo.torsion.empty() && hi.rank > 0 && hi.torsion.empty();
  if (!rep.has_splitting)
    rep.corners_ok = rep.corners_ok && lo == HomologyGroup{1, {}} && hi == HomologyGroup{1, {}} && rep.i_minus == 0 &&
                     rep.i_plus == d.num_crossings();
  return rep;
}

RankBoundReport rank_bound_check(const LinkDiagram& d, const std::vector<int>& ordering) {
  RankBoundReport rep;
  const auto gens = st_bigradings(d, ordering);
  rep.k1 = static_cast<int>(gens.size());
  std::map<Bidegree, int> bound;
  for (const auto& g : gens)
    for (int j : g.j) ++bound[{g.i, j}];
  for (const auto& [key, data] : bracket_homology(d)) {
    const int rank = data.group.rank;
    rep.total_rational += rank;
    const int b = bound.count(key) ? bound[key] : 0;
    if (rank > b) {
      rep.bidegree_ok = false;
      rep.violations.push_back("(" + std::to_string(key.first) + "," + std::to_string(key.second) + "): rank " +
                               std::to_string(rank) + " > " + std::to_string(b));
    }
  }
  rep.total_ok = rep.total_rational <= 2 * rep.k1;
  return rep;
}

HopfReport hopf_addition_check(const LinkDiagram& d, int edge, HopfChirality chirality) {
  const GradedHomology base = homology(build_complex(d));
  const GradedHomology sum = homology(build_complex(hopf_sum(d, edge, chirality)));
  std::map<Bidegree, HomologyGroup> expect;
  for (const auto& [key, data] : base) {
    if (data.group.is_zero()) continue;
    const auto [i, j] = key;
    expect[{i - 2, j - 5}] = direct_sum(expect[{i - 2, j - 5}], data.group);
    expect[{i, j - 1}] = direct_sum(expect[{i, j - 1}], data.group);
  }
  std::map<Bidegree, HomologyGroup> got;
  for (const auto& [key, data] : sum)
    if (!data.group.is_zero()) got[key] = data.group;
  HopfReport rep;
  std::set<Bidegree> keys;
  for (const auto& [k, g] : expect) keys.insert(k);
  for (const auto& [k, g] : got) keys.insert(k);
  for (const auto& k : keys) {
    const HomologyGroup a = got.count(k) ? got[k] : HomologyGroup{};
    const HomologyGroup b = expect.count(k) ? expect[k] : HomologyGroup{};
    if (!(a == b))
      rep.mismatches.push_back("(" + std::to_string(k.first) + "," + std::to_string(k.second) + "): " + a.to_string() +
                               " vs " + b.to_string());
  }
  rep.ok = rep.mismatches.empty();
  return rep;
}

std::vector<CheckResult> s_property_suite(const std::vector<std::pair<std::string, std::string>>& pairs) {
  std::vector<CheckResult> out;
  std::map<std::string, int> cache;
  auto s_of = [&](const std::string& name) {
    auto it = cache.find(name);
    if (it != cache.end()) return it->second;
    return cache[name] = rasmussen_s(catalog(name));
  };
  for (const auto& [a, b] : pairs) {
    const LinkDiagram da = catalog(a), db = catalog(b);
    const int sa = s_of(a), sb = s_of(b);
    const int su = rasmussen_s(disjoint_union(da, db));
    out.push_back({"s(" + a + " u " + b + ") = s1 + s2 - 1", su == sa + sb - 1,
                   std::to_string(su) + " vs " + std::to_string(sa + sb - 1)});
    const int ss = rasmussen_s(connected_sum(da, 1, db, 1));
    out.push_back({"s1 + s2 - 2 <= s(" + a + " # " + b + ") <= s1 + s2", sa + sb - 2 <= ss && ss <= sa + sb,
                   std::to_string(ss) + " in [" + std::to_string(sa + sb - 2) + "," + std::to_string(sa + sb) + "]"});
  }
  std::set<std::string> names;
  for (const auto& [a, b] : pairs) names.insert({a, b});
  for (const auto& name : names) {
    const LinkDiagram d = catalog(name);
    const int n = d.num_components();
    const int s = s_of(name), sm = rasmussen_s(mirror(d));
    out.push_back({"-2|L| + 2 <= s + s(mirror) <= 2 for " + name, -2 * n + 2 <= s + sm && s + sm <= 2,
                   std::to_string(s) + " + " + std::to_string(sm)});
    if (name.rfind("unlink", 0) == 0 || name == "unknot")
      out.push_back({"|s| <= |L| - 1 for the weakly slice " + name, std::abs(s) <= n - 1, std::to_string(s)});
  }
  return out;
}

std::vector<CheckResult> property_suite() {
  std::vector<CheckResult> out;
  auto add = [&](std::string name, bool pass, std::string detail = {}) {
    out.push_back({std::move(name), pass, std::move(detail)});
  };
  for (const auto& name : standard_catalog()) {
    const LinkDiagram d = catalog(name);
    if (d.num_crossings() > 10) continue;
    for (auto [h, t] : std::vector<std::pair<int, int>>{{0, 0}, {0, 1}, {1, 0}, {1, 1}}) {
      ComplexOptions opt;
      opt.frob.h = h;
      opt.frob.t = t;
      add("d^2 = 0 on " + name + " at (h,t)=(" + std::to_string(h) + "," + std::to_string(t) + ")",
          !square_defect(build_complex(d, opt)));
    }
    const BigradedComplex kh = build_complex(d);
    LaurentPoly chi;
    for (const auto& [q, v] : kh.euler_characteristic()) chi.add_term(q, v);
    add("Euler characteristic equals Jones on " + name, chi == jones(d));
    if (d.num_crossings() <= 8)
      add("Lee dimension 2^n on " + name, lee_homology(d).total_dimension() == (1 << d.num_components()));
    if (d.is_connected() && d.num_crossings() <= 8) {
      const auto leaves = expansion(d, identity_ordering(d.num_crossings()));
      add("spanning-tree bracket on " + name, kauffman_via_trees(d, identity_ordering(d.num_crossings())) == kauffman_bracket(d));
      if (d.num_crossings() > 0)
        add("|K1| = tree count on " + name, Integer(static_cast<long>(leaves.size())) == spanning_tree_count(tait_graph(d)));
    }
    const Cube cube = build_cube(d);
    add("cube squares anticommute on " + name, cube.squares_anticommute);
  }
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; 2 * k <= n; ++k)
      add("pairings(" + std::to_string(n) + "," + std::to_string(k) + ") = binomial",
          Integer(static_cast<long>(pairings({n}, {k}).size())) == binomial(n - k, k));
  for (auto [a, b] : std::vector<std::pair<const char*, const char*>>{{"trefoil", "trefoil_r2"}, {"figure_eight", "figure_eight_r2"}}) {
    auto strip = [](const GradedHomology& h) {
      std::map<Bidegree, HomologyGroup> out;
      for (const auto& [k, v] : h)
        if (!v.group.is_zero()) out[k] = v.group;
      return out;
    };
    add(std::string("R2 invariance of homology: ") + a,
        strip(homology(build_complex(catalog(a)))) == strip(homology(build_complex(catalog(b)))));
  }
  for (const char* name : {"trefoil", "figure_eight"}) add(std::string("alternating structure on ") + name, alternating_report(catalog(name)).ok());
  for (const char* name : {"unknot", "trefoil"}) add(std::string("Hopf addition on ") + name, hopf_addition_check(catalog(name), 1).ok);
  for (const auto& r : s_property_suite({{"trefoil", "trefoil"}, {"trefoil", "figure_eight"}, {"unknot", "trefoil+"}, {"hopf+", "unknot"}, {"unlink(2)", "trefoil"}}))
    out.push_back(r);
  return out;
}

}  // namespace khov
