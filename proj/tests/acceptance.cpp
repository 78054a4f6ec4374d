// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

#include "json.hpp"
#include "khov/bracket.hpp"
#include "khov/builder.hpp"
#include "khov/catalog.hpp"
#include "khov/checks.hpp"
#include "khov/cube.hpp"
#include "khov/homology.hpp"
#include "khov/lee.hpp"
#include "khov/pairings.hpp"
#include "khov/spanning_tree.hpp"
#include "khov/tait.hpp"
#include "oracles.hpp"

using namespace khov;

namespace {

// Reference tables for mutant_L(3,3) ("0") and mutant_Lp(3,3) ("1"): rows by j,
// cells for i = -6..0 as [free rank, Z/2 count, chain rank], arrows as the rank
// of the differential leaving (i, j) for i = -6..-1.
const char* kTables = R"json({"0":{"-2":{"cells":[null,null,null,null,null,null,[1,0,1]],"arrows":[0,0,0,0,0,0]},"-4":{"cells":[null,null,null,[0,0,2],[0,0,6],[0,0,6],[2,0,4]],"arrows":[0,0,0,2,4,2]},"-6":{"cells":[[0,0,1],[0,0,6],[0,0,15],[0,0,28],[2,0,33],[0,0,18],[1,0,6]],"arrows":[1,5,10,18,13,5]},"-8":{"cells":[[0,0,6],[0,0,30],[0,0,60],[0,0,74],[2,2,54],[0,0,18],[0,0,4]],"arrows":[6,24,36,38,14,4]},"-10":{"cells":[[0,0,15],[0,0,60],[1,0,90],[2,0,74],[0,2,33],[0,0,6],[0,0,1]],"arrows":[15,45,44,28,5,1]},"-12":{"cells":[[0,0,20],[1,0,60],[1,1,60],[2,0,28],[0,0,6],null,null],"arrows":[20,39,20,6,0,0]},"-14":{"cells":[[0,0,15],[2,1,30],[0,1,15],[0,0,2],null,null,null],"arrows":[15,13,2,0,0,0]},"-16":{"cells":[[1,0,6],[1,1,6],null,null,null,null,null],"arrows":[5,0,0,0,0,0]},"-18":{"cells":[[1,0,1],null,null,null,null,null,null],"arrows":[0,0,0,0,0,0]}},"1":{"-2":{"cells":[null,null,null,null,null,null,[1,0,1]],"arrows":[0,0,0,0,0,0]},"-4":{"cells":[null,null,null,[0,0,2],[0,0,6],[0,0,6],[2,0,4]],"arrows":[0,0,0,2,4,2]},"-6":{"cells":[[0,0,1],[0,0,6],[0,0,15],[0,0,28],[2,0,33],[0,0,18],[1,0,6]],"arrows":[1,5,10,18,13,5]},"-8":{"cells":[[0,0,6],[0,0,30],[0,0,60],[0,0,74],[2,2,54],[0,0,18],[0,0,4]],"arrows":[6,24,36,38,14,4]},"-10":{"cells":[[0,0,15],[0,0,60],[1,0,90],[2,0,74],[0,2,33],[0,0,6],[0,0,1]],"arrows":[15,45,44,28,5,1]},"-12":{"cells":[[0,0,20],[0,0,60],[0,2,60],[2,0,28],[0,0,6],null,null],"arrows":[20,40,20,6,0,0]},"-14":{"cells":[[0,0,15],[2,1,30],[0,1,15],[0,0,2],null,null,null],"arrows":[15,13,2,0,0,0]},"-16":{"cells":[[0,0,6],[0,2,6],null,null,null,null,null],"arrows":[6,0,0,0,0,0]},"-18":{"cells":[[1,0,1],null,null,null,null,null,null],"arrows":[0,0,0,0,0,0]}}})json";

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      if (!pass) detail << "; ";
      else detail.str("");
      pass = false;
      detail << what;
    }
  }
};

std::vector<std::string> catalog_upto(int crossings, int components = 64) {
  std::vector<std::string> out;
  for (const auto& n : standard_catalog()) {
    LinkDiagram d = catalog(n);
    if (d.num_crossings() <= crossings && d.num_components() <= components) out.push_back(n);
  }
  return out;
}

std::map<Bidegree, HomologyGroup> nonzero(const GradedHomology& h) {
  std::map<Bidegree, HomologyGroup> out;
  for (const auto& [k, v] : h)
    if (!v.group.is_zero()) out[k] = v.group;
  return out;
}

LaurentPoly chi(const BigradedComplex& c) {
  LaurentPoly p;
  for (const auto& [q, v] : c.euler_characteristic()) p += LaurentPoly::monomial(q, v);
  return p;
}

LaurentPoly t_poly(std::initializer_list<std::pair<int, int>> terms) {
  LaurentPoly p;
  for (auto [e, c] : terms) p += LaurentPoly::monomial(e, c);
  return p;
}

void criterion1(Verdict& v) {
  auto tables = nlohmann::json::parse(kTables);
  const char* names[] = {"mutant_L(3,3)", "mutant_Lp(3,3)"};
  GradedHomology hs[2];
  for (int k = 0; k < 2; ++k) {
    hs[k] = homology(build_complex(catalog(names[k])));
    const auto& h = hs[k];
    const auto& t = tables[std::to_string(k)];
    int cells = 0;
    for (int j = -18; j <= -2; j += 2) {
      const auto& row = t[std::to_string(j)];
      for (int i = -6; i <= 0; ++i) {
        const auto& cell = row["cells"][i + 6];
        auto it = h.find({i, j});
        std::string at = std::string(names[k]) + " (" + std::to_string(i) + "," + std::to_string(j) + ")";
        if (cell.is_null()) {
          v.require(it == h.end() || it->second.chain_rank == 0, at + " should be empty");
          continue;
        }
        ++cells;
        if (it == h.end()) {
          v.require(false, at + " missing");
          continue;
        }
        const auto& d = it->second;
        v.require(d.group.rank == cell[0].get<int>(), at + " free rank");
        v.require(d.group.z2_count() == cell[1].get<int>(), at + " Z/2 count");
        v.require(d.group.torsion.size() == static_cast<std::size_t>(d.group.z2_count()), at + " odd torsion");
        v.require(d.chain_rank == cell[2].get<int>(), at + " chain rank");
        if (i < 0) v.require(d.d_rank == row["arrows"][i + 6].get<int>(), at + " differential rank");
      }
    }
    for (const auto& [key, d] : h)
      v.require(d.chain_rank == 0 || (key.first >= -6 && key.first <= 0 && key.second >= -18 && key.second <= -2),
                std::string(names[k]) + " chain group outside the table");
    if (k == 0) v.detail << cells << " cells";
  }
  const HomologyGroup l = hs[0].at({-5, -16}).group, lp = hs[1].at({-5, -16}).group;
  v.require(l == HomologyGroup{1, {2}}, "H^{-5,-16}(L) = " + l.to_string());
  v.require(lp == HomologyGroup{0, {2, 2}}, "H^{-5,-16}(L') = " + lp.to_string());
  if (v.pass) v.detail << " per table, H^{-5,-16}: " << l.to_string() << " vs " << lp.to_string();
}

void criterion2(Verdict& v) {
  for (auto [a, b] : {std::pair{3, 3}, {3, 4}, {4, 4}}) {
    const std::string args = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    LinkDiagram l = catalog("mutant_L" + args), lp = catalog("mutant_Lp" + args);
    v.require(jones(l) == jones(lp), "J differs for " + args);
    v.require(!(poincare(l).I == poincare(lp).I), "I agrees for " + args);
  }
  if (v.pass) v.detail << "3 pairs";
}

void criterion3(Verdict& v) {
  int n = 0;
  for (const auto& name : catalog_upto(10)) {
    LinkDiagram d = catalog(name);
    v.require(chi(build_complex(d)) == jones(d), name);
    ++n;
  }
  if (v.pass) v.detail << n << " diagrams";
}

void criterion4(Verdict& v) {
  LaurentPoly a = poincare(catalog("torus_link(2,3)")).I, b = poincare(catalog("torus_link(2,4)")).I;
  v.require(a == t_poly({{0, 2}, {-2, 1}, {-3, 1}}), "T(2,3): " + a.to_string("t"));
  v.require(b == t_poly({{0, 2}, {-2, 1}, {-3, 1}, {-4, 2}}), "T(2,4): " + b.to_string("t"));
  if (v.pass) v.detail << a.to_string("t") << " and " << b.to_string("t");
}

void criterion5(Verdict& v) {
  int n = 0;
  for (const auto& name : catalog_upto(10, 3)) {
    LinkDiagram d = catalog(name);
    int dim = lee_homology(d).total_dimension();
    v.require(dim == (1 << d.num_components()), name + ": " + std::to_string(dim));
    ++n;
  }
  if (v.pass) v.detail << n << " diagrams";
}

void criterion6(Verdict& v) {
  for (int n = 1; n <= 4; ++n) {
    int s = rasmussen_s(catalog("unlink(" + std::to_string(n) + ")"));
    v.require(s == 1 - n, "s(unlink(" + std::to_string(n) + ")) = " + std::to_string(s));
  }
  v.require(rasmussen_s(catalog("unknot")) == 0, "s(unknot)");
  int links = 0;
  for (const auto& name : catalog_upto(10)) {
    RasmussenData r = rasmussen(catalog(name));
    v.require(std::abs(r.deg_plus - r.deg_minus) == 2, name + " degree gap");
    ++links;
  }
  for (const auto& r : s_property_suite({{"trefoil", "trefoil"},
                                        {"trefoil", "figure_eight"},
                                        {"unknot", "trefoil+"},
                                        {"hopf+", "unknot"},
                                        {"unlink(2)", "trefoil"}}))
    v.require(r.pass, r.name + " " + r.detail);
  if (v.pass) v.detail << "degree gap 2 on " << links << " links, 5 pairs";
}

void criterion7(Verdict& v) {
  std::mt19937 rng(7);
  int n = 0;
  for (const auto& name : catalog_upto(8)) {
    LinkDiagram d = catalog(name);
    if (!d.is_connected() || d.num_crossings() == 0) continue;
    const LaurentPoly expect = kauffman_bracket(d);
    std::vector<int> ord = identity_ordering(d.num_crossings());
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(ord.begin(), ord.end(), rng);
      v.require(kauffman_via_trees(d, ord) == expect, name + " ordering " + std::to_string(trial));
    }
    v.require(Integer(static_cast<long>(k1_states(d).size())) == oracle::kirchhoff(tait_graph(d)), name + " |K1|");
    ++n;
  }
  if (v.pass) v.detail << n << " diagrams";
}

void criterion8(Verdict& v) {
  for (const char* name : {"trefoil", "figure_eight", "granny", "torus_link(2,5)"}) {
    LinkDiagram d = catalog(name);
    RankBoundReport r = rank_bound_check(d, identity_ordering(d.num_crossings()));
    v.require(r.bidegree_ok && r.total_ok, std::string(name) + (r.violations.empty() ? "" : ": " + r.violations.front()));
    v.detail << name << " rank " << r.total_rational << " <= 2*" << r.k1 << "; ";
  }
}

void criterion9(Verdict& v) {
  for (const char* name : {"trefoil", "figure_eight"}) {
    LinkDiagram d = catalog(name);
    AlternatingReport r = alternating_report(d);
    v.require(r.ok(), std::string(name) + " structure");
    v.require(r.i_minus == 0 && r.i_plus == d.num_crossings(), std::string(name) + " extremal degrees");
    v.detail << name << ": n1=" << r.n1 << " i-=" << r.i_minus << " i+=" << r.i_plus << " ";
  }
}

void criterion10(Verdict& v) {
  for (const char* name : {"unknot", "trefoil"}) {
    LinkDiagram d = catalog(name);
    const int edges = 2 * d.num_crossings() + d.free_circles();
    for (int e = 1; e <= edges; ++e) {
      HopfReport r = hopf_addition_check(d, e, HopfChirality::Negative);
      v.require(r.ok, std::string(name) + " edge " + std::to_string(e) +
                          (r.mismatches.empty() ? "" : ": " + r.mismatches.front()));
    }
  }
  if (v.pass) v.detail << "clasp with two negative crossings, every edge";
}

void criterion11(Verdict& v) {
  LinkDiagram d = catalog("trefoil+");
  LeeHomology h = lee_homology(d, Domain::Integers, Grading::Bracket);
  v.require(h.integral.at(0) == HomologyGroup{2, {}}, "degree 0: " + h.integral.at(0).to_string());
  v.require(h.integral.at(3) == HomologyGroup{0, {2, 2}}, "degree 3: " + h.integral.at(3).to_string());
  for (int i : {1, 2}) v.require(h.integral.at(i).is_zero(), "degree " + std::to_string(i));
  std::vector<std::pair<int, int>> gens;
  for (const auto& g : st_bigradings(d, identity_ordering(3))) gens.push_back({g.i, (g.j[0] + g.j[1]) / 2});
  std::sort(gens.begin(), gens.end());
  v.require(gens == std::vector<std::pair<int, int>>{{0, -1}, {2, 3}, {3, 5}}, "spanning-tree bigradings");
  auto kh = bracket_homology(d);
  v.require(kh.at({3, 6}).group.rank == 1 && kh.at({3, 4}).group == HomologyGroup{0, {2}}, "bracket Kh at i = 3");
  LeeHomology m = lee_homology(catalog("trefoil-"), Domain::Integers, Grading::Bracket);
  v.detail << "trefoil+: " << h.integral.at(0).to_string() << " at 0, " << h.integral.at(3).to_string()
           << " at 3; mirror: " << m.integral.at(3).to_string() << " at 3, " << m.integral.at(1).to_string() << " at 1";
}

void criterion12(Verdict& v) {
  for (int n = 0; n <= 6; ++n) {
    LaurentPoly expect;
    for (int j = 0; j <= n; ++j) expect += LaurentPoly::monomial(n - 2 * j);
    v.require(colored_jones(catalog("unknot"), {n}) == expect, "unknot color " + std::to_string(n));
  }
  v.require(colored_jones(catalog("trefoil"), {1}) == jones(catalog("trefoil")), "trefoil color 1");
  v.require(colored_jones(catalog("hopf+"), {1, 1}) == jones(catalog("hopf+")), "hopf+ colors 1,1");
  v.require(colored_jones(catalog("hopf-"), {1, 1}) == jones(catalog("hopf-")), "hopf- colors 1,1");
  LinkDiagram c = cable(catalog("trefoil"), {2});
  v.require(c.num_crossings() == 12, "2-cable has " + std::to_string(c.num_crossings()) + " crossings");
  int cp = 0, cm = 0;
  for (int x = 0; x < c.num_crossings(); ++x) (c.sign(x) > 0 ? cp : cm) += 1;
  LaurentPoly j2 = oracle::recursive_bracket(c) * LaurentPoly::monomial(cp - 2 * cm, cm % 2 ? -1 : 1);
  j2 += LaurentPoly::constant(-1);  // J_2 = J(2-cable) - J(0-cable)
  v.require(colored_jones(catalog("trefoil"), {2}) == j2, "trefoil color 2");
  if (v.pass) v.detail << "J_2(trefoil) = " << j2.to_string();
}

void criterion13(Verdict& v) {
  int n = 0;
  for (const auto& name : standard_catalog()) {
    BigradedComplex c = build_complex(catalog(name));
    HomologyOptions raw;
    raw.reduce = false;
    BigradedComplex r = gauss_reduce(c);
    v.require(nonzero(homology(r, raw)) == nonzero(homology(c, raw)), name);
    ++n;
  }
  BigradedComplex t = build_complex(catalog("trefoil"));
  const std::size_t before = t.total_rank(), after = gauss_reduce(t).total_rank();
  v.require(2 * after <= before, "trefoil " + std::to_string(before) + " -> " + std::to_string(after));
  if (v.pass) v.detail << n << " complexes, trefoil " << before << " -> " << after;
}

void criterion14(Verdict& v) {
  const auto names = catalog_upto(8);
  for (const auto& name : names) {
    LinkDiagram d = catalog(name);
    for (auto [h, t] : {std::pair{0, 0}, {0, 1}, {1, 0}, {1, 1}}) {
      ComplexOptions o;
      o.frob.h = h;
      o.frob.t = t;
      v.require(!square_defect(build_complex(d, o)).has_value(),
                name + " d^2 at (" + std::to_string(h) + "," + std::to_string(t) + ")");
    }
    v.require(build_cube(d).squares_anticommute, name + " cube squares");
  }
  for (int n = 0; n <= 8; ++n)
    for (int k = 0; 2 * k <= n; ++k)
      v.require(Integer(static_cast<long>(pairings({n}, {k}).size())) == binomial(n - k, k),
                "pairings " + std::to_string(n) + "," + std::to_string(k));
  for (auto [a, b] : {std::pair{"trefoil", "trefoil_r2"}, {"figure_eight", "figure_eight_r2"}}) {
    v.require(nonzero(homology(build_complex(catalog(a)))) == nonzero(homology(build_complex(catalog(b)))),
              std::string(b) + " homology");
  }
  if (v.pass) v.detail << names.size() << " diagrams at 4 specializations, pairings n <= 8, 2 R2 pairs";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Verdict&)>>> criteria = {
      {"table reproduction", criterion1},     {"mutation theorem", criterion2},
      {"Euler characteristic", criterion3},   {"torus-link Poincare", criterion4},
      {"Lee dimension", criterion5},          {"Rasmussen", criterion6},
      {"spanning-tree oracle", criterion7},   {"rank bounds", criterion8},
      {"alternating structure", criterion9},  {"Hopf addition", criterion10},
      {"Lee over Z", criterion11},            {"colored Jones", criterion12},
      {"reduction soundness", criterion13},   {"property suites", criterion14},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Verdict v;
    const auto start = std::chrono::steady_clock::now();
    try {
      criteria[k].second(v);
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    failures += v.pass ? 0 : 1;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << k + 1 << " (" << criteria[k].first << ", " << std::fixed
              << std::setprecision(1) << secs << " s): " << v.detail.str() << std::endl;
  }
  return failures == 0 ? 0 : 1;
}
