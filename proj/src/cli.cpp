#include "khov/cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "khov/bracket.hpp"
#include "khov/catalog.hpp"
#include "khov/checks.hpp"
#include "khov/error.hpp"
#include "khov/lee.hpp"
#include "khov/spanning_tree.hpp"

namespace khov::cli {

using Json = nlohmann::ordered_json;

namespace {

struct RunConfig {
  std::string command;
  std::string input;
  std::string format = "table";
  std::optional<int> cap;
  std::optional<int> outer_face;
  int basepoint = 1;
  int threads = 1;
  std::string frobenius = "0,0";
  bool reduced = false;
  bool integers = false;
  bool grid = false;
  std::string colors;
  std::string ordering;
  int n1 = 3, n2 = 3;
};

struct Output {
  Json data;
  std::string text;
  std::string csv;
};

int cap_for(const RunConfig& cfg, int fallback) {
  if (cfg.cap) return *cfg.cap;
  if (const char* env = std::getenv("KHOV_CROSSING_CAP")) {
    try {
      return std::stoi(env);
    } catch (const std::exception&) {
      throw CLI::ValidationError("KHOV_CROSSING_CAP", "not an integer");
    }
  }
  return fallback;
}

std::vector<int> int_list(const std::string& s, const std::string& what) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw CLI::ValidationError(what, "expected comma-separated integers");
    }
  }
  return out;
}

LinkDiagram load(const std::string& input) {
  if (is_catalog_name(input)) return catalog(input);
  return parse_pd(input);
}

Json poly_json(const LaurentPoly& p) {
  Json arr = Json::array();
  for (const auto& [e, c] : p.pairs()) arr.push_back({e, c.get_str()});
  return arr;
}

std::string poly_csv(const LaurentPoly& p) {
  std::string s = "exponent,coefficient\n";
  for (const auto& [e, c] : p.pairs()) s += std::to_string(e) + "," + c.get_str() + "\n";
  return s;
}

Json group_json(const HomologyGroup& g) {
  Json t = Json::array();
  for (const auto& f : g.torsion) t.push_back(f.get_si());
  return {{"rank", g.rank}, {"torsion", t}};
}

BracketOptions bracket_opts(const RunConfig& cfg) {
  BracketOptions o;
  o.cap = cap_for(cfg, 20);
  o.threads = cfg.threads;
  return o;
}

std::string j_text(int j) { return "j=" + std::to_string(j); }

// One line per homological degree; a pair of equal groups at j = +-k collapses.
std::string homology_rows(const GradedHomology& h) {
  std::map<int, std::vector<std::pair<int, HomologyGroup>>> by_i;
  for (const auto& [k, v] : h)
    if (!v.group.is_zero()) by_i[k.first].push_back({k.second, v.group});
  std::string s;
  if (by_i.empty()) return "0\n";
  for (const auto& [i, cells] : by_i) {
    std::vector<std::string> parts;
    if (cells.size() == 2 && cells[0].first == -cells[1].first && cells[0].second == cells[1].second) {
      parts.push_back(cells[0].second.to_string() + " at j=±" + std::to_string(cells[1].first));
    } else {
      for (const auto& [j, g] : cells) parts.push_back(g.to_string() + " at " + j_text(j));
    }
    s += "i=" + std::to_string(i) + ": ";
    for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? ", " : "") + parts[k];
    s += "\n";
  }
  return s;
}

// Grid with cells "a[b]/c" (free rank, Z/2 count, chain rank) and arrow ranks.
std::string homology_grid(const GradedHomology& h) {
  if (h.empty()) return "(empty)\n";
  int imin = h.begin()->first.first, imax = imin, jmin = h.begin()->first.second, jmax = jmin;
  for (const auto& [k, v] : h) {
    imin = std::min(imin, k.first);
    imax = std::max(imax, k.first);
    jmin = std::min(jmin, k.second);
    jmax = std::max(jmax, k.second);
  }
  std::ostringstream os;
  os << "j\\i";
  for (int i = imin; i <= imax; ++i) os << "\t" << i << (i < imax ? "\t" : "");
  os << "\n";
  for (int j = jmax; j >= jmin; --j) {
    bool any = false;
    for (int i = imin; i <= imax; ++i) any = any || h.count({i, j});
    if (!any) continue;
    os << j;
    for (int i = imin; i <= imax; ++i) {
      auto it = h.find({i, j});
      os << "\t";
      if (it != h.end()) {
        const auto& d = it->second;
        std::string cell = std::to_string(d.group.rank);
        if (d.group.z2_count()) cell += "[" + std::to_string(d.group.z2_count()) + "]";
        os << cell << "/" << d.chain_rank;
      } else {
        os << ".";
      }
      if (i < imax) {
        int r = it != h.end() ? it->second.d_rank : 0;
        os << "\t" << (r ? "-" + std::to_string(r) + "->" : "");
      }
    }
    os << "\n";
  }
  return os.str();
}

std::string homology_csv(const GradedHomology& h) {
  std::string s = "i,j,rank,torsion,chain_rank,d_rank\n";
  for (const auto& [k, v] : h) {
    std::string t;
    for (const auto& f : v.group.torsion) t += (t.empty() ? "" : ";") + f.get_str();
    s += std::to_string(k.first) + "," + std::to_string(k.second) + "," + std::to_string(v.group.rank) + "," + t + "," +
         std::to_string(v.chain_rank) + "," + std::to_string(v.d_rank) + "\n";
  }
  return s;
}

Output cmd_poly(const RunConfig& cfg, const LinkDiagram& d) {
  LaurentPoly p;
  if (cfg.command == "jones") p = jones(d, bracket_opts(cfg));
  else if (cfg.command == "bracket") p = kauffman_bracket(d, bracket_opts(cfg));
  else {
    std::vector<int> colors = cfg.colors.empty() ? std::vector<int>(d.num_components(), 1) : int_list(cfg.colors, "--colors");
    p = colored_jones(d, colors, bracket_opts(cfg));
  }
  return {poly_json(p), p.to_string() + "\n", poly_csv(p)};
}

Output cmd_homology(const RunConfig& cfg, const LinkDiagram& d) {
  ComplexOptions opt;
  auto ht = int_list(cfg.frobenius, "--frobenius");
  if (ht.size() != 2) throw CLI::ValidationError("--frobenius", "expected h,t");
  opt.frob.h = ht[0];
  opt.frob.t = ht[1];
  opt.cap = cap_for(cfg, 16);
  if (cfg.reduced) {
    opt.part = Part::Reduced;
    opt.basepoint = cfg.basepoint;
  }
  HomologyOptions ho;
  ho.threads = cfg.threads;
  const BigradedComplex c = build_complex(d, opt);
  if (!opt.frob.graded()) {
    // Filtered theories: homology per homological degree only.
    auto h = ungraded_homology(c, ho);
    Json arr = Json::array();
    std::string text, csv = "i,rank,torsion\n";
    for (const auto& [i, g] : h) {
      Json row = group_json(g);
      row["i"] = i;
      arr.push_back(row);
      if (!g.is_zero()) text += "i=" + std::to_string(i) + ": " + g.to_string() + "\n";
      std::string t;
      for (const auto& f : g.torsion) t += (t.empty() ? "" : ";") + f.get_str();
      csv += std::to_string(i) + "," + std::to_string(g.rank) + "," + t + "\n";
    }
    return {arr, text.empty() ? "0\n" : text, csv};
  }
  const GradedHomology h = homology(c, ho);
  return {Json::parse(homology_to_json(h)), cfg.grid ? homology_grid(h) : homology_rows(h), homology_csv(h)};
}

Output cmd_lee(const RunConfig& cfg, const LinkDiagram& d) {
  LeeHomology h = lee_homology(d, cfg.integers ? Domain::Integers : Domain::Rationals, Grading::Khovanov, cap_for(cfg, 16));
  Json arr = Json::array();
  std::string text, csv = cfg.integers ? "i,rank,torsion\n" : "i,dimension\n";
  for (const auto& [i, dim] : h.rational) {
    if (cfg.integers) {
      const HomologyGroup& g = h.integral.at(i);
      Json row = group_json(g);
      row["i"] = i;
      arr.push_back(row);
      if (!g.is_zero()) text += "i=" + std::to_string(i) + ": " + g.to_string() + "\n";
      std::string t;
      for (const auto& f : g.torsion) t += (t.empty() ? "" : ";") + f.get_str();
      csv += std::to_string(i) + "," + std::to_string(g.rank) + "," + t + "\n";
    } else {
      arr.push_back({{"i", i}, {"dimension", dim}});
      if (dim) text += "i=" + std::to_string(i) + ": Q^" + std::to_string(dim) + "\n";
      csv += std::to_string(i) + "," + std::to_string(dim) + "\n";
    }
  }
  text += "total dimension " + std::to_string(h.total_dimension()) + "\n";
  return {arr, text, csv};
}

Output cmd_s(const RunConfig& cfg, const LinkDiagram& d) {
  RasmussenData r = rasmussen(d, cfg.outer_face, cap_for(cfg, 16));
  Json j = {{"s", r.s}, {"deg_plus", r.deg_plus}, {"deg_minus", r.deg_minus}};
  std::string text = "s = " + std::to_string(r.s) + " (deg[s_o+s_obar] = " + std::to_string(r.deg_plus) +
                     ", deg[s_o-s_obar] = " + std::to_string(r.deg_minus) + ")\n";
  return {j, text, "s,deg_plus,deg_minus\n" + std::to_string(r.s) + "," + std::to_string(r.deg_plus) + "," + std::to_string(r.deg_minus) + "\n"};
}

Output cmd_spanning_tree(const RunConfig& cfg, const LinkDiagram& d) {
  std::vector<int> ord = cfg.ordering.empty() ? identity_ordering(d.num_crossings()) : int_list(cfg.ordering, "--ordering");
  if (d.num_crossings() > cap_for(cfg, 20)) throw Error(ErrorCode::TooManyCrossings, "diagram exceeds the crossing cap");
  auto gens = st_bigradings(d, ord);
  std::sort(gens.begin(), gens.end(), [](const STGenerator& a, const STGenerator& b) {
    return std::tuple(a.i, a.j[0], a.state.to_string()) < std::tuple(b.i, b.j[0], b.state.to_string());
  });
  Json arr = Json::array();
  std::string text, csv = "state_bits,r,w_leaf,i,j_low,j_high\n";
  for (const auto& g : gens) {
    arr.push_back({{"state_bits", g.state.to_string()}, {"r", g.r}, {"w_leaf", g.w_leaf}, {"i", g.i}, {"j_pair", {g.j[0], g.j[1]}}});
    text += g.state.to_string() + "  r=" + std::to_string(g.r) + " w=" + std::to_string(g.w_leaf) + " i=" + std::to_string(g.i) +
            " j=" + std::to_string(g.j[0]) + "," + std::to_string(g.j[1]) + "\n";
    csv += g.state.to_string() + "," + std::to_string(g.r) + "," + std::to_string(g.w_leaf) + "," + std::to_string(g.i) + "," +
           std::to_string(g.j[0]) + "," + std::to_string(g.j[1]) + "\n";
  }
  text += std::to_string(gens.size()) + " connected states\n";
  return {arr, text, csv};
}

Output cmd_alternating(const RunConfig&, const LinkDiagram& d) {
  AlternatingReport r = alternating_report(d);
  Json j = {{"n1", r.n1},         {"i_minus", r.i_minus},       {"i_plus", r.i_plus},
            {"support_ok", r.support_ok}, {"torsion_ok", r.torsion_ok}, {"extremal_ok", r.corners_ok},
            {"has_splitting", r.has_splitting}};
  std::ostringstream os;
  os << "n1 = " << r.n1 << ", i- = " << r.i_minus << ", i+ = " << r.i_plus << "\n"
     << "support on j = 2i - n1 +- 1: " << (r.support_ok ? "yes" : "no") << "\n"
     << "torsion only on the lower line: " << (r.torsion_ok ? "yes" : "no") << "\n"
     << "extremal groups: " << (r.corners_ok ? "ok" : "failed") << "\n";
  return {j, os.str(), "n1,i_minus,i_plus,support_ok,torsion_ok,extremal_ok\n" + std::to_string(r.n1) + "," +
                           std::to_string(r.i_minus) + "," + std::to_string(r.i_plus) + "," + std::to_string(r.support_ok) +
                           "," + std::to_string(r.torsion_ok) + "," + std::to_string(r.corners_ok) + "\n"};
}

Output cmd_export_diagram(const RunConfig&, const LinkDiagram& d) {
  Json cr = Json::array();
  for (const auto& c : d.crossings()) cr.push_back({c.e[0], c.e[1], c.e[2], c.e[3]});
  Json comps = Json::array();
  for (int k = 0; k < d.num_components(); ++k) comps.push_back(d.component_edges(k));
  Json signs = Json::array();
  for (int x = 0; x < d.num_crossings(); ++x) signs.push_back(d.sign(x));
  Json j = {{"crossings", cr}, {"free_circles", d.free_circles()}, {"components", comps}, {"signs", signs}, {"pd", d.to_pd()}};
  return {j, d.to_pd() + "\n", "pd\n\"" + d.to_pd() + "\"\n"};
}

Output cmd_export_complex(const RunConfig& cfg, const LinkDiagram& d) {
  ComplexOptions opt;
  auto ht = int_list(cfg.frobenius, "--frobenius");
  if (ht.size() != 2) throw CLI::ValidationError("--frobenius", "expected h,t");
  opt.frob.h = ht[0];
  opt.frob.t = ht[1];
  opt.cap = cap_for(cfg, 16);
  if (cfg.reduced) {
    opt.part = Part::Reduced;
    opt.basepoint = cfg.basepoint;
  }
  std::string s = complex_to_json(build_complex(d, opt));
  return {Json::parse(s), s + "\n", s + "\n"};
}

Output per_diagram(const RunConfig& cfg, const LinkDiagram& d) {
  const std::string& c = cfg.command;
  if (c == "jones" || c == "bracket" || c == "colored-jones") return cmd_poly(cfg, d);
  if (c == "homology") return cmd_homology(cfg, d);
  if (c == "lee") return cmd_lee(cfg, d);
  if (c == "s-invariant") return cmd_s(cfg, d);
  if (c == "spanning-tree") return cmd_spanning_tree(cfg, d);
  if (c == "alternating-check") return cmd_alternating(cfg, d);
  if (c == "export-diagram") return cmd_export_diagram(cfg, d);
  return cmd_export_complex(cfg, d);
}

Output cmd_mutation(const RunConfig& cfg) {
  const std::string args = "(" + std::to_string(cfg.n1) + "," + std::to_string(cfg.n2) + ")";
  const LinkDiagram l = catalog("mutant_L" + args), lp = catalog("mutant_Lp" + args);
  const int cap = cap_for(cfg, 16);
  HomologyOptions ho;
  ho.threads = cfg.threads;
  const PoincareData pl = poincare(l, ho, cap), plp = poincare(lp, ho, cap);
  const LaurentPoly jl = jones(l, bracket_opts(cfg)), jlp = jones(lp, bracket_opts(cfg));
  Json j = {{"J_L", poly_json(jl)}, {"J_Lp", poly_json(jlp)}, {"jones_equal", jl == jlp},
            {"I_L", poly_json(pl.I)}, {"I_Lp", poly_json(plp.I)}, {"I_differ", !(pl.I == plp.I)}};
  std::ostringstream os;
  os << "L  = mutant_L" << args << ", L' = mutant_Lp" << args << "\n"
     << "J(L)  = " << jl.to_string() << "\nJ(L') = " << jlp.to_string() << "\n"
     << "J(L) " << (jl == jlp ? "=" : "!=") << " J(L')\n"
     << "I(L)  = " << pl.I.to_string("t") << "\nI(L') = " << plp.I.to_string("t") << "\n"
     << "I(L) " << (pl.I == plp.I ? "=" : "!=") << " I(L')\n";
  // Bidegrees where the two homologies differ.
  Json diff = Json::array();
  std::set<Bidegree> keys;
  for (const auto& [k, v] : pl.table) keys.insert(k);
  for (const auto& [k, v] : plp.table) keys.insert(k);
  for (const auto& k : keys) {
    HomologyGroup a = pl.table.count(k) ? pl.table.at(k).group : HomologyGroup{};
    HomologyGroup b = plp.table.count(k) ? plp.table.at(k).group : HomologyGroup{};
    if (a == b) continue;
    os << "H^{" << k.first << "," << k.second << "}: " << a.to_string() << " vs " << b.to_string() << "\n";
    diff.push_back({{"i", k.first}, {"j", k.second}, {"L", group_json(a)}, {"Lp", group_json(b)}});
  }
  j["differences"] = diff;
  std::string csv = "i,j,L,Lp\n";
  for (const auto& e : diff)
    csv += std::to_string(e["i"].get<int>()) + "," + std::to_string(e["j"].get<int>()) + "," + e["L"].dump() + "," + e["Lp"].dump() + "\n";
  return {j, os.str(), csv};
}

Output cmd_tables(const RunConfig& cfg) {
  Json j = Json::object();
  std::string text, csv;
  HomologyOptions ho;
  ho.threads = cfg.threads;
  for (const char* name : {"mutant_L(3,3)", "mutant_Lp(3,3)"}) {
    const GradedHomology h = homology(build_complex(catalog(name), {}), ho);
    j[name] = Json::parse(homology_to_json(h));
    text += std::string(name) + " (cells a[b]/c: free rank a, b copies of Z/2, chain rank c)\n" + homology_grid(h) + "\n";
    csv += std::string("# ") + name + "\n" + homology_csv(h);
  }
  return {j, text, csv};
}

Output cmd_check_all(bool& all_pass) {
  all_pass = true;
  Json arr = Json::array();
  std::string text, csv = "name,pass,detail\n";
  for (const auto& r : property_suite()) {
    all_pass = all_pass && r.pass;
    arr.push_back({{"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    text += std::string(r.pass ? "PASS " : "FAIL ") + r.name + (r.detail.empty() ? "" : "  [" + r.detail + "]") + "\n";
    csv += "\"" + r.name + "\"," + (r.pass ? "1" : "0") + ",\"" + r.detail + "\"\n";
  }
  return {arr, text, csv};
}

void emit(const RunConfig& cfg, const Output& o, std::ostream& out) {
  if (cfg.format == "json") out << o.data.dump(2) << "\n";
  else if (cfg.format == "csv") out << o.csv;
  else out << o.text;
}

const std::vector<std::string> kDiagramCommands = {"jones", "bracket", "colored-jones", "homology", "lee", "s-invariant",
                                                   "spanning-tree", "alternating-check", "export-diagram", "export-complex"};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Khovanov homology, Lee homology and knot polynomials"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    sub->add_option("--cap", cfg.cap, "crossing cap (default from KHOV_CROSSING_CAP)");
    sub->add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  };
  auto diagram_sub = [&](const std::string& name, const std::string& help) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("input", cfg.input, "PD code, catalog name, or file with one input per line")->required();
    sub->add_option("--outer-face", cfg.outer_face, "face index used as the unbounded region");
    sub->add_option("--basepoint", cfg.basepoint, "basepoint edge for reduced homology");
    common(sub);
    return sub;
  };
  diagram_sub("jones", "Jones polynomial");
  diagram_sub("bracket", "Kauffman bracket");
  diagram_sub("colored-jones", "colored Jones polynomial")->add_option("--colors", cfg.colors, "n1,n2,...");
  auto* hom = diagram_sub("homology", "Khovanov homology");
  hom->add_option("--frobenius", cfg.frobenius, "h,t specialization");
  hom->add_flag("--reduced", cfg.reduced, "reduced complex at the basepoint");
  hom->add_flag("--grid", cfg.grid, "table layout with chain and differential ranks");
  diagram_sub("lee", "Lee homology")->add_flag("--integers", cfg.integers, "integer coefficients");
  diagram_sub("s-invariant", "Rasmussen invariant");
  diagram_sub("spanning-tree", "spanning-tree generators")->add_option("--ordering", cfg.ordering, "crossing order i1,i2,...");
  diagram_sub("alternating-check", "alternating-knot structure checks");
  diagram_sub("export-diagram", "diagram as JSON");
  auto* exc = diagram_sub("export-complex", "chain complex as JSON");
  exc->add_option("--frobenius", cfg.frobenius, "h,t specialization");
  exc->add_flag("--reduced", cfg.reduced, "reduced complex at the basepoint");
  auto* mut = app.add_subcommand("mutation-demo", "mutant pair with equal Jones and different I");
  mut->add_option("--n1", cfg.n1)->check(CLI::Range(2, 8));
  mut->add_option("--n2", cfg.n2)->check(CLI::Range(2, 8));
  common(mut);
  common(app.add_subcommand("tables", "homology tables of the (3,3) mutant pair"));
  common(app.add_subcommand("check-all", "full property suite"));

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n" << app.help();
    return kUsage;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    if (cfg.command == "mutation-demo") {
      emit(cfg, cmd_mutation(cfg), out);
      return kOk;
    }
    if (cfg.command == "tables") {
      emit(cfg, cmd_tables(cfg), out);
      return kOk;
    }
    if (cfg.command == "check-all") {
      bool pass = false;
      Output o = cmd_check_all(pass);
      emit(cfg, o, out);
      return pass ? kOk : kSuiteFailure;
    }
    if (!is_catalog_name(cfg.input) && std::filesystem::is_regular_file(cfg.input)) {
      std::ifstream in(cfg.input);
      Json arr = Json::array();
      std::string line;
      int n = 0;
      while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        err << "[" << ++n << "] " << line << "\n";
        Json entry = {{"input", line}};
        try {
          entry["result"] = per_diagram(cfg, load(line)).data;
        } catch (const Error& e) {
          entry["error"] = e.what();
        }
        arr.push_back(entry);
      }
      out << arr.dump(2) << "\n";
      return kOk;
    }
    emit(cfg, per_diagram(cfg, load(cfg.input)), out);
    return kOk;
  } catch (const CLI::ValidationError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << e.what() << "\n";
    return kComputation;
  }
}

}  // namespace khov::cli
