#include "khov/catalog.hpp"

#include <cctype>
#include <charconv>
#include <optional>

#include "khov/builder.hpp"
#include "khov/error.hpp"

namespace khov {

namespace {

std::vector<int> parse_ints(std::string_view s, std::string_view whole) {
  std::vector<int> out;
  size_t pos = 0;
  while (pos < s.size()) {
    int v = 0;
    auto [ptr, ec] = std::from_chars(s.data() + pos, s.data() + s.size(), v);
    if (ec != std::errc()) throw Error(ErrorCode::UnknownName, std::string(whole));
    out.push_back(v);
    pos = static_cast<size_t>(ptr - s.data());
    if (pos < s.size()) {
      if (s[pos] != ',') throw Error(ErrorCode::UnknownName, std::string(whole));
      ++pos;
    }
  }
  return out;
}

LinkDiagram torus_link(int n) {
  if (std::abs(n) < 2) throw Error(ErrorCode::BadBounds, "torus_link(2,n) needs |n| >= 2");
  // n > 0 gives negative crossings.
  return braid_closure(2, std::vector<int>(std::abs(n), n > 0 ? -1 : 1));
}

LinkDiagram trefoil_minus() { return braid_closure(2, {-1, -1, -1}); }
LinkDiagram trefoil_plus() { return braid_closure(2, {1, 1, 1}); }
LinkDiagram unknot() { return parse_pd("O(1)"); }

}  // namespace

LinkDiagram catalog(std::string_view raw_name) {
  std::string name;
  for (char ch : raw_name)
    if (!std::isspace(static_cast<unsigned char>(ch))) name += ch;
  const std::string_view n = name;

  if (n == "unknot") return unknot();
  if (n == "unknot_kinked+") return braid_closure(2, {1});
  if (n == "unknot_kinked-") return braid_closure(2, {-1});
  if (n == "unknot_double_kinked") {
    LinkDiagram k = braid_closure(2, {1});
    return connected_sum(k, 2, k, 2);
  }
  if (n == "hopf+" || n == "hopf") return braid_closure(2, {1, 1});
  if (n == "hopf-") return braid_closure(2, {-1, -1});
  if (n == "trefoil" || n == "trefoil-") return trefoil_minus();
  if (n == "trefoil+") return trefoil_plus();
  if (n == "figure_eight") return braid_closure(3, {1, -2, 1, -2});
  if (n == "granny") return connected_sum(trefoil_minus(), 1, trefoil_minus(), 1);
  if (n == "square") return connected_sum(trefoil_minus(), 1, trefoil_plus(), 1);
  if (n == "trefoil_r2") return braid_closure(2, {-1, -1, -1, 1, -1});
  if (n == "figure_eight_r2") return braid_closure(3, {1, -2, 1, -2, 2, -2});

  auto args_of = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (n.size() > prefix.size() + 1 && n.substr(0, prefix.size()) == prefix && n[prefix.size()] == '(' && n.back() == ')')
      return n.substr(prefix.size() + 1, n.size() - prefix.size() - 2);
    return std::nullopt;
  };
  if (auto a = args_of("mirror")) return mirror(catalog(*a));
  if (auto a = args_of("unlink")) {
    auto v = parse_ints(*a, n);
    if (v.size() != 1 || v[0] < 1) throw Error(ErrorCode::BadBounds, name);
    std::string pd;
    for (int k = 1; k <= v[0]; ++k) pd += (k > 1 ? ";" : "") + std::string("O(") + std::to_string(k) + ")";
    return parse_pd(pd);
  }
  if (auto a = args_of("torus_link")) {
    auto v = parse_ints(*a, n);
    if (v.size() != 2 || v[0] != 2) throw Error(ErrorCode::UnknownName, name + " (only torus_link(2,n) is available)");
    return torus_link(v[1]);
  }
  if (auto a = args_of("mutant_L")) {
    auto v = parse_ints(*a, n);
    if (v.size() != 2) throw Error(ErrorCode::UnknownName, name);
    return disjoint_union(unknot(), connected_sum(torus_link(v[0]), 1, torus_link(v[1]), 1));
  }
  if (auto a = args_of("mutant_Lp")) {
    auto v = parse_ints(*a, n);
    if (v.size() != 2) throw Error(ErrorCode::UnknownName, name);
    return disjoint_union(torus_link(v[0]), torus_link(v[1]));
  }
  if (auto a = args_of("braid")) {
    auto semi = a->find(';');
    if (semi == std::string_view::npos) throw Error(ErrorCode::UnknownName, name);
    auto k = parse_ints(a->substr(0, semi), n);
    auto w = parse_ints(a->substr(semi + 1), n);
    if (k.size() != 1) throw Error(ErrorCode::UnknownName, name);
    return braid_closure(k[0], w);
  }
  throw Error(ErrorCode::UnknownName, "no catalog entry named '" + name + "'");
}

bool is_catalog_name(std::string_view name) {
  try {
    catalog(name);
    return true;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::UnknownName) return false;
    return true;
  }
}

std::vector<std::string> standard_catalog() {
  return {"unknot",          "unknot_kinked+",   "unknot_kinked-",   "unknot_double_kinked", "hopf+",
          "hopf-",           "trefoil+",         "trefoil-",         "figure_eight",         "torus_link(2,2)",
          "torus_link(2,4)", "torus_link(2,5)",  "torus_link(2,6)",  "torus_link(2,-2)",     "torus_link(2,-3)",
          "torus_link(2,-4)", "granny",          "square",           "trefoil_r2",           "figure_eight_r2",
          "mutant_L(3,3)",   "mutant_Lp(3,3)",   "mutant_L(3,4)",    "mutant_Lp(3,4)",       "mutant_L(4,4)",
          "mutant_Lp(4,4)",  "unlink(2)",        "unlink(3)"};
}

}  // namespace khov
