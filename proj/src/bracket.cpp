#include "khov/bracket.hpp"

#include <algorithm>
#include <bit>
#include <thread>

#include "khov/builder.hpp"
#include "khov/error.hpp"
#include "khov/state.hpp"

namespace khov {

namespace {

void check_cap(const LinkDiagram& d, int cap) {
  if (d.num_crossings() > cap)
    throw Error(ErrorCode::TooManyCrossings,
                std::to_string(d.num_crossings()) + " crossings exceed the cap of " + std::to_string(cap));
}

// counts[r][n] = number of states with r 1-smoothings and n circles, over a mask range.
using Counts = std::vector<std::vector<long>>;

void count_range(const LinkDiagram& d, std::uint64_t lo, std::uint64_t hi, Counts& counts) {
  CircleCounter counter(d);
  for (std::uint64_t m = lo; m < hi; ++m) ++counts[std::popcount(m)][counter.count(m)];
}

}  // namespace

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

LaurentPoly kauffman_bracket(const LinkDiagram& d, const BracketOptions& opt) {
  check_cap(d, std::min(opt.cap, 62));
  const int c = d.num_crossings();
  const std::uint64_t total = std::uint64_t{1} << c;
  const int threads = std::max(1, std::min<int>(opt.threads, static_cast<int>(std::min<std::uint64_t>(total, 64))));
  std::vector<Counts> parts(threads, Counts(c + 1, std::vector<long>(d.num_edges() + 2, 0)));
  std::vector<std::thread> pool;
  const std::uint64_t chunk = total / threads;
  for (int t = 0; t < threads; ++t) {
    std::uint64_t lo = chunk * t, hi = t + 1 == threads ? total : chunk * (t + 1);
    if (threads == 1) {
      count_range(d, lo, hi, parts[t]);
    } else {
      pool.emplace_back([&, lo, hi, t] { count_range(d, lo, hi, parts[t]); });
    }
  }
  for (auto& th : pool) th.join();

  LaurentPoly result;
  const LaurentPoly circle = LaurentPoly::circle();
  std::vector<LaurentPoly> circle_pow{LaurentPoly::constant(1)};
  for (int r = 0; r <= c; ++r) {
    for (int n = 0; n <= d.num_edges() + 1; ++n) {
      Integer k = 0;
      for (const auto& p : parts) k += p[r][n];
      if (k == 0) continue;
      while (static_cast<int>(circle_pow.size()) <= n) circle_pow.push_back(circle_pow.back() * circle);
      LaurentPoly term = circle_pow[n].shifted(r);
      term *= (r % 2 == 0 ? k : Integer(-k));
      result += term;
    }
  }
  return result;
}

LaurentPoly jones(const LinkDiagram& d, const BracketOptions& opt) {
  LaurentPoly b = kauffman_bracket(d, opt);
  const int cp = d.c_plus(), cm = d.c_minus();
  b = b.shifted(cp - 2 * cm);
  if (cm % 2 == 1) b *= Integer(-1);
  return b;
}

bool bracket_r1_check(const LinkDiagram& d, int x, const BracketOptions& opt) {
  LinkDiagram smaller = remove_curl(d, x);
  LaurentPoly before = kauffman_bracket(d, opt);
  LaurentPoly after = kauffman_bracket(smaller, opt);
  return before == after.shifted(-1) || before == -after.shifted(2);
}

LaurentPoly colored_jones(const LinkDiagram& d, const std::vector<int>& colors, const BracketOptions& opt) {
  const int l = d.num_components();
  if (static_cast<int>(colors.size()) != l)
    throw Error(ErrorCode::ComponentOutOfRange, std::to_string(colors.size()) + " colors for " + std::to_string(l) +
                                                    " components");
  for (int n : colors)
    if (n < 0) throw Error(ErrorCode::BadBounds, "colors must be non-negative");
  LaurentPoly result;
  std::vector<int> k(l, 0);
  for (;;) {
    Integer coeff = 1;
    std::vector<int> m(l);
    int total_k = 0;
    for (int i = 0; i < l; ++i) {
      coeff *= binomial(colors[i] - k[i], k[i]);
      m[i] = colors[i] - 2 * k[i];
      total_k += k[i];
    }
    LaurentPoly term = jones(cable(d, m), opt);
    term *= (total_k % 2 == 0 ? coeff : Integer(-coeff));
    result += term;
    int i = 0;
    while (i < l && k[i] == colors[i] / 2) k[i++] = 0;
    if (i == l) break;
    ++k[i];
  }
  return result;
}

}  // namespace khov
