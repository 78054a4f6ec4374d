#include "khov/homology.hpp"

#include <algorithm>
#include <future>
#include <mutex>
#include <set>

#include "json.hpp"
#include "khov/bracket.hpp"
#include "khov/error.hpp"
#include "khov/smith.hpp"
#include "reduction.hpp"

namespace khov {

int HomologyGroup::z2_count() const { return static_cast<int>(std::count(torsion.begin(), torsion.end(), Integer(2))); }

std::string HomologyGroup::to_string() const {
  if (is_zero()) return "0";
  std::vector<std::string> parts;
  if (rank == 1) parts.push_back("Z");
  if (rank > 1) parts.push_back("Z^" + std::to_string(rank));
  std::map<Integer, int> counts;
  for (const auto& t : torsion) ++counts[t];
  for (const auto& [t, n] : counts)
    parts.push_back(n > 1 ? "(Z/" + t.get_str() + ")^" + std::to_string(n) : "Z/" + t.get_str());
  std::string s;
  for (std::size_t k = 0; k < parts.size(); ++k) s += (k ? " + " : "") + parts[k];
  return s;
}

HomologyGroup direct_sum(const HomologyGroup& a, const HomologyGroup& b) {
  HomologyGroup g;
  g.rank = a.rank + b.rank;
  std::vector<Integer> all = a.torsion;
  all.insert(all.end(), b.torsion.begin(), b.torsion.end());
  for (const auto& f : normalize_diagonal(all))
    if (f > 1) g.torsion.push_back(f);
  return g;
}

BigradedComplex gauss_reduce(const BigradedComplex& c) {
  detail::Reducer<Integer> red(c);
  red.run(true);
  BigradedComplex out;
  out.min_degree = c.min_degree;
  out.frob = c.frob;
  out.part = c.part;
  out.crossings = c.crossings;
  out.num_states_circles_max = c.num_states_circles_max;
  std::vector<std::vector<int>> keep(c.groups.size());
  std::vector<std::vector<int>> new_index(c.groups.size());
  for (std::size_t k = 0; k < c.groups.size(); ++k) {
    keep[k] = red.survivors(static_cast<int>(k));
    new_index[k].assign(c.groups[k].size(), -1);
    std::vector<BasisElement> g;
    for (int x : keep[k]) {
      new_index[k][x] = static_cast<int>(g.size());
      g.push_back(c.groups[k][x]);
    }
    out.groups.push_back(std::move(g));
  }
  for (std::size_t k = 0; k + 1 < c.groups.size(); ++k) {
    SparseMatrix m(static_cast<int>(keep[k + 1].size()), static_cast<int>(keep[k].size()));
    for (int x : keep[k])
      for (const auto& [y, v] : red.column(static_cast<int>(k), x)) m.add(new_index[k + 1][y], new_index[k][x], v);
    out.d.push_back(std::move(m));
  }
  return out;
}

namespace {

void require_graded(const BigradedComplex& c) {
  for (std::size_t k = 0; k < c.d.size(); ++k)
    for (int x = 0; x < c.d[k].cols(); ++x)
      for (const auto& [y, v] : c.d[k].column(x))
        if (c.groups[k + 1][y].q != c.groups[k][x].q)
          throw Error(ErrorCode::WrongSpecialization, "the differential does not preserve q-degree");
}

void require_complex(const BigradedComplex& c) {
  if (auto bad = square_defect(c)) throw Error(ErrorCode::NotAComplex, "d^2 != 0 starting at degree " + std::to_string(*bad));
}

struct BlockJob {
  int k;  // differential index
  int q;
  SparseMatrix block;
};

std::vector<SmithResult> run_jobs(const std::vector<BlockJob>& jobs, int threads) {
  std::vector<SmithResult> out(jobs.size());
  if (threads <= 1) {
    for (std::size_t i = 0; i < jobs.size(); ++i) out[i] = smith_normal_form(jobs[i].block);
    return out;
  }
  std::size_t next = 0;
  std::vector<std::future<void>> running;
  std::mutex mu;
  auto worker = [&]() {
    for (;;) {
      std::size_t i;
      {
        std::lock_guard<std::mutex> lock(mu);
        if (next == jobs.size()) return;
        i = next++;
      }
      out[i] = smith_normal_form(jobs[i].block);
    }
  };
  for (int t = 0; t < threads; ++t) running.push_back(std::async(std::launch::async, worker));
  for (auto& f : running) f.get();
  return out;
}

}  // namespace

GradedHomology homology(const BigradedComplex& input, const HomologyOptions& opt) {
  require_graded(input);
  require_complex(input);
  const auto chain = input.chain_ranks();
  const BigradedComplex c = opt.reduce ? gauss_reduce(input) : input;

  // Split every differential into q-blocks.
  std::vector<BlockJob> jobs;
  for (std::size_t k = 0; k < c.d.size(); ++k) {
    std::map<int, std::vector<int>> rows_by_q, cols_by_q;
    for (int x = 0; x < static_cast<int>(c.groups[k].size()); ++x) cols_by_q[c.groups[k][x].q].push_back(x);
    for (int y = 0; y < static_cast<int>(c.groups[k + 1].size()); ++y) rows_by_q[c.groups[k + 1][y].q].push_back(y);
    for (const auto& [q, cols] : cols_by_q) {
      auto it = rows_by_q.find(q);
      if (it == rows_by_q.end()) continue;
      jobs.push_back({static_cast<int>(k), q, c.d[k].submatrix(it->second, cols)});
    }
  }
  const auto results = run_jobs(jobs, opt.threads);
  std::map<Bidegree, SmithResult> out_of;  // keyed by source bidegree
  for (std::size_t n = 0; n < jobs.size(); ++n) out_of[{c.min_degree + jobs[n].k, jobs[n].q}] = results[n];

  std::map<Bidegree, int> reduced_rank;
  for (std::size_t k = 0; k < c.groups.size(); ++k)
    for (const auto& e : c.groups[k]) ++reduced_rank[{c.min_degree + static_cast<int>(k), e.q}];

  GradedHomology h;
  for (const auto& [key, n] : chain) h[key].chain_rank = n;
  for (auto& [key, data] : h) {
    const auto [i, q] = key;
    auto rr = reduced_rank.find(key);
    const int n = rr == reduced_rank.end() ? 0 : rr->second;
    auto out = out_of.find(key);
    auto in = out_of.find({i - 1, q});
    const int out_rank = out == out_of.end() ? 0 : out->second.rank;
    const int in_rank = in == out_of.end() ? 0 : in->second.rank;
    data.group.rank = n - out_rank - in_rank;
    if (in != out_of.end()) data.group.torsion = in->second.torsion();
  }
  // Differential ranks of the unreduced complex from rank-nullity along each q row.
  std::map<int, std::vector<int>> degrees_by_q;
  for (const auto& [key, data] : h) degrees_by_q[key.second].push_back(key.first);
  for (auto& [q, degs] : degrees_by_q) {
    std::sort(degs.begin(), degs.end());
    int prev_rank = 0, prev_deg = 0;
    bool first = true;
    for (int i : degs) {
      if (!first && i != prev_deg + 1) prev_rank = 0;
      BidegreeData& data = h[{i, q}];
      data.d_rank = data.chain_rank - data.group.rank - prev_rank;
      prev_rank = data.d_rank;
      prev_deg = i;
      first = false;
    }
  }
  return h;
}

std::map<int, HomologyGroup> ungraded_homology(const BigradedComplex& input, const HomologyOptions& opt) {
  require_complex(input);
  BigradedComplex c = input;
  if (opt.reduce) {
    detail::Reducer<Integer> red(input);
    red.run(false);
    std::vector<std::vector<int>> keep(c.groups.size()), idx(c.groups.size());
    for (std::size_t k = 0; k < c.groups.size(); ++k) {
      keep[k] = red.survivors(static_cast<int>(k));
      idx[k].assign(input.groups[k].size(), -1);
      std::vector<BasisElement> g;
      for (int x : keep[k]) {
        idx[k][x] = static_cast<int>(g.size());
        g.push_back(input.groups[k][x]);
      }
      c.groups[k] = std::move(g);
    }
    for (std::size_t k = 0; k < c.d.size(); ++k) {
      SparseMatrix m(static_cast<int>(keep[k + 1].size()), static_cast<int>(keep[k].size()));
      for (int x : keep[k])
        for (const auto& [y, v] : red.column(static_cast<int>(k), x)) m.add(idx[k + 1][y], idx[k][x], v);
      c.d[k] = std::move(m);
    }
  }
  std::vector<BlockJob> jobs;
  for (std::size_t k = 0; k < c.d.size(); ++k) jobs.push_back({static_cast<int>(k), 0, c.d[k]});
  const auto res = run_jobs(jobs, opt.threads);
  std::map<int, HomologyGroup> out;
  for (std::size_t k = 0; k < c.groups.size(); ++k) {
    HomologyGroup g;
    const int out_rank = k < res.size() ? res[k].rank : 0;
    const int in_rank = k > 0 ? res[k - 1].rank : 0;
    g.rank = static_cast<int>(c.groups[k].size()) - out_rank - in_rank;
    if (k > 0) g.torsion = res[k - 1].torsion();
    out[c.min_degree + static_cast<int>(k)] = g;
  }
  return out;
}

std::map<int, int> rational_betti(const BigradedComplex& c) {
  require_complex(c);
  detail::Reducer<Rational> red(c);
  red.run(false);
  std::map<int, int> out;
  for (int k = 0; k < red.degrees(); ++k) out[c.min_degree + k] = static_cast<int>(red.survivors(k).size());
  return out;
}

PoincareData poincare_of(const GradedHomology& h) {
  PoincareData p;
  p.table = h;
  for (const auto& [key, data] : h) {
    if (data.group.rank) p.P.add_term(key.first, key.second, data.group.rank);
    if (!data.group.torsion.empty()) p.torsion[key] = data.group.torsion;
  }
  p.I = p.P.at_q_one();
  return p;
}

PoincareData poincare(const LinkDiagram& d, const HomologyOptions& opt, int cap) {
  ComplexOptions co;
  co.cap = cap;
  PoincareData p = poincare_of(homology(build_complex(d, co), opt));
  BracketOptions bo;
  bo.cap = std::max(cap, bo.cap);
  if (p.P.at_t_minus_one() != jones(d, bo))
    throw Error(ErrorCode::NotAComplex, "Euler characteristic check P(-1,q) = J failed");
  return p;
}

std::string homology_to_json(const GradedHomology& h) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& [key, data] : h) {
    auto tors = nlohmann::ordered_json::array();
    for (const auto& t : data.group.torsion) tors.push_back(t.get_si());
    arr.push_back({{"i", key.first},
                   {"j", key.second},
                   {"rank", data.group.rank},
                   {"torsion", tors},
                   {"chain_rank", data.chain_rank},
                   {"d_rank", data.d_rank}});
  }
  return arr.dump(2);
}

}  // namespace khov
