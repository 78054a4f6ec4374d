#include "khov/smith.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace khov {

std::vector<Integer> SmithResult::torsion() const {
  std::vector<Integer> out;
  for (const auto& f : factors)
    if (f > 1) out.push_back(f);
  return out;
}

std::vector<Integer> normalize_diagonal(std::vector<Integer> diag) {
  for (auto& v : diag) v = abs(v);
  diag.erase(std::remove(diag.begin(), diag.end(), Integer(0)), diag.end());
  for (std::size_t i = 0; i < diag.size(); ++i)
    for (std::size_t j = i + 1; j < diag.size(); ++j) {
      if (diag[j] % diag[i] == 0) continue;
      Integer g = gcd(diag[i], diag[j]);
      Integer l = diag[i] / g * diag[j];
      diag[i] = g;
      diag[j] = l;
    }
  std::sort(diag.begin(), diag.end());
  return diag;
}

namespace {

class SparseElim {
 public:
  explicit SparseElim(const SparseMatrix& m) : rows_(m.rows()), cols_(m.cols()) {
    for (int j = 0; j < m.cols(); ++j)
      for (const auto& [i, v] : m.column(j)) {
        rows_[i][j] = v;
        cols_[j].insert(i);
      }
  }

  std::vector<Integer> run() {
    std::vector<Integer> diag;
    for (;;) {
      auto [r, c] = pick();
      if (r < 0) break;
      if (eliminate(r, c)) {
        diag.push_back(abs(rows_[r][c]));
        rows_[r].clear();
        cols_[c].clear();
      }
    }
    return diag;
  }

 private:
  std::pair<int, int> pick() const {
    int br = -1, bc = -1;
    Integer bv;
    std::size_t bfill = 0;
    for (std::size_t r = 0; r < rows_.size(); ++r)
      for (const auto& [c, v] : rows_[r]) {
        Integer a = abs(v);
        std::size_t fill = rows_[r].size() + cols_[c].size();
        if (br < 0 || a < bv || (a == bv && fill < bfill)) {
          br = static_cast<int>(r);
          bc = c;
          bv = a;
          bfill = fill;
          if (bv == 1 && bfill == 2) return {br, bc};
        }
      }
    return {br, bc};
  }

  void set(int r, int c, const Integer& v) {
    if (v == 0) {
      rows_[r].erase(c);
      cols_[c].erase(r);
    } else {
      rows_[r][c] = v;
      cols_[c].insert(r);
    }
  }

  // Returns true when the pivot ends up alone in its row and column; false if
  // a smaller remainder appeared and a new pivot must be chosen.
  bool eliminate(int r, int c) {
    const Integer p = rows_[r][c];
    bool remainder = false;
    std::vector<int> others(cols_[c].begin(), cols_[c].end());
    for (int r2 : others) {
      if (r2 == r) continue;
      Integer f = rows_[r2][c] / p;  // truncating division
      if (f == 0) {
        remainder = true;
        continue;
      }
      for (const auto& [c2, v] : std::map<int, Integer>(rows_[r])) {
        auto it = rows_[r2].find(c2);
        Integer cur = it == rows_[r2].end() ? Integer(0) : it->second;
        set(r2, c2, cur - f * v);
      }
      if (rows_[r2].count(c)) remainder = true;
    }
    if (remainder) return false;
    // Column c now holds only the pivot, so column operations touch row r only.
    std::vector<std::pair<int, Integer>> row(rows_[r].begin(), rows_[r].end());
    for (const auto& [c2, v] : row) {
      if (c2 == c) continue;
      Integer rem = v % p;
      set(r, c2, rem);
      if (rem != 0) remainder = true;
    }
    return !remainder;
  }

  std::vector<std::map<int, Integer>> rows_;
  std::vector<std::set<int>> cols_;
};

}  // namespace

SmithResult smith_normal_form(const SparseMatrix& m) {
  SparseElim e(m);
  SmithResult res;
  res.factors = normalize_diagonal(e.run());
  res.rank = static_cast<int>(res.factors.size());
  return res;
}

SmithTransforms smith_dense(const std::vector<std::vector<Integer>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  SmithTransforms t;
  t.D = m;
  auto identity = [](int n) {
    std::vector<std::vector<Integer>> id(n, std::vector<Integer>(n, 0));
    for (int i = 0; i < n; ++i) id[i][i] = 1;
    return id;
  };
  t.U = identity(rows);
  t.V = identity(cols);
  auto& D = t.D;
  auto row_op = [&](int dst, int src, const Integer& f) {  // row dst -= f * row src
    for (int j = 0; j < cols; ++j) D[dst][j] -= f * D[src][j];
    for (int j = 0; j < rows; ++j) t.U[dst][j] -= f * t.U[src][j];
  };
  auto col_op = [&](int dst, int src, const Integer& f) {  // col dst -= f * col src
    for (int i = 0; i < rows; ++i) D[i][dst] -= f * D[i][src];
    for (int i = 0; i < cols; ++i) t.V[i][dst] -= f * t.V[i][src];
  };
  auto swap_rows = [&](int a, int b) {
    std::swap(D[a], D[b]);
    std::swap(t.U[a], t.U[b]);
  };
  auto swap_cols = [&](int a, int b) {
    for (auto& row : D) std::swap(row[a], row[b]);
    for (auto& row : t.V) std::swap(row[a], row[b]);
  };
  const int n = std::min(rows, cols);
  for (int k = 0; k < n; ++k) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      int pr = -1, pc = -1;
      for (int i = k; i < rows; ++i)
        for (int j = k; j < cols; ++j)
          if (D[i][j] != 0 && (pr < 0 || abs(D[i][j]) < abs(D[pr][pc]))) {
            pr = i;
            pc = j;
          }
      if (pr < 0) goto done;
      swap_rows(k, pr);
      swap_cols(k, pc);
      bool clean = true;
      for (int i = k + 1; i < rows; ++i) {
        if (D[i][k] == 0) continue;
        row_op(i, k, D[i][k] / D[k][k]);
        if (D[i][k] != 0) clean = false;
      }
      for (int j = k + 1; j < cols; ++j) {
        if (D[k][j] == 0) continue;
        col_op(j, k, D[k][j] / D[k][k]);
        if (D[k][j] != 0) clean = false;
      }
      if (!clean) continue;
      // Enforce divisibility of the rest of the block.
      int bad = -1;
      for (int i = k + 1; i < rows && bad < 0; ++i)
        for (int j = k + 1; j < cols; ++j)
          if (D[i][j] % D[k][k] != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_op(k, bad, -1);
    }
    if (D[k][k] < 0) {
      for (int j = 0; j < cols; ++j) D[k][j] = -D[k][j];
      for (int j = 0; j < rows; ++j) t.U[k][j] = -t.U[k][j];
    }
  }
done:
  for (int k = 0; k < n; ++k)
    if (D[k][k] != 0) t.result.factors.push_back(D[k][k]);
  t.result.rank = static_cast<int>(t.result.factors.size());
  return t;
}

}  // namespace khov
