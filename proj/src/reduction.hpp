#pragma once

// Gaussian cancellation of invertible differential entries, shared by the
// integer and rational engines.

#include <functional>
#include <map>
#include <vector>

#include "khov/complex.hpp"

namespace khov::detail {

inline bool invertible(const Integer& v) { return is_unit(v); }
inline bool invertible(const Rational& v) { return v != 0; }

template <class Coef>
class Reducer {
 public:
  // Called before a pair (x in C^k, y in C^{k+1}) with entry phi is cancelled.
  using Hook = std::function<void(int k, int x, int y, const Coef& phi)>;

  explicit Reducer(const BigradedComplex& c) : min_degree_(c.min_degree), basis_(c.groups) {
    const std::size_t n = basis_.size();
    alive_.resize(n);
    col_.resize(n);
    row_.resize(n);
    for (std::size_t k = 0; k < n; ++k) {
      alive_[k].assign(basis_[k].size(), 1);
      col_[k].resize(basis_[k].size());
      row_[k].resize(k + 1 < n ? basis_[k + 1].size() : 0);
      if (k + 1 < n)
        for (int x = 0; x < c.d[k].cols(); ++x)
          for (const auto& [y, v] : c.d[k].column(x)) {
            col_[k][x][y] = Coef(v);
            row_[k][y][x] = Coef(v);
          }
    }
  }

  int degrees() const { return static_cast<int>(basis_.size()); }
  int min_degree() const { return min_degree_; }
  const std::vector<BasisElement>& basis(int k) const { return basis_[k]; }
  bool alive(int k, int x) const { return alive_[k][x] != 0; }
  // Column x of d^k as row -> value.
  const std::map<int, Coef>& column(int k, int x) const { return col_[k][x]; }

  void cancel(int k, int x, int y) {
    const Coef phi = col_[k][x].at(y);
    if (hook_) hook_(k, x, y, phi);
    const std::map<int, Coef> cx = col_[k][x];
    const std::map<int, Coef> ry = row_[k][y];
    for (const auto& [b, dbx] : cx) {
      if (b == y) continue;
      for (const auto& [a, dya] : ry) {
        if (a == x) continue;
        add(k, b, a, -(dbx * dya) / phi);
      }
    }
    for (const auto& [b, v] : cx) row_[k][b].erase(x);
    col_[k][x].clear();
    for (const auto& [a, v] : ry) col_[k][a].erase(y);
    row_[k][y].clear();
    if (k > 0) {
      for (const auto& [a, v] : row_[k - 1][x]) col_[k - 1][a].erase(x);
      row_[k - 1][x].clear();
    }
    if (k + 2 < degrees()) {
      for (const auto& [b, v] : col_[k + 1][y]) row_[k + 1][b].erase(y);
      col_[k + 1][y].clear();
    }
    alive_[k][x] = 0;
    alive_[k + 1][y] = 0;
  }

  // Greedy sweeps until no admissible pivot remains. With respect_q only
  // entries between equal q-degrees are cancelled.
  std::size_t run(bool respect_q, Hook hook = {}) {
    hook_ = std::move(hook);
    std::size_t cancelled = 0;
    bool progress = true;
    while (progress) {
      progress = false;
      for (int k = 0; k + 1 < degrees(); ++k)
        for (int x = 0; x < static_cast<int>(basis_[k].size()); ++x) {
          if (!alive_[k][x]) continue;
          int best = -1;
          std::size_t best_fill = 0;
          for (const auto& [y, v] : col_[k][x]) {
            if (!invertible(v)) continue;
            if (respect_q && basis_[k + 1][y].q != basis_[k][x].q) continue;
            std::size_t fill = row_[k][y].size();
            if (best < 0 || fill < best_fill) {
              best = y;
              best_fill = fill;
            }
          }
          if (best >= 0) {
            cancel(k, x, best);
            ++cancelled;
            progress = true;
          }
        }
    }
    hook_ = {};
    return cancelled;
  }

  // Surviving generators per degree, as indices into the original basis.
  std::vector<int> survivors(int k) const {
    std::vector<int> out;
    for (int x = 0; x < static_cast<int>(alive_[k].size()); ++x)
      if (alive_[k][x]) out.push_back(x);
    return out;
  }

 private:
  void add(int k, int row, int colx, const Coef& v) {
    if (v == 0) return;
    Coef& e = col_[k][colx][row];
    e += v;
    if (e == 0) {
      col_[k][colx].erase(row);
      row_[k][row].erase(colx);
    } else {
      row_[k][row][colx] = e;
    }
  }

  int min_degree_;
  std::vector<std::vector<BasisElement>> basis_;
  std::vector<std::vector<char>> alive_;
  std::vector<std::vector<std::map<int, Coef>>> col_, row_;
  Hook hook_;
};

}  // namespace khov::detail
