#include "khov/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace khov {

std::size_t SparseMatrix::nnz() const {
  std::size_t n = 0;
  for (const auto& c : col_) n += c.size();
  return n;
}

Integer SparseMatrix::at(int i, int j) const {
  const auto& c = col_[j];
  auto it = std::lower_bound(c.begin(), c.end(), i, [](const Entry& e, int r) { return e.first < r; });
  return it != c.end() && it->first == i ? it->second : Integer(0);
}

void SparseMatrix::add(int i, int j, const Integer& v) {
  if (v == 0) return;
  if (i < 0 || i >= rows_ || j < 0 || j >= cols_) throw std::out_of_range("matrix index out of range");
  auto& c = col_[j];
  auto it = std::lower_bound(c.begin(), c.end(), i, [](const Entry& e, int r) { return e.first < r; });
  if (it != c.end() && it->first == i) {
    it->second += v;
    if (it->second == 0) c.erase(it);
  } else {
    c.insert(it, {i, v});
  }
}

SparseMatrix SparseMatrix::submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const {
  std::vector<int> new_row(rows_, -1);
  for (std::size_t k = 0; k < rows.size(); ++k) new_row[rows[k]] = static_cast<int>(k);
  SparseMatrix out(static_cast<int>(rows.size()), static_cast<int>(cols.size()));
  for (std::size_t k = 0; k < cols.size(); ++k) {
    for (const auto& [r, v] : col_[cols[k]])
      if (new_row[r] >= 0) out.col_[k].emplace_back(new_row[r], v);
    std::sort(out.col_[k].begin(), out.col_[k].end(), [](const Entry& a, const Entry& b) { return a.first < b.first; });
  }
  return out;
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix out(cols_, rows_);
  for (int j = 0; j < cols_; ++j)
    for (const auto& [r, v] : col_[j]) out.col_[r].emplace_back(j, v);
  return out;
}

std::vector<std::vector<Integer>> SparseMatrix::dense() const {
  std::vector<std::vector<Integer>> m(rows_, std::vector<Integer>(cols_, 0));
  for (int j = 0; j < cols_; ++j)
    for (const auto& [r, v] : col_[j]) m[r][j] = v;
  return m;
}

SparseMatrix SparseMatrix::from_dense(const std::vector<std::vector<Integer>>& m) {
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  SparseMatrix out(rows, cols);
  for (int j = 0; j < cols; ++j)
    for (int i = 0; i < rows; ++i)
      if (m[i][j] != 0) out.col_[j].emplace_back(i, m[i][j]);
  return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shapes do not match");
  SparseMatrix out(a.rows_, b.cols_);
  std::vector<Integer> acc(a.rows_);
  std::vector<char> touched(a.rows_, 0);
  std::vector<int> rows;
  for (int j = 0; j < b.cols_; ++j) {
    rows.clear();
    for (const auto& [k, v] : b.col_[j])
      for (const auto& [i, w] : a.col_[k]) {
        if (!touched[i]) {
          touched[i] = 1;
          acc[i] = 0;
          rows.push_back(i);
        }
        acc[i] += w * v;
      }
    std::sort(rows.begin(), rows.end());
    for (int i : rows) {
      if (acc[i] != 0) out.col_[j].emplace_back(i, acc[i]);
      touched[i] = 0;
    }
  }
  return out;
}

}  // namespace khov
