#pragma once

#include <utility>
#include <vector>

#include "khov/integer.hpp"

namespace khov {

// Column-sparse integer matrix; each column is kept sorted by row with no zeros.
class SparseMatrix {
 public:
  using Entry = std::pair<int, Integer>;

  SparseMatrix() = default;
  SparseMatrix(int rows, int cols) : rows_(rows), cols_(cols), col_(cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  const std::vector<Entry>& column(int j) const { return col_[j]; }
  std::size_t nnz() const;
  bool is_zero() const { return nnz() == 0; }

  Integer at(int i, int j) const;
  // Adds v to entry (i, j).
  void add(int i, int j, const Integer& v);

  // Restriction to the given row and column index lists.
  SparseMatrix submatrix(const std::vector<int>& rows, const std::vector<int>& cols) const;
  SparseMatrix transpose() const;
  std::vector<std::vector<Integer>> dense() const;
  static SparseMatrix from_dense(const std::vector<std::vector<Integer>>& m);

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix&, const SparseMatrix&) = default;

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<std::vector<Entry>> col_;
};

}  // namespace khov
