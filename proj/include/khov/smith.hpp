#pragma once

#include <vector>

#include "khov/integer.hpp"
#include "khov/matrix.hpp"

namespace khov {

struct SmithResult {
  int rank = 0;
  std::vector<Integer> factors;  // d1 | d2 | ... | d_rank, all positive
  std::vector<Integer> torsion() const;  // factors > 1
};

// Sparse elimination with a minimal-magnitude, fewest-fill pivot rule.
SmithResult smith_normal_form(const SparseMatrix& m);

struct SmithTransforms {
  std::vector<std::vector<Integer>> U, V, D;  // U * M * V = D, U and V unimodular
  SmithResult result;
};

SmithTransforms smith_dense(const std::vector<std::vector<Integer>>& m);

// Invariant factors of a diagonal matrix with the given nonzero entries.
std::vector<Integer> normalize_diagonal(std::vector<Integer> diag);

}  // namespace khov
