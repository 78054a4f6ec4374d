#include <random>

#include "doctest.h"
#include "khov/smith.hpp"
#include "oracles.hpp"

using namespace khov;

namespace {

using Dense = std::vector<std::vector<Integer>>;

Dense mul(const Dense& a, const Dense& b) {
  Dense c(a.size(), std::vector<Integer>(b.empty() ? 0 : b[0].size(), 0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k)
      for (std::size_t j = 0; j < c[i].size(); ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Integer det(Dense m) {
  // Bareiss fraction-free elimination.
  const std::size_t n = m.size();
  Integer prev = 1, sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      std::size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return n ? sign * m[n - 1][n - 1] : Integer(1);
}

Dense random_matrix(std::mt19937& rng, int r, int c) {
  std::uniform_int_distribution<int> v(-3, 3), z(0, 2);
  Dense m(r, std::vector<Integer>(c, 0));
  for (auto& row : m)
    for (auto& e : row) e = z(rng) ? 0 : v(rng);
  return m;
}

}  // namespace

TEST_CASE("small normal forms") {
  CHECK(smith_normal_form(SparseMatrix::from_dense({{2}})).factors == std::vector<Integer>{2});
  CHECK(smith_normal_form(SparseMatrix::from_dense({{1, 0}, {0, 1}})).torsion().empty());
  SmithResult r = smith_normal_form(SparseMatrix::from_dense({{2, 0}, {0, 3}}));
  CHECK(r.factors == std::vector<Integer>{1, 6});
  CHECK(r.rank == 2);
  CHECK(smith_normal_form(SparseMatrix(3, 4)).rank == 0);
  CHECK(normalize_diagonal({4, 6}) == std::vector<Integer>{2, 12});
}

TEST_CASE("sparse, dense and determinantal invariant factors agree") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const int rows = 1 + trial % 5, cols = 1 + (trial / 5) % 5;
    Dense m = random_matrix(rng, rows, cols);
    CAPTURE(trial);
    SmithResult sparse = smith_normal_form(SparseMatrix::from_dense(m));
    SmithTransforms dense = smith_dense(m);
    auto oracle_factors = oracle::determinantal_invariant_factors(m);
    CHECK(sparse.factors == oracle_factors);
    CHECK(dense.result.factors == oracle_factors);
    CHECK(mul(mul(dense.U, m), dense.V) == dense.D);
    CHECK(abs(det(dense.U)) == 1);
    CHECK(abs(det(dense.V)) == 1);
    for (std::size_t k = 1; k < sparse.factors.size(); ++k) CHECK(sparse.factors[k] % sparse.factors[k - 1] == 0);
  }
}

TEST_CASE("sparse matrix basics") {
  SparseMatrix a = SparseMatrix::from_dense({{1, 0, 2}, {0, 3, 0}});
  CHECK(a.nnz() == 3);
  CHECK(a.at(0, 2) == 2);
  a.add(0, 2, -2);
  CHECK(a.nnz() == 2);
  CHECK(a.transpose().transpose() == a);
  SparseMatrix b = SparseMatrix::from_dense({{1}, {1}, {1}});
  CHECK((a * b).dense() == Dense{{1}, {3}});
  CHECK(a.submatrix({1}, {1, 2}).dense() == Dense{{3, 0}});
}
