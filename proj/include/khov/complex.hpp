#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "khov/diagram.hpp"
#include "khov/frobenius.hpp"
#include "khov/integer.hpp"
#include "khov/matrix.hpp"

namespace khov {

// Enhanced state: labels bit k set means circle k carries X.
struct BasisElement {
  std::uint64_t state = 0;
  std::uint64_t labels = 0;
  int q = 0;
  friend auto operator<=>(const BasisElement&, const BasisElement&) = default;
};

enum class Grading { Bracket, Khovanov };
enum class Part { Full, Reduced, Quotient };

struct ComplexOptions {
  FrobeniusSpec frob;
  Grading grading = Grading::Khovanov;
  Part part = Part::Full;
  int basepoint = 1;  // edge label; used by Reduced and Quotient
  int cap = 16;
};

// Finite cochain complex; group k has homological degree min_degree + k and
// d[k] maps group k to group k + 1.
struct BigradedComplex {
  int min_degree = 0;
  std::vector<std::vector<BasisElement>> groups;
  std::vector<SparseMatrix> d;
  FrobeniusSpec frob;
  Part part = Part::Full;
  int crossings = 0;
  int num_states_circles_max = 0;

  int max_degree() const { return min_degree + static_cast<int>(groups.size()) - 1; }
  bool has_degree(int i) const { return i >= min_degree && i <= max_degree(); }
  const std::vector<BasisElement>& group(int i) const;
  // Differential out of degree i; an empty matrix of the right shape outside the range.
  SparseMatrix differential(int i) const;
  std::size_t total_rank() const;
  // Chain ranks per (i, q).
  std::map<std::pair<int, int>, int> chain_ranks() const;
  // Graded Euler characteristic sum (-1)^i q^j.
  std::map<int, Integer> euler_characteristic() const;
  // Basis index of an element in degree i, or -1.
  int index_of(int i, const BasisElement& e) const;
};

BigradedComplex build_complex(const LinkDiagram& d, const ComplexOptions& opt = {});

// d^{i+1} d^i for every i; returns the first degree where the product is nonzero.
std::optional<int> square_defect(const BigradedComplex& c);

// Rational vectors per degree, indexed like the group basis.
using Vector = std::vector<Rational>;

// Rewrites a Lee complex in the basis of products of a = X + 1 and b = X - 1.
// Group bases keep their state and labels (bit set = b); q is the {1,X} degree
// of the leading X term. Entries become rational.
struct RationalComplex {
  int min_degree = 0;
  std::vector<std::vector<BasisElement>> groups;
  std::vector<std::vector<std::vector<Rational>>> d;  // dense, d[k][row][col]
};
RationalComplex lee_basis_change(const BigradedComplex& c);
// Inverse change back to the {1, X} basis.
RationalComplex lee_basis_restore(const RationalComplex& ab, const BigradedComplex& shape);

// Minimum q-degree among nonzero coordinates.
int filtration_level(const std::vector<BasisElement>& basis, const Vector& v);

std::string complex_to_json(const BigradedComplex& c);

}  // namespace khov
