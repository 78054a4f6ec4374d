#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "khov/complex.hpp"
#include "khov/diagram.hpp"
#include "khov/integer.hpp"
#include "khov/laurent.hpp"

namespace khov {

struct HomologyGroup {
  int rank = 0;
  std::vector<Integer> torsion;  // invariant factors > 1, each dividing the next

  bool is_zero() const { return rank == 0 && torsion.empty(); }
  int z2_count() const;
  // "Z^2 + Z/2", "0" for the trivial group.
  std::string to_string() const;
  friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

HomologyGroup direct_sum(const HomologyGroup& a, const HomologyGroup& b);

struct BidegreeData {
  HomologyGroup group;
  int chain_rank = 0;
  int d_rank = 0;  // rank of the differential leaving this bidegree
};

using Bidegree = std::pair<int, int>;
using GradedHomology = std::map<Bidegree, BidegreeData>;

struct HomologyOptions {
  bool reduce = true;
  int threads = 1;
};

// Cancels invertible entries between generators of equal q-degree.
BigradedComplex gauss_reduce(const BigradedComplex& c);

// Per-(i,j) homology of a complex whose differential preserves q-degree.
// Bidegrees with a nonzero chain group are listed even if the homology vanishes.
GradedHomology homology(const BigradedComplex& c, const HomologyOptions& opt = {});

// Homology per homological degree, ignoring q.
std::map<int, HomologyGroup> ungraded_homology(const BigradedComplex& c, const HomologyOptions& opt = {});
std::map<int, int> rational_betti(const BigradedComplex& c);

struct PoincareData {
  TwoVarPoly P;       // free ranks
  LaurentPoly I;      // P(t, 1), in t
  std::map<Bidegree, std::vector<Integer>> torsion;
  GradedHomology table;
};

// Khovanov homology of D with the Euler check P(-1, q) = J(D).
PoincareData poincare(const LinkDiagram& d, const HomologyOptions& opt = {}, int cap = 16);
PoincareData poincare_of(const GradedHomology& h);

std::string homology_to_json(const GradedHomology& h);

}  // namespace khov
