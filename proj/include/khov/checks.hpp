#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "khov/builder.hpp"
#include "khov/diagram.hpp"
#include "khov/homology.hpp"

namespace khov {

// Bracket-level homology of the unshifted cube complex.
GradedHomology bracket_homology(const LinkDiagram& d, Part part = Part::Full, int basepoint = 1);

struct AlternatingReport {
  int n1 = 0;
  bool n1_constant = true;
  int i_minus = 0, i_plus = 0;
  bool has_splitting = false;
  bool support_ok = false;    // homology on j = 2i - n1 +- 1 and inside [i_minus, i_plus]
  bool torsion_ok = false;    // torsion only on j = 2i - n1 - 1
  bool corners_ok = false;    // corner groups nonzero and free, and Z with i_- = 0, i_+ = c when nothing splits
  bool ok() const { return n1_constant && support_ok && torsion_ok && corners_ok; }
};

AlternatingReport alternating_report(const LinkDiagram& d);

struct RankBoundReport {
  bool bidegree_ok = true;
  bool total_ok = true;
  int total_rational = 0;
  int k1 = 0;
  std::vector<std::string> violations;
};

RankBoundReport rank_bound_check(const LinkDiagram& d, const std::vector<int>& ordering);

struct HopfReport {
  bool ok = false;
  std::vector<std::string> mismatches;
};

// H^{i,j}(D # H) = H^{i+2,j+5}(D) + H^{i,j+1}(D) on Khovanov-normalized homology.
HopfReport hopf_addition_check(const LinkDiagram& d, int edge, HopfChirality chirality = HopfChirality::Negative);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Slice-genus style (in)equalities for s on catalog pairs.
std::vector<CheckResult> s_property_suite(const std::vector<std::pair<std::string, std::string>>& pairs);

// Everything exposed by `check-all`.
std::vector<CheckResult> property_suite();

}  // namespace khov
