#pragma once

#include <map>
#include <optional>
#include <vector>

#include "khov/complex.hpp"
#include "khov/diagram.hpp"
#include "khov/homology.hpp"

namespace khov {

BigradedComplex lee_complex(const LinkDiagram& d, Grading grading = Grading::Khovanov, int cap = 16);

struct LeeHomology {
  std::map<int, int> rational;                 // dimension per homological degree
  std::map<int, HomologyGroup> integral;       // filled for Domain::Integers
  int total_dimension() const;
};

LeeHomology lee_homology(const LinkDiagram& d, Domain domain = Domain::Rationals,
                         Grading grading = Grading::Khovanov, int cap = 16);

// Per-component reversal flags relative to the stored orientation.
using Orientation = std::vector<bool>;

struct LeeClass {
  int degree = 0;
  Vector coords;  // over the {1,X} basis of group `degree`
  Orientation orientation;
  std::uint64_t state = 0;  // the oriented resolution
  std::vector<char> circle_labels;  // 'a' or 'b' per circle of that resolution
};

LeeClass canonical_generator(const LinkDiagram& d, const BigradedComplex& lee, const Orientation& o,
                             std::optional<int> outer = std::nullopt);

// d applied to a vector of group `degree`.
Vector apply_differential(const BigradedComplex& c, int degree, const Vector& v);

// Largest j with z in F^j + im d. The default path first cancels entries
// between equal q-degrees over Q while transporting z.
int filtered_degree(const BigradedComplex& lee, int degree, const Vector& z);
int filtered_degree_direct(const BigradedComplex& lee, int degree, const Vector& z);

struct RasmussenData {
  int deg_plus = 0;   // [s_o + s_obar]
  int deg_minus = 0;  // [s_o - s_obar]
  int s = 0;
};

RasmussenData rasmussen(const LinkDiagram& d, std::optional<int> outer = std::nullopt, int cap = 16);
int rasmussen_s(const LinkDiagram& d, std::optional<int> outer = std::nullopt, int cap = 16);

}  // namespace khov
