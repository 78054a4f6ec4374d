#pragma once

#include <string>
#include <vector>

#include "khov/integer.hpp"

namespace khov {

enum class Domain { Integers, Rationals };

// A = R[X]/(X^2 - hX - t) with basis {1, X}. Label 0 is 1, label 1 is X.
struct FrobeniusSpec {
  Integer h = 0;
  Integer t = 0;
  Domain domain = Domain::Integers;

  static FrobeniusSpec khovanov() { return {}; }
  static FrobeniusSpec lee(Domain d = Domain::Rationals) { return {0, 1, d}; }
  bool graded() const { return h == 0 && t == 0; }
  std::string to_string() const;
};

struct Term1 {
  int label;
  Integer coeff;
};

struct Term2 {
  int first, second;
  Integer coeff;
};

std::vector<Term1> multiply(const FrobeniusSpec& f, int a, int b);
std::vector<Term2> comultiply(const FrobeniusSpec& f, int a);
inline int counit(int a) { return a; }

// q-degree of a label: +1 for 1, -1 for X.
inline int label_degree(int a) { return a ? -1 : 1; }

}  // namespace khov
