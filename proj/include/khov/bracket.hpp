#pragma once

#include <vector>

#include "khov/diagram.hpp"
#include "khov/laurent.hpp"

namespace khov {

struct BracketOptions {
  int cap = 20;
  int threads = 1;
};

// <D> = sum over states of (-q)^r (q + q^-1)^n.
LaurentPoly kauffman_bracket(const LinkDiagram& d, const BracketOptions& opt = {});

// J = (-1)^{c-} q^{c+ - 2c-} <D>.
LaurentPoly jones(const LinkDiagram& d, const BracketOptions& opt = {});

// True iff removing the curl at crossing x scales the bracket by q^-1 or -q^2.
bool bracket_r1_check(const LinkDiagram& d, int x, const BracketOptions& opt = {});

// Colored Jones polynomial from the Jones polynomials of cables.
LaurentPoly colored_jones(const LinkDiagram& d, const std::vector<int>& colors, const BracketOptions& opt = {});

Integer binomial(int n, int k);

}  // namespace khov
