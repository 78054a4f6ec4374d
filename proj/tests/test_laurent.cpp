#include "doctest.h"
#include "khov/laurent.hpp"

using namespace khov;

TEST_CASE("laurent arithmetic drops zero coefficients") {
  LaurentPoly a = LaurentPoly::monomial(2) + LaurentPoly::monomial(-1, 3);
  LaurentPoly b = a - LaurentPoly::monomial(2);
  CHECK(b.terms().size() == 1);
  CHECK(b.coeff(-1) == 3);
  CHECK((a - a).is_zero());
}

TEST_CASE("circle powers and shifts") {
  LaurentPoly c2 = LaurentPoly::circle().pow(2);
  CHECK(c2.coeff(2) == 1);
  CHECK(c2.coeff(0) == 2);
  CHECK(c2.coeff(-2) == 1);
  CHECK(c2.shifted(3).min_exponent() == 1);
  CHECK(c2.inverted() == c2);
  CHECK(LaurentPoly::circle().pow(0) == LaurentPoly::constant(1));
}

TEST_CASE("laurent text rendering is sorted by exponent") {
  LaurentPoly p = LaurentPoly::monomial(-9) + LaurentPoly::monomial(-3) + LaurentPoly::monomial(-1);
  CHECK(p.to_string() == "q^-9 + q^-3 + q^-1");
  LaurentPoly j = LaurentPoly::monomial(1) + LaurentPoly::monomial(3) + LaurentPoly::monomial(5) -
                  LaurentPoly::monomial(9);
  CHECK(j.to_string() == "q + q^3 + q^5 - q^9");
  CHECK(LaurentPoly::constant(-2).to_string() == "-2");
  CHECK(LaurentPoly().to_string() == "0");
}

TEST_CASE("two-variable specializations") {
  TwoVarPoly p;
  p.add_term(0, 1, 1);
  p.add_term(0, -1, 1);
  p.add_term(-2, -5, 1);
  CHECK(p.at_q_one().coeff(0) == 2);
  CHECK(p.at_q_one().coeff(-2) == 1);
  CHECK(p.at_t_minus_one().coeff(-5) == 1);
  TwoVarPoly sq = p * p;
  CHECK(sq.coeff(0, 0) == 2);
  CHECK(p.to_string() == "t^-2q^-5 + q^-1 + q");
}
