#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "khov/integer.hpp"

namespace khov {

// Exact Laurent polynomial in one variable. Zero coefficients are never stored.
class LaurentPoly {
 public:
  using Terms = std::map<int, Integer>;

  LaurentPoly() = default;
  static LaurentPoly monomial(int exponent, const Integer& coeff = 1);
  static LaurentPoly constant(const Integer& c) { return monomial(0, c); }
  // q + q^-1
  static LaurentPoly circle();

  const Terms& terms() const { return terms_; }
  Integer coeff(int exponent) const;
  bool is_zero() const { return terms_.empty(); }
  int min_exponent() const;
  int max_exponent() const;

  void add_term(int exponent, const Integer& coeff);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const Integer& c);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  friend LaurentPoly operator*(LaurentPoly a, const Integer& c) { return a *= c; }
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  LaurentPoly pow(int n) const;
  // Multiply by var^k.
  LaurentPoly shifted(int k) const;
  // Substitute var -> var^-1.
  LaurentPoly inverted() const;
  Integer evaluate_at_one() const;

  std::string to_string(const std::string& var = "q") const;
  std::vector<std::pair<int, Integer>> pairs() const;

 private:
  Terms terms_;
};

// Exact polynomial in (t, q) with integer exponents.
class TwoVarPoly {
 public:
  using Key = std::pair<int, int>;  // (t-exponent, q-exponent)
  using Terms = std::map<Key, Integer>;

  const Terms& terms() const { return terms_; }
  Integer coeff(int t_exp, int q_exp) const;
  bool is_zero() const { return terms_.empty(); }
  void add_term(int t_exp, int q_exp, const Integer& coeff);

  TwoVarPoly& operator+=(const TwoVarPoly& o);
  friend TwoVarPoly operator*(const TwoVarPoly& a, const TwoVarPoly& b);
  friend bool operator==(const TwoVarPoly&, const TwoVarPoly&) = default;

  // P(t, 1) as a polynomial in t.
  LaurentPoly at_q_one() const;
  // P(-1, q) as a polynomial in q.
  LaurentPoly at_t_minus_one() const;

  std::string to_string() const;

 private:
  Terms terms_;
};

}  // namespace khov
