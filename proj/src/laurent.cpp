#include "khov/laurent.hpp"

#include <stdexcept>

namespace khov {

namespace {

std::string monomial_text(const std::string& var, int e) {
  if (e == 0) return "";
  if (e == 1) return var;
  return var + "^" + std::to_string(e);
}

// Joins signed terms as "a + b - c".
void append_term(std::string& out, const Integer& c, const std::string& mono) {
  Integer mag = abs(c);
  std::string body;
  if (mono.empty()) {
    body = mag.get_str();
  } else {
    body = (mag == 1 ? "" : mag.get_str()) + mono;
  }
  if (out.empty()) {
    out = (c < 0 ? "-" : "") + body;
  } else {
    out += (c < 0 ? " - " : " + ") + body;
  }
}

}  // namespace

LaurentPoly LaurentPoly::monomial(int exponent, const Integer& coeff) {
  LaurentPoly p;
  p.add_term(exponent, coeff);
  return p;
}

LaurentPoly LaurentPoly::circle() { return monomial(1) + monomial(-1); }

Integer LaurentPoly::coeff(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

int LaurentPoly::min_exponent() const {
  if (terms_.empty()) throw std::logic_error("min_exponent of zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (terms_.empty()) throw std::logic_error("max_exponent of zero polynomial");
  return terms_.rbegin()->first;
}

void LaurentPoly::add_term(int exponent, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
  LaurentPoly result;
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) result.add_term(e1 + e2, c1 * c2);
  *this = std::move(result);
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const Integer& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) v *= c;
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly p = *this;
  p *= Integer(-1);
  return p;
}

LaurentPoly LaurentPoly::pow(int n) const {
  if (n < 0) throw std::invalid_argument("negative power of a Laurent polynomial");
  LaurentPoly result = constant(1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1) result *= base;
    n >>= 1;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(e + k, c);
  return p;
}

LaurentPoly LaurentPoly::inverted() const {
  LaurentPoly p;
  for (const auto& [e, c] : terms_) p.terms_.emplace(-e, c);
  return p;
}

Integer LaurentPoly::evaluate_at_one() const {
  Integer s = 0;
  for (const auto& [e, c] : terms_) s += c;
  return s;
}

std::string LaurentPoly::to_string(const std::string& var) const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) append_term(out, c, monomial_text(var, e));
  return out;
}

std::vector<std::pair<int, Integer>> LaurentPoly::pairs() const {
  return {terms_.begin(), terms_.end()};
}

Integer TwoVarPoly::coeff(int t_exp, int q_exp) const {
  auto it = terms_.find({t_exp, q_exp});
  return it == terms_.end() ? Integer(0) : it->second;
}

void TwoVarPoly::add_term(int t_exp, int q_exp, const Integer& coeff) {
  if (coeff == 0) return;
  auto [it, inserted] = terms_.try_emplace({t_exp, q_exp}, coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

TwoVarPoly& TwoVarPoly::operator+=(const TwoVarPoly& o) {
  for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
  return *this;
}

TwoVarPoly operator*(const TwoVarPoly& a, const TwoVarPoly& b) {
  TwoVarPoly r;
  for (const auto& [k1, c1] : a.terms_)
    for (const auto& [k2, c2] : b.terms_) r.add_term(k1.first + k2.first, k1.second + k2.second, c1 * c2);
  return r;
}

LaurentPoly TwoVarPoly::at_q_one() const {
  LaurentPoly p;
  for (const auto& [k, c] : terms_) p.add_term(k.first, c);
  return p;
}

LaurentPoly TwoVarPoly::at_t_minus_one() const {
  LaurentPoly p;
  for (const auto& [k, c] : terms_) p.add_term(k.second, (k.first % 2 == 0) ? c : Integer(-c));
  return p;
}

std::string TwoVarPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) append_term(out, c, monomial_text("t", k.first) + monomial_text("q", k.second));
  return out;
}

}  // namespace khov
