#include "khov/frobenius.hpp"

namespace khov {

std::string FrobeniusSpec::to_string() const {
  return "h=" + khov::to_string(h) + ",t=" + khov::to_string(t) +
         (domain == Domain::Rationals ? " over Q" : " over Z");
}

std::vector<Term1> multiply(const FrobeniusSpec& f, int a, int b) {
  if (a == 0) return {{b, 1}};
  if (b == 0) return {{a, 1}};
  std::vector<Term1> out;
  if (f.h != 0) out.push_back({1, f.h});
  if (f.t != 0) out.push_back({0, f.t});
  return out;
}

std::vector<Term2> comultiply(const FrobeniusSpec& f, int a) {
  std::vector<Term2> out;
  if (a == 0) {
    out.push_back({0, 1, 1});
    out.push_back({1, 0, 1});
    if (f.h != 0) out.push_back({0, 0, -f.h});
  } else {
    out.push_back({1, 1, 1});
    if (f.t != 0) out.push_back({0, 0, f.t});
  }
  return out;
}

}  // namespace khov
