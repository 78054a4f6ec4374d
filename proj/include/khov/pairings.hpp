#pragma once

#include <array>
#include <compare>
#include <vector>

namespace khov {

// Per component, the sorted lower dots i of the chosen neighbor pairs {i, i+1}
// (1-based dots on a line).
struct Pairing {
  std::vector<std::vector<int>> pairs;
  int degree() const;
  friend auto operator<=>(const Pairing&, const Pairing&) = default;
};

std::vector<Pairing> pairings(const std::vector<int>& n, const std::vector<int>& k);

struct GammaGraph {
  std::vector<Pairing> vertices;               // sorted by (degree, pairs)
  std::vector<std::pair<int, int>> edges;      // from lower to higher degree
  std::vector<std::array<int, 4>> squares;     // (s, s1, s2, s12) with s -> s1, s2 -> s12
};

GammaGraph gamma_graph(const std::vector<int>& n);

}  // namespace khov
