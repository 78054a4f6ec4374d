#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "khov/diagram.hpp"

namespace khov {

// A 0/1 smoothing choice per crossing. The 0-smoothing joins slots {0,1} and
// {2,3}; the 1-smoothing joins {0,3} and {1,2}.
class KauffmanState {
 public:
  KauffmanState() = default;
  explicit KauffmanState(std::vector<std::uint8_t> bits);
  static KauffmanState from_mask(std::uint64_t mask, int n);

  int size() const { return static_cast<int>(bits_.size()); }
  bool bit(int x) const { return bits_[x] != 0; }
  void set(int x, bool v) { bits_[x] = v ? 1 : 0; }
  int r() const;
  std::uint64_t mask() const;
  // Bit of crossing 0 first.
  std::string to_string() const;
  const std::vector<std::uint8_t>& bits() const { return bits_; }

  friend auto operator<=>(const KauffmanState&, const KauffmanState&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

struct Resolution {
  int num_circles = 0;
  int r = 0;
  std::vector<int> circle_of_edge;  // indexed by edge label; entry 0 unused
  // Per crossing: circle of the arc through slot 0 and of the arc through slot 2.
  std::vector<std::array<int, 2>> arcs;
};

// Circles are numbered by first appearance in increasing edge-label order.
Resolution resolve(const LinkDiagram& d, const KauffmanState& s);

// Circle count of a mask-encoded state on a diagram with at most 64 crossings.
class CircleCounter {
 public:
  explicit CircleCounter(const LinkDiagram& d);
  int count(std::uint64_t mask);

 private:
  int find(int x);
  std::vector<std::array<int, 4>> slots_;
  int edges_;
  std::vector<int> parent_;
};

// Slots joined by the smoothing `bit` at a crossing, as two pairs.
inline std::array<std::array<int, 2>, 2> smoothing_pairs(bool bit) {
  if (!bit) return {{{0, 1}, {2, 3}}};
  return {{{0, 3}, {1, 2}}};
}

}  // namespace khov
