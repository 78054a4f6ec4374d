#pragma once

#include <array>
#include <map>
#include <vector>

#include "khov/diagram.hpp"

namespace khov {

// Diagram under construction: arbitrary edge ids with explicit orientation.
struct RawCrossing {
  std::array<long, 4> e{};  // counterclockwise, e[0] = incoming under edge
  int over_in = 3;          // slot where the over strand enters (1 or 3)
};

struct RawDiagram {
  std::vector<RawCrossing> crossings;
  std::vector<long> free_keys;   // one entry per crossingless circle
  std::map<long, long> order_key;  // ordering key per edge id; defaults to the id

  long key(long id) const;
};

// Relabels consecutively along each oriented component and validates.
// Components are ordered by their smallest key.
LinkDiagram canonicalize(const RawDiagram& raw);
RawDiagram to_raw(const LinkDiagram& d, long offset = 0);

// Closure of a braid word; generator +i is a positive crossing between
// strand positions i and i+1 (1-based).
LinkDiagram braid_closure(int strands, const std::vector<int>& word);

LinkDiagram mirror(const LinkDiagram& d);
LinkDiagram reverse_components(const LinkDiagram& d, const std::vector<bool>& which);
LinkDiagram reverse_all(const LinkDiagram& d);

// m-cable with blackboard framing; strand k of a component runs in the
// original direction for odd k, counted from the left of the original strand.
LinkDiagram cable(const LinkDiagram& d, const std::vector<int>& multiplicities);

LinkDiagram disjoint_union(const LinkDiagram& a, const LinkDiagram& b);
// Joins edge ea of a with edge eb of b.
LinkDiagram connected_sum(const LinkDiagram& a, int ea, const LinkDiagram& b, int eb);

enum class HopfChirality { Negative, Positive };
// Inserts a two-crossing clasp with a new circle into edge e. Negative makes
// both new crossings negative.
LinkDiagram hopf_sum(const LinkDiagram& d, int e, HopfChirality chirality = HopfChirality::Negative);

// True iff crossing x carries a loop edge between two adjacent slots.
bool is_curl(const LinkDiagram& d, int x);
LinkDiagram remove_curl(const LinkDiagram& d, int x);

}  // namespace khov
