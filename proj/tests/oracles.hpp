#pragma once

// Independent reference computations used only by tests.

#include <map>
#include <utility>
#include <vector>

#include "khov/diagram.hpp"
#include "khov/integer.hpp"
#include "khov/laurent.hpp"
#include "khov/tait.hpp"

namespace oracle {

// Circle count by walking darts, without union-find.
int walk_circles(const khov::LinkDiagram& d, const std::vector<int>& bits);

// Skein recursion <X> = <0-smoothing> - q <1-smoothing>, crossing by crossing.
khov::LaurentPoly recursive_bracket(const khov::LinkDiagram& d);

// Kirchhoff count with rational Gaussian elimination.
khov::Integer kirchhoff(const khov::TaitGraph& g);

// Number of k-subsets of neighbor pairs among n dots that are disjoint, by bitmask scan.
long brute_pairings(int n, int k);

// Rank of an integer matrix over Q by dense rational elimination.
int rational_rank(std::vector<std::vector<khov::Rational>> m);

// Invariant factors d_k = D_k / D_{k-1} from gcds of k x k minors.
std::vector<khov::Integer> determinantal_invariant_factors(const std::vector<std::vector<khov::Integer>>& m);

}  // namespace oracle
