#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "khov/diagram.hpp"

namespace khov {

// Named fixtures: unknot, unlink(n), unknot_kinked+/-, unknot_double_kinked,
// hopf+/-, trefoil (= trefoil-), trefoil+, figure_eight, torus_link(2,n),
// granny, square, mutant_L(n1,n2), mutant_Lp(n1,n2), trefoil_r2,
// figure_eight_r2, braid(k;w1,...,wm), mirror(name).
LinkDiagram catalog(std::string_view name);
bool is_catalog_name(std::string_view name);

// Finite instantiation of the catalog used by the property suites.
std::vector<std::string> standard_catalog();

}  // namespace khov
