#pragma once

#include "toricsym/linalg.hpp"

namespace toricsym {

/// Canonical form of a lattice polygon around the origin under GL(2,Z): the least row-style
/// Hermite form of its 2 x m vertex matrix over all cyclic starts and both orientations.
IntMatrix polygon_normal_form(const std::vector<IntVector>& ccw_vertices);

/// One representative (counterclockwise vertices) per GL(2,Z) class of reflexive polygons with a
/// representative inside [-box, box]^2, found by exhaustive search.  Sorted by normal form.
std::vector<std::vector<IntVector>> reflexive_polygons(int box = 3);

}  // namespace toricsym
