#pragma once

#include "toricsym/polytope.hpp"

namespace toricsym {

using Cone = std::vector<std::size_t>;  // sorted ray indices

struct Fan {
    std::size_t dim = 0;
    std::vector<IntVector> rays;
    std::vector<Cone> max_cones;
};

struct FanValidation {
    std::vector<std::string> problems;
    std::vector<std::pair<std::size_t, std::size_t>> bad_pairs;  // cone indices failing the intersection axiom

    bool ok() const { return problems.empty(); }
};

FanValidation validate_fan(const Fan& f);

/// Throws ValidationError carrying the first problem when the fan is invalid.
void require_valid(const Fan& f);

bool is_complete(const Fan& f);
bool is_simplicial(const Fan& f);
bool is_smooth(const Fan& f);

/// The anticanonical polytope {y : <y, -v> <= 1 for every ray v}.
Polytope polytope_from_fan(const Fan& f);

/// Cones over the facets of conv(vertices); the hull vertices become the rays, in input order.
Fan face_fan_from_polytope(const std::vector<IntVector>& vertices);

/// Reflexivity: rays are the vertices of their hull and the anticanonical polytope is a
/// lattice polytope whose facets are exactly the hyperplanes <y, -v> = 1.
bool is_fano(const Fan& f);

/// Index of the facet of polytope_from_fan(f) supported by ray i, if that inequality is a facet.
std::optional<std::size_t> facet_of_ray(const Polytope& p, const IntVector& ray);

/// The facets (as sorted ray index sets) of one cone spanned by the given rays.
std::vector<Cone> cone_facets(const Fan& f, const Cone& cone);

}  // namespace toricsym
