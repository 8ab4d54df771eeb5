#pragma once

#include "toricsym/linalg.hpp"

#include <optional>

namespace toricsym {

/// <y, normal> <= rhs
struct Inequality {
    IntVector normal;
    Rational rhs;

    bool satisfied_by(const RatVector& y) const { return dot(y, normal) <= rhs; }
    bool tight_at(const RatVector& y) const { return dot(y, normal) == rhs; }
    friend bool operator==(const Inequality&, const Inequality&) = default;
};

/// Scale to a primitive integer normal (rhs scaled along); a zero normal is left alone.
Inequality normalized(const RatVector& normal, const Rational& rhs);

struct HPolytope {
    std::size_t dim = 0;
    std::vector<Inequality> inequalities;
};

struct VPolytope {
    std::vector<RatVector> vertices;
};

/// Paired H/V description.  Vertices are kept in lexicographic order.
class Polytope {
public:
    Polytope() = default;

    /// Vertex enumeration.  Lower-dimensional input is accepted only when asked for.
    static Polytope from_inequalities(const HPolytope& h, bool allow_lower_dim = false);
    /// Same, but an empty system yields nullopt instead of an error.
    static std::optional<Polytope> try_from_inequalities(const HPolytope& h, bool allow_lower_dim = false);
    /// Convex hull of a full-dimensional point set.
    static Polytope from_points(std::size_t dim, const std::vector<RatVector>& points);
    /// Both descriptions already known to be correct and irredundant (lifted polytopes).
    static Polytope from_trusted(std::size_t dim, std::vector<Inequality> facets, std::vector<RatVector> vertices);
    static Polytope point(std::size_t dim);

    std::size_t dim() const { return dim_; }
    std::size_t affine_dim() const { return affine_dim_; }
    bool full_dimensional() const { return affine_dim_ == dim_; }

    const std::vector<Inequality>& facets() const { return facets_; }
    /// Hyperplanes <y, normal> = rhs containing the polytope (empty when full-dimensional).
    const std::vector<Inequality>& equations() const { return equations_; }
    const std::vector<RatVector>& vertices() const { return vertices_; }
    /// Indices of input inequalities that turned out redundant.
    const std::vector<std::size_t>& dropped() const { return dropped_; }

    bool incident(std::size_t facet, std::size_t vertex) const { return incidence_[facet][vertex]; }
    std::vector<std::size_t> facet_vertices(std::size_t facet) const;

    /// All inequalities, with each equation written as a pair of opposite inequalities.
    HPolytope h() const;
    VPolytope v() const { return {vertices_}; }

private:
    std::size_t dim_ = 0;
    std::size_t affine_dim_ = 0;
    std::vector<Inequality> facets_;
    std::vector<Inequality> equations_;
    std::vector<RatVector> vertices_;
    std::vector<std::vector<bool>> incidence_;
    std::vector<std::size_t> dropped_;

    void build_incidence();
};

Polytope vertices_from_inequalities(const HPolytope& h);

/// Affine dimension of a point set (-1 for the empty set).
long affine_dimension(const std::vector<RatVector>& points);

struct VolumeBarycenter {
    Rational volume;
    RatVector barycenter;
};

VolumeBarycenter volume_and_barycenter(const Polytope& p);

Polytope dilate(const Polytope& p, long k);

bool contains(const Polytope& p, const RatVector& x, bool strict = false);

struct Slice {
    bool empty = false;
    Polytope polytope;               // in basis coordinates
    std::vector<RatVector> basis;    // ambient images of the coordinate vectors

    RatVector to_ambient(const RatVector& t) const;
};

/// P ∩ span(basis), expressed in basis coordinates.
Slice intersect_with_subspace(const Polytope& p, const std::vector<RatVector>& basis);

bool is_lattice_polytope(const Polytope& p);

}  // namespace toricsym
