#pragma once

#include "toricsym/fan.hpp"

#include <functional>

namespace toricsym {

/// A finite group of unimodular matrices, kept sorted, with the permutations each element induces.
/// For polytope groups the permutations act on vertices and facets (matrices act on M); for fan
/// groups they act on rays and maximal cones (matrices act on N).
struct LatticeAutGroup {
    std::size_t dim = 0;
    std::vector<IntMatrix> elements;
    std::vector<std::vector<std::size_t>> vertex_permutations;  // image index of each vertex / ray
    std::vector<std::vector<std::size_t>> facet_permutations;   // image index of each facet / cone

    std::size_t order() const { return elements.size(); }
    std::optional<std::size_t> index_of(const IntMatrix& g) const;
    bool contains(const IntMatrix& g) const { return index_of(g).has_value(); }
};

/// Identity, closure and inverses, checked exhaustively; throws InvariantViolation.
void check_group_axioms(const LatticeAutGroup& g);

/// Lattice automorphisms of a full-dimensional lattice polytope.
LatticeAutGroup polytope_automorphisms(const Polytope& p);

/// Unimodular maps of N permuting the rays and the maximal cones.  For Fano fans the result is
/// checked against the polytope group through g -> (g^-1)^T.
LatticeAutGroup fan_automorphisms(const Fan& f);

/// (g^-1)^T: carries an automorphism of M to the matching one of N and back.
IntMatrix dual_action(const IntMatrix& g);

/// Elements of `parent` passing `keep`; closure is asserted.
LatticeAutGroup filter_subgroup(const LatticeAutGroup& parent, const std::function<bool(std::size_t)>& keep);

/// Smallest subgroup of `parent` containing `generators`.
LatticeAutGroup generated_subgroup(const LatticeAutGroup& parent, const std::vector<IntMatrix>& generators);

/// Basis of the common fixed space of the elements; empty means {0}.
std::vector<RatVector> fixed_subspace(const LatticeAutGroup& g);

struct Root {
    LatticePoint m;
    std::size_t ray = 0;  // the unique ray pairing to -1
    friend bool operator==(const Root&, const Root&) = default;
    friend auto operator<=>(const Root&, const Root&) = default;
};

struct RootData {
    std::vector<Root> roots;       // sorted by m
    std::vector<Root> semisimple;  // -m also a root
    std::vector<Root> unipotent;
};

/// Lattice points m with <m,v> = -1 for one ray v and <m,v'> >= 0 for all the others.
RootData roots(const Fan& f);

/// Lattice points lying in the relative interior of exactly one facet; `ray` is the facet index.
RootData facet_interior_points(const Polytope& p);

struct SymmetryClassification {
    bool centrally_symmetric = false;
    bool bs_symmetric = false;
    bool centrally_lattice_symmetric = false;
    std::size_t fixed_space_dimension = 0;
};

/// The lattice group used for classification: Aut P for Fano fans, otherwise Aut of the fan
/// carried over to M (non-lattice polytopes have no usable vertex frame).
LatticeAutGroup symmetry_group_on_m(const Fan& f);

SymmetryClassification classify_symmetry(const Fan& f);

/// Elements g of Aut P such that for every facet F with gF != F, some root lies in gF with its
/// negative in F.
LatticeAutGroup aut0_subgroup(const Polytope& p, const LatticeAutGroup& aut, const RootData& facet_roots);
LatticeAutGroup aut0_subgroup(const Polytope& p);

}  // namespace toricsym
