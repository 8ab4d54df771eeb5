#pragma once

#include "toricsym/symmetry.hpp"

namespace toricsym {

/// Cokernel of M -> Z^rays, m -> (<m, v>)_v.
struct ClassGroup {
    std::size_t free_rank = 0;
    std::vector<Integer> torsion;      // invariant factors > 1
    std::vector<IntVector> degree_of;  // per ray: free coordinates, then torsion residues
};

ClassGroup class_group(const Fan& f);

/// Rays sharing one divisor class.
struct VariableClass {
    IntVector degree;
    std::vector<std::size_t> rays;
};

/// Ordered by smallest member ray.
std::vector<VariableClass> variable_classes(const Fan& f);

/// dim S_alpha for the class containing `ray`, counted as the lattice points of
/// {m : <m, v0> >= -1, <m, v'> >= 0 for v' != v0}; checked against every other member of the class.
std::size_t graded_dimension(const Fan& f, const IntVector& degree);

/// x_{v0} -> x_{v0} + lambda x^D for a root m.
struct RootAutomorphism {
    std::size_t ray = 0;        // v0
    std::vector<Integer> exponents;  // a_v = <m, v>, zero at v0
};

RootAutomorphism root_automorphism(const Fan& f, const LatticePoint& m);

struct DemazureReport {
    ClassGroup class_group;
    std::vector<VariableClass> classes;
    std::vector<std::size_t> graded_dims;      // aligned with classes
    std::vector<std::size_t> gs_factor_sizes;  // |Delta_alpha|, descending
    std::size_t unipotent_dim = 0;
    std::size_t semisimple_roots = 0;
    std::size_t dim_aut0 = 0;
    bool is_reductive = false;
    // only for smooth Fano fans
    std::optional<std::size_t> weyl_order;
    std::optional<std::size_t> component_group_order;
};

DemazureReport demazure_report(const Fan& f);

}  // namespace toricsym
