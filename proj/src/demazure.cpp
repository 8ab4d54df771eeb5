#include "toricsym/demazure.hpp"

#include "toricsym/lattice_count.hpp"

#include <algorithm>
#include <map>

namespace toricsym {

ClassGroup class_group(const Fan& f) {
    if (!is_complete(f)) throw DomainError("class group needs a complete fan");
    const std::size_t d = f.rays.size(), n = f.dim;
    IntMatrix pairing = IntMatrix::from_rows(f.rays, n);
    SmithDecomposition s = smith_normal_form(pairing);
    const std::size_t r = s.rank();

    ClassGroup cg;
    cg.free_rank = d - r;
    std::vector<std::size_t> torsion_rows;
    for (std::size_t i = 0; i < r; ++i)
        if (s.diagonal[i] > 1) {
            torsion_rows.push_back(i);
            cg.torsion.push_back(s.diagonal[i]);
        }

    // free coordinates are made canonical by a Hermite reduction of their rows
    IntMatrix free(cg.free_rank, d);
    for (std::size_t i = 0; i < cg.free_rank; ++i)
        for (std::size_t v = 0; v < d; ++v) free(i, v) = s.left(r + i, v);
    free = hermite_normal_form(free);

    cg.degree_of.assign(d, {});
    for (std::size_t v = 0; v < d; ++v) {
        for (std::size_t i = 0; i < cg.free_rank; ++i) cg.degree_of[v].push_back(free(i, v));
        for (std::size_t t = 0; t < torsion_rows.size(); ++t) {
            Integer x;
            mpz_fdiv_r(x.get_mpz_t(), s.left(torsion_rows[t], v).get_mpz_t(), cg.torsion[t].get_mpz_t());
            cg.degree_of[v].push_back(x);
        }
    }

    // sum_v <m, v> deg(v) = 0 for every m
    for (std::size_t j = 0; j < n; ++j) {
        IntVector total(cg.free_rank + cg.torsion.size());
        for (std::size_t v = 0; v < d; ++v)
            for (std::size_t c = 0; c < total.size(); ++c) total[c] += f.rays[v][j] * cg.degree_of[v][c];
        for (std::size_t c = 0; c < total.size(); ++c) {
            Integer x = total[c];
            if (c >= cg.free_rank) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), cg.torsion[c - cg.free_rank].get_mpz_t());
            if (x != 0) throw InvariantViolation("degree map does not kill the image of M");
        }
    }
    return cg;
}

std::vector<VariableClass> variable_classes(const Fan& f) {
    ClassGroup cg = class_group(f);
    std::vector<VariableClass> out;
    std::map<IntVector, std::size_t> where;
    for (std::size_t v = 0; v < f.rays.size(); ++v) {
        auto [it, fresh] = where.emplace(cg.degree_of[v], out.size());
        if (fresh) out.push_back({cg.degree_of[v], {}});
        out[it->second].rays.push_back(v);
    }
    return out;
}

namespace {

std::size_t graded_count(const Fan& f, std::size_t v0) {
    HPolytope h{f.dim, {}};
    for (std::size_t w = 0; w < f.rays.size(); ++w) {
        IntVector neg = f.rays[w];
        for (auto& x : neg) x = -x;
        h.inequalities.push_back({neg, w == v0 ? 1 : 0});
    }
    auto q = Polytope::try_from_inequalities(h, true);
    if (!q) throw InvariantViolation("graded piece polytope is empty although it contains 0");
    return enumerate_lattice_points(*q).size();
}

std::size_t graded_dimension_of(const Fan& f, const VariableClass& c) {
    std::size_t dim = graded_count(f, c.rays.front());
    for (std::size_t i = 1; i < c.rays.size(); ++i)
        if (graded_count(f, c.rays[i]) != dim) throw InvariantViolation("graded dimension depends on the representative");
    return dim;
}

}  // namespace

std::size_t graded_dimension(const Fan& f, const IntVector& degree) {
    for (const auto& c : variable_classes(f))
        if (c.degree == degree) return graded_dimension_of(f, c);
    throw ValidationError("no variable has degree " + to_string(degree));
}

RootAutomorphism root_automorphism(const Fan& f, const LatticePoint& m) {
    if (m.size() != f.dim) throw ValidationError("root has the wrong dimension");
    IntVector mi = to_integer(m);
    RootAutomorphism out;
    std::optional<std::size_t> v0;
    for (std::size_t v = 0; v < f.rays.size(); ++v) {
        Integer s = dot(mi, f.rays[v]);
        if (s == -1 && !v0) {
            v0 = v;
            s = 0;
        } else if (s < 0) {
            throw ValidationError(to_string(m) + " is not a root");
        }
        out.exponents.push_back(s);
    }
    if (!v0) throw ValidationError(to_string(m) + " is not a root");
    out.ray = *v0;
    return out;
}

DemazureReport demazure_report(const Fan& f) {
    if (!is_simplicial(f)) throw DomainError("Demazure data needs a simplicial fan");
    DemazureReport r;
    r.class_group = class_group(f);
    r.classes = variable_classes(f);
    std::size_t total = 0;
    for (const auto& c : r.classes) {
        r.graded_dims.push_back(graded_dimension_of(f, c));
        r.gs_factor_sizes.push_back(c.rays.size());
        total += c.rays.size() * r.graded_dims.back();
    }
    std::sort(r.gs_factor_sizes.rbegin(), r.gs_factor_sizes.rend());
    RootData rd = roots(f);
    r.unipotent_dim = rd.unipotent.size();
    r.semisimple_roots = rd.semisimple.size();
    r.is_reductive = r.unipotent_dim == 0;
    r.dim_aut0 = total - r.class_group.free_rank;
    if (r.dim_aut0 != f.dim + rd.roots.size())
        throw InvariantViolation("graded dimension count disagrees with n + |R(P)|");

    if (is_smooth(f) && is_fano(f)) {
        Polytope p = polytope_from_fan(f);
        LatticeAutGroup aut = polytope_automorphisms(p);
        LatticeAutGroup aut0 = aut0_subgroup(p, aut, facet_interior_points(p));
        r.weyl_order = aut0.order();
        r.component_group_order = aut.order() / aut0.order();
    }
    return r;
}

}  // namespace toricsym
