#include "toricsym/stability.hpp"

#include "toricsym/lattice_count.hpp"

#include <algorithm>

namespace toricsym {

namespace {

void require_fano(const Fan& f) {
    if (!is_fano(f)) throw DomainError("stability thresholds need a reflexive (Gorenstein Fano) fan");
}

// 1 + <b, v> is positive because b lies inside P
Rational threshold(const Fan& f, const RatVector& b) {
    Rational worst = 0;
    for (const auto& v : f.rays) worst = std::max(worst, dot(b, v));
    return 1 / (1 + worst);
}

}  // namespace

Rational dual_norm(const RatVector& u, const Polytope& p) {
    if (u.size() != p.dim()) throw ValidationError("dual_norm: dimension mismatch");
    Rational best = 0;
    for (const auto& f : p.facets()) {
        if (f.rhs <= 0) throw DomainError("dual_norm needs the origin strictly inside the polytope");
        best = std::max(best, Rational(-dot(u, f.normal) / f.rhs));
    }
    return best;
}

Rational alpha_invariant(const Fan& f, const LatticeAutGroup& h) {
    require_fano(f);
    Polytope p = polytope_from_fan(f);
    auto basis = fixed_subspace(h);
    if (basis.empty()) return 1;
    Slice s = intersect_with_subspace(p, basis);
    if (s.empty) throw InvariantViolation("fixed slice of P is empty although 0 is interior");
    Rational worst = 0;
    for (const auto& w : s.polytope.vertices()) worst = std::max(worst, dual_norm(s.to_ambient(w), p));
    return 1 / (1 + worst);
}

Rational delta_invariant(const Fan& f) {
    require_fano(f);
    return threshold(f, volume_and_barycenter(polytope_from_fan(f)).barycenter);
}

Rational delta_k(const Fan& f, long k) {
    require_fano(f);
    return threshold(f, quantized_barycenter(polytope_from_fan(f), k));
}

StabilityReport metric_verdicts(const Fan& f, long k_budget) {
    require_fano(f);
    Polytope p = polytope_from_fan(f);
    StabilityReport r;
    RatVector bc = volume_and_barycenter(p).barycenter;
    r.delta = threshold(f, bc);
    r.ke_exists = is_zero(bc);
    if ((r.delta == 1) != r.ke_exists) throw InvariantViolation("delta = 1 disagrees with Bc = 0");
    for (long k = 1; k <= k_budget; ++k) {
        RatVector b = quantized_barycenter(p, k);
        r.delta_k[k] = threshold(f, b);
        r.balanced_k[k] = is_zero(b);
        if ((r.delta_k[k] == 1) != r.balanced_k[k]) throw InvariantViolation("delta_k = 1 disagrees with Bc_k = 0");
    }
    r.alpha["full"] = alpha_invariant(f, polytope_automorphisms(p));
    r.reductive = roots(f).unipotent.empty();
    return r;
}

}  // namespace toricsym
