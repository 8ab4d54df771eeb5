#pragma once

#include "toricsym/symmetry.hpp"

#include <map>

namespace toricsym {

/// Gauge of -u with respect to P: inf{l > 0 : -u/l in P}.  Needs 0 strictly inside P.
Rational dual_norm(const RatVector& u, const Polytope& p);

/// 1 / (1 + max of the dual norm over the H-fixed slice of P), or 1 when the slice is {0}.
/// `h` acts on M and must be a subgroup of Aut P.
Rational alpha_invariant(const Fan& f, const LatticeAutGroup& h);

/// min over rays of 1 / (1 + <Bc, v>)
Rational delta_invariant(const Fan& f);
Rational delta_k(const Fan& f, long k);

struct StabilityReport {
    Rational delta;
    std::map<long, Rational> delta_k;
    std::map<std::string, Rational> alpha;  // keyed by subgroup name; "full" is Aut P
    bool ke_exists = false;                 // Bc(P) = 0
    bool reductive = false;                 // R(P) = -R(P)
    std::map<long, bool> balanced_k;        // Bc_k(P) = 0
};

/// Combinatorial verdicts for k = 1..k_budget.
StabilityReport metric_verdicts(const Fan& f, long k_budget);

}  // namespace toricsym
