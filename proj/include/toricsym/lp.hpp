#pragma once

#include "toricsym/types.hpp"

#include <optional>

namespace toricsym {

enum class LpStatus { optimal, infeasible, unbounded };

struct LpResult {
    LpStatus status = LpStatus::infeasible;
    Rational value;
    RatVector point;  // empty unless optimal
};

/// maximize c.x subject to A x <= b and E x = e, x free.  Exact simplex, Bland's rule.
LpResult lp_maximize(const RatVector& c, const std::vector<RatVector>& a, const RatVector& b,
                     const std::vector<RatVector>& eq_a = {}, const RatVector& eq_b = {});

/// Some point of {A x <= b, E x = e}, or nullopt when that set is empty.
std::optional<RatVector> lp_feasible_point(std::size_t dim, const std::vector<RatVector>& a, const RatVector& b,
                                           const std::vector<RatVector>& eq_a = {}, const RatVector& eq_b = {});

}  // namespace toricsym
