#pragma once

#include "toricsym/polytope.hpp"

namespace toricsym {

/// Bound systems from successive elimination.  Level j constrains x_0..x_j; only rows with a
/// nonzero x_j coefficient are kept there.  Rows are integral: sum a_i x_i <= rhs * k.
class EnumerationPlan {
public:
    struct Row {
        std::vector<std::int64_t> coeffs;  // length j + 1
        std::int64_t rhs = 0;
    };

    explicit EnumerationPlan(const Polytope& p);

    std::size_t dim() const { return levels_.size(); }
    const std::vector<Row>& level(std::size_t j) const { return levels_[j]; }

private:
    std::vector<std::vector<Row>> levels_;
};

struct CountAndSum {
    Integer count;
    IntVector sum;  // coordinatewise sum of all lattice points
};

/// Count and coordinate sum of kP ∩ Z^n.  `threads` = 0 means: use TORICSYM_THREADS or the hardware.
CountAndSum count_and_sum(const EnumerationPlan& plan, long k, unsigned threads = 0);
CountAndSum count_and_sum(const Polytope& p, long k, unsigned threads = 0);

/// Lattice points of kP in lexicographic order.
std::vector<LatticePoint> enumerate_lattice_points(const Polytope& p, long k = 1);

RatVector quantized_barycenter(const Polytope& p, long k);

/// Coefficients a_0..a_deg of a polynomial in k.
struct Polynomial {
    std::vector<Rational> coefficients;

    Rational operator()(const Rational& k) const;
    bool is_zero() const;
    std::size_t degree() const;  // 0 for the zero polynomial
};

/// Lagrange interpolation through (xs[i], ys[i]).
Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys);

struct EhrhartPolynomial : Polynomial {};

/// Interpolated from counts at k = 0..n; a_0 = 1 and a_n = volume are checked.
EhrhartPolynomial ehrhart_polynomial(const Polytope& p);

/// P_i = {(u,h) : u in P, 0 <= h <= u_i + shift}
Polytope lifted_polytope(const Polytope& p, std::size_t coordinate, const Integer& shift);

/// Smallest nonnegative integer C with u_i + C >= 0 on P.
Integer lift_shift(const Polytope& p, std::size_t coordinate);

struct BarycenterRationalFunction {
    EhrhartPolynomial denominator;          // E_P
    std::vector<Polynomial> numerators;     // per coordinate, degree <= n
    std::vector<Polynomial> raw_numerators; // E_{P_i} - (C_i k + 1) E_P, before dividing by k
    std::vector<Integer> shifts;

    RatVector operator()(long k) const;
    bool identically_zero() const;
};

BarycenterRationalFunction barycenter_rational_function(const Polytope& p);

struct RigidityVerdict {
    bool identically_zero = false;
    std::vector<std::pair<long, RatVector>> witnesses;  // k with Bc_k != 0
    RatVector barycenter;                                // exact Bc(P) when identically zero
};

/// Needs at least n+1 distinct positive k.
RigidityVerdict rigidity_verdict(const Polytope& p, const std::vector<long>& ks);

/// Worker count honoring TORICSYM_THREADS.
unsigned worker_count();

}  // namespace toricsym
