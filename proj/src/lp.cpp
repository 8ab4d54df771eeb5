#include "toricsym/lp.hpp"

namespace toricsym {

namespace {

// Dense tableau over equality rows  T x = rhs, x >= 0, rhs >= 0.
struct Tableau {
    std::vector<RatVector> rows;  // each of width cols + 1, last entry is the rhs
    std::vector<std::size_t> basis;
    std::size_t cols = 0;

    void pivot(std::size_t r, std::size_t c) {
        Rational inv = 1 / rows[r][c];
        for (auto& x : rows[r]) x *= inv;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c] == 0) continue;
            Rational f = rows[i][c];
            for (std::size_t j = 0; j <= cols; ++j)
                if (rows[r][j] != 0) rows[i][j] -= f * rows[r][j];
        }
        basis[r] = c;
    }

    // Maximize cost over columns < usable.  Returns false when unbounded.
    bool run(const RatVector& cost, std::size_t usable) {
        for (;;) {
            std::size_t enter = usable;
            for (std::size_t j = 0; j < usable && enter == usable; ++j) {
                Rational rc = cost[j];
                for (std::size_t i = 0; i < rows.size(); ++i)
                    if (rows[i][j] != 0) rc -= cost[basis[i]] * rows[i][j];
                if (rc > 0) enter = j;
            }
            if (enter == usable) return true;
            std::size_t leave = rows.size();
            Rational best;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter] <= 0) continue;
                Rational ratio = rows[i][cols] / rows[i][enter];
                if (leave == rows.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == rows.size()) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpResult lp_maximize(const RatVector& c, const std::vector<RatVector>& a, const RatVector& b,
                     const std::vector<RatVector>& eq_a, const RatVector& eq_b) {
    const std::size_t n = c.size();
    const std::size_t mi = a.size(), me = eq_a.size();
    if (b.size() != mi || eq_b.size() != me) throw ValidationError("lp: shape mismatch");
    for (const auto& r : a)
        if (r.size() != n) throw ValidationError("lp: row length mismatch");
    for (const auto& r : eq_a)
        if (r.size() != n) throw ValidationError("lp: row length mismatch");

    // columns: x+ (n), x- (n), slacks (mi), artificials (mi + me)
    const std::size_t m = mi + me;
    const std::size_t first_slack = 2 * n, first_art = 2 * n + mi;
    Tableau t;
    t.cols = first_art + m;
    t.rows.assign(m, RatVector(t.cols + 1));
    t.basis.resize(m);
    for (std::size_t i = 0; i < m; ++i) {
        const RatVector& row = i < mi ? a[i] : eq_a[i - mi];
        Rational rhs = i < mi ? b[i] : eq_b[i - mi];
        Rational sign = rhs < 0 ? -1 : 1;
        for (std::size_t j = 0; j < n; ++j) {
            t.rows[i][j] = sign * row[j];
            t.rows[i][n + j] = -sign * row[j];
        }
        if (i < mi) t.rows[i][first_slack + i] = sign;
        t.rows[i][first_art + i] = 1;
        t.rows[i][t.cols] = sign * rhs;
        t.basis[i] = first_art + i;
    }

    RatVector phase1(t.cols);
    for (std::size_t i = 0; i < m; ++i) phase1[first_art + i] = -1;
    t.run(phase1, t.cols);
    Rational infeas = 0;
    for (std::size_t i = 0; i < m; ++i)
        if (t.basis[i] >= first_art) infeas += t.rows[i][t.cols];
    LpResult out;
    if (infeas != 0) return out;

    // Drive artificials out of the basis; rows where that is impossible are redundant.
    for (std::size_t i = 0; i < t.rows.size();) {
        if (t.basis[i] < first_art) {
            ++i;
            continue;
        }
        std::size_t j = 0;
        while (j < first_art && t.rows[i][j] == 0) ++j;
        if (j < first_art) {
            t.pivot(i, j);
            ++i;
        } else {
            t.rows.erase(t.rows.begin() + static_cast<std::ptrdiff_t>(i));
            t.basis.erase(t.basis.begin() + static_cast<std::ptrdiff_t>(i));
        }
    }

    RatVector cost(t.cols);
    for (std::size_t j = 0; j < n; ++j) {
        cost[j] = c[j];
        cost[n + j] = -c[j];
    }
    if (!t.run(cost, first_art)) {
        out.status = LpStatus::unbounded;
        return out;
    }
    out.status = LpStatus::optimal;
    out.point.assign(n, Rational(0));
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        std::size_t j = t.basis[i];
        if (j < n) out.point[j] += t.rows[i][t.cols];
        else if (j < 2 * n) out.point[j - n] -= t.rows[i][t.cols];
    }
    out.value = dot(c, out.point);
    return out;
}

std::optional<RatVector> lp_feasible_point(std::size_t dim, const std::vector<RatVector>& a, const RatVector& b,
                                           const std::vector<RatVector>& eq_a, const RatVector& eq_b) {
    LpResult r = lp_maximize(RatVector(dim), a, b, eq_a, eq_b);
    if (r.status != LpStatus::optimal) return std::nullopt;
    return r.point;
}

}  // namespace toricsym
