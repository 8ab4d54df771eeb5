#include "toricsym/lattice_count.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>
#include <set>
#include <thread>

namespace toricsym {

namespace {

using i128 = __int128;

i128 floor_div(i128 a, i128 b) {
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

i128 ceil_div(i128 a, i128 b) { return -floor_div(-a, b); }

Integer from_i128(i128 v) {
    bool neg = v < 0;
    unsigned __int128 u = neg ? static_cast<unsigned __int128>(-(v + 1)) + 1 : static_cast<unsigned __int128>(v);
    Integer hi(static_cast<unsigned long>(static_cast<std::uint64_t>(u >> 64)));
    Integer lo(static_cast<unsigned long>(static_cast<std::uint64_t>(u)));
    Integer r = hi;
    mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), 64);
    r += lo;
    return neg ? Integer(-r) : r;
}

std::int64_t narrow(const Integer& z) {
    if (!z.fits_slong_p()) throw DomainError("enumeration bound does not fit in 64 bits");
    return z.get_si();
}

struct RatRow {
    RatVector a;
    Rational b;
};

// primitive integer normal, rhs scaled along; zero normals are returned unchanged
RatRow primitive(const RatRow& r) {
    if (is_zero(r.a)) return r;
    Inequality q = normalized(r.a, r.b);
    return {to_rational(q.normal), q.rhs};
}

std::vector<RatVector> project(const std::vector<RatVector>& pts, std::size_t len) {
    std::set<RatVector> out;
    for (const auto& p : pts) out.insert(RatVector(p.begin(), p.begin() + static_cast<std::ptrdiff_t>(len)));
    return {out.begin(), out.end()};
}

// Keep facet-defining rows and implicit equalities of the projected polytope.
std::vector<RatRow> prune(const std::vector<RatRow>& rows, const std::vector<RatVector>& verts) {
    const long adim = affine_dimension(verts);
    std::set<std::pair<RatVector, Rational>> seen;
    std::vector<RatRow> out;
    auto add = [&](const RatRow& r) {
        if (seen.insert({r.a, r.b}).second) out.push_back(r);
    };
    for (const auto& raw : rows) {
        RatRow r = primitive(raw);
        if (is_zero(r.a)) {
            if (r.b < 0) throw InvariantViolation("elimination produced an infeasible row");
            continue;
        }
        if (seen.count({r.a, r.b})) continue;
        std::vector<RatVector> tight;
        for (const auto& v : verts)
            if (dot(r.a, v) == r.b) tight.push_back(v);
        if (tight.size() == verts.size()) {
            add(r);
            RatRow neg = r;
            for (auto& x : neg.a) x = -x;
            neg.b = -neg.b;
            add(neg);
        } else if (!tight.empty() && affine_dimension(tight) == adim - 1) {
            add(r);
        }
    }
    return out;
}

}  // namespace

EnumerationPlan::EnumerationPlan(const Polytope& p) {
    const std::size_t n = p.dim();
    if (n == 0) throw ValidationError("enumeration needs a positive dimension");
    std::vector<RatRow> cur;
    for (const auto& q : p.h().inequalities) cur.push_back({to_rational(q.normal), q.rhs});
    levels_.resize(n);
    for (std::size_t j = n; j-- > 0;) {
        for (const auto& r : cur) {
            if (r.a[j] == 0) continue;
            RatRow pr = primitive(r);
            Integer den = pr.b.get_den();
            Row row;
            for (std::size_t i = 0; i <= j; ++i) row.coeffs.push_back(narrow(Integer(pr.a[i].get_num() * den)));
            row.rhs = narrow(Integer(pr.b.get_num()));
            levels_[j].push_back(std::move(row));
        }
        if (levels_[j].empty()) throw InvariantViolation("coordinate without bounds in enumeration plan");
        if (j == 0) break;

        std::vector<RatRow> next, pos, neg;
        for (const auto& r : cur) {
            RatRow t{RatVector(r.a.begin(), r.a.begin() + static_cast<std::ptrdiff_t>(j)), r.b};
            if (r.a[j] == 0) next.push_back(std::move(t));
            else (r.a[j] > 0 ? pos : neg).push_back(r);
        }
        for (const auto& u : pos)
            for (const auto& w : neg) {
                Rational cu = -w.a[j], cw = u.a[j];
                RatRow t{RatVector(j), cu * u.b + cw * w.b};
                for (std::size_t i = 0; i < j; ++i) t.a[i] = cu * u.a[i] + cw * w.a[i];
                next.push_back(std::move(t));
            }
        cur = prune(next, project(p.vertices(), j));
    }
}

unsigned worker_count() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("TORICSYM_THREADS")) {
        long v = std::strtol(env, nullptr, 10);
        if (v >= 1) return static_cast<unsigned>(std::min<long>(v, 256));
    }
    return hw;
}

namespace {

struct Scanner {
    const EnumerationPlan& plan;
    std::int64_t k;
    std::size_t n;
    std::vector<std::int64_t> x;
    std::vector<i128> sums;
    std::vector<LatticePoint>* points = nullptr;

    Scanner(const EnumerationPlan& p, std::int64_t kk) : plan(p), k(kk), n(p.dim()), x(n, 0), sums(n, 0) {}

    // returns false when the interval is empty
    bool bounds(std::size_t j, i128& lo, i128& hi) const {
        lo = std::numeric_limits<std::int64_t>::min();
        hi = std::numeric_limits<std::int64_t>::max();
        for (const auto& row : plan.level(j)) {
            i128 t = static_cast<i128>(row.rhs) * k;
            for (std::size_t i = 0; i < j; ++i) t -= static_cast<i128>(row.coeffs[i]) * x[i];
            const i128 a = row.coeffs[j];
            if (a > 0) hi = std::min(hi, floor_div(t, a));
            else lo = std::max(lo, ceil_div(t, a));
            if (lo > hi) return false;
        }
        return true;
    }

    i128 scan(std::size_t j) {
        i128 lo, hi;
        if (!bounds(j, lo, hi)) return 0;
        return scan_range(j, lo, hi);
    }

    i128 scan_range(std::size_t j, i128 lo, i128 hi) {
        if (lo > hi) return 0;
        if (j + 1 == n && !points) {
            i128 cnt = hi - lo + 1;
            sums[j] += (lo + hi) * cnt / 2;
            return cnt;
        }
        i128 total = 0;
        for (i128 v = lo; v <= hi; ++v) {
            x[j] = static_cast<std::int64_t>(v);
            i128 c;
            if (j + 1 == n) {
                points->push_back(x);
                c = 1;
            } else {
                c = scan(j + 1);
            }
            total += c;
            sums[j] += c * v;
        }
        return total;
    }
};

}  // namespace

CountAndSum count_and_sum(const EnumerationPlan& plan, long k, unsigned threads) {
    if (k < 0) throw ValidationError("dilation factor must be nonnegative");
    const std::size_t n = plan.dim();
    Scanner root(plan, k);
    i128 lo, hi;
    CountAndSum out{0, IntVector(n)};
    if (!root.bounds(0, lo, hi)) return out;

    unsigned t = threads ? threads : worker_count();
    const i128 width = hi - lo + 1;
    if (t > width) t = static_cast<unsigned>(width);
    if (n == 1 || t <= 1) {
        i128 c = root.scan_range(0, lo, hi);
        out.count = from_i128(c);
        for (std::size_t j = 0; j < n; ++j) out.sum[j] = from_i128(root.sums[j]);
        return out;
    }
    // contiguous slabs of the first coordinate, merged exactly
    std::vector<Scanner> workers(t, Scanner(plan, k));
    std::vector<i128> counts(t, 0);
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < t; ++w) {
        i128 a = lo + width * w / t, b = lo + width * (w + 1) / t - 1;
        pool.emplace_back([&, w, a, b] { counts[w] = workers[w].scan_range(0, a, b); });
    }
    for (auto& th : pool) th.join();
    i128 total = 0;
    std::vector<i128> sums(n, 0);
    for (unsigned w = 0; w < t; ++w) {
        total += counts[w];
        for (std::size_t j = 0; j < n; ++j) sums[j] += workers[w].sums[j];
    }
    out.count = from_i128(total);
    for (std::size_t j = 0; j < n; ++j) out.sum[j] = from_i128(sums[j]);
    return out;
}

CountAndSum count_and_sum(const Polytope& p, long k, unsigned threads) {
    return count_and_sum(EnumerationPlan(p), k, threads);
}

std::vector<LatticePoint> enumerate_lattice_points(const Polytope& p, long k) {
    if (k < 0) throw ValidationError("dilation factor must be nonnegative");
    if (p.dim() == 0) return {LatticePoint{}};
    EnumerationPlan plan(p);
    Scanner s(plan, k);
    std::vector<LatticePoint> out;
    s.points = &out;
    s.scan(0);
    return out;
}

RatVector quantized_barycenter(const Polytope& p, long k) {
    if (k < 1) throw ValidationError("k must be positive");
    CountAndSum cs = count_and_sum(p, k);
    if (cs.count == 0) throw DomainError("dilated polytope has no lattice points");
    RatVector out(p.dim());
    for (std::size_t j = 0; j < p.dim(); ++j) {
        out[j] = Rational(cs.sum[j], cs.count * k);
        out[j].canonicalize();
    }
    return out;
}

Rational Polynomial::operator()(const Rational& k) const {
    Rational r = 0;
    for (std::size_t i = coefficients.size(); i-- > 0;) r = r * k + coefficients[i];
    return r;
}

bool Polynomial::is_zero() const {
    return std::all_of(coefficients.begin(), coefficients.end(), [](const Rational& c) { return c == 0; });
}

std::size_t Polynomial::degree() const {
    for (std::size_t i = coefficients.size(); i-- > 0;)
        if (coefficients[i] != 0) return i;
    return 0;
}

Polynomial interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    const std::size_t m = xs.size();
    if (ys.size() != m || m == 0) throw ValidationError("interpolate: shape mismatch");
    std::vector<RatVector> rows(m, RatVector(m));
    for (std::size_t i = 0; i < m; ++i) {
        Rational pw = 1;
        for (std::size_t j = 0; j < m; ++j) {
            rows[i][j] = pw;
            pw *= xs[i];
        }
    }
    auto c = solve_rational(rows, ys);
    if (!c) throw ValidationError("interpolate: repeated nodes");
    return Polynomial{*c};
}

namespace {

void require_lattice(const Polytope& p) {
    if (!p.full_dimensional()) throw DomainError("polytope is not full-dimensional");
    if (!is_lattice_polytope(p)) throw DomainError("polytope is not a lattice polytope; its Ehrhart function is a quasi-polynomial");
}

struct Samples {
    std::vector<Rational> ks, counts;
    std::vector<CountAndSum> raw;
};

Samples sample_counts(const EnumerationPlan& plan, long kmax) {
    Samples s;
    for (long k = 0; k <= kmax; ++k) {
        CountAndSum cs = count_and_sum(plan, k);
        s.ks.emplace_back(k);
        s.counts.emplace_back(cs.count);
        s.raw.push_back(std::move(cs));
    }
    return s;
}

EhrhartPolynomial ehrhart_from(const Polytope& p, const Samples& s) {
    EhrhartPolynomial e;
    e.coefficients = interpolate(s.ks, s.counts).coefficients;
    const std::size_t n = p.dim();
    if (e.coefficients[0] != 1) throw InvariantViolation("Ehrhart constant term is not 1");
    if (e.coefficients[n] != volume_and_barycenter(p).volume)
        throw InvariantViolation("Ehrhart leading coefficient differs from the volume");
    return e;
}

}  // namespace

EhrhartPolynomial ehrhart_polynomial(const Polytope& p) {
    require_lattice(p);
    EnumerationPlan plan(p);
    return ehrhart_from(p, sample_counts(plan, static_cast<long>(p.dim())));
}

Integer lift_shift(const Polytope& p, std::size_t coordinate) {
    Rational lowest = p.vertices().at(0).at(coordinate);
    for (const auto& v : p.vertices()) lowest = std::min(lowest, v[coordinate]);
    if (lowest >= 0) return 0;
    Rational neg = -lowest;
    Integer c;
    mpz_cdiv_q(c.get_mpz_t(), neg.get_num_mpz_t(), neg.get_den_mpz_t());
    return c;
}

Polytope lifted_polytope(const Polytope& p, std::size_t coordinate, const Integer& shift) {
    const std::size_t n = p.dim();
    if (coordinate >= n) throw ValidationError("lift coordinate out of range");
    std::set<RatVector> verts;
    for (const auto& v : p.vertices()) {
        RatVector lo = v, hi = v;
        lo.push_back(0);
        hi.push_back(v[coordinate] + shift);
        if (hi.back() < 0) throw ValidationError("lift shift too small");
        verts.insert(lo);
        verts.insert(hi);
    }
    std::vector<RatVector> vlist(verts.begin(), verts.end());
    std::vector<Inequality> facets;
    auto keep_if_facet = [&](Inequality q) {
        std::vector<RatVector> tight;
        for (const auto& v : vlist)
            if (q.tight_at(v)) tight.push_back(v);
        if (affine_dimension(tight) == static_cast<long>(n)) facets.push_back(std::move(q));
    };
    for (const auto& f : p.facets()) {
        IntVector a = f.normal;
        a.push_back(0);
        keep_if_facet({a, f.rhs});
    }
    IntVector floor_normal(n + 1), roof(n + 1);
    floor_normal[n] = -1;
    keep_if_facet({floor_normal, 0});
    roof[n] = 1;
    roof[coordinate] = -1;
    keep_if_facet({roof, Rational(shift)});
    return Polytope::from_trusted(n + 1, std::move(facets), std::move(vlist));
}

RatVector BarycenterRationalFunction::operator()(long k) const {
    Rational e = denominator(Rational(k));
    RatVector out;
    for (const auto& q : numerators) out.push_back(q(Rational(k)) / e);
    return out;
}

bool BarycenterRationalFunction::identically_zero() const {
    return std::all_of(numerators.begin(), numerators.end(), [](const Polynomial& q) { return q.is_zero(); });
}

BarycenterRationalFunction barycenter_rational_function(const Polytope& p) {
    require_lattice(p);
    const std::size_t n = p.dim();
    EnumerationPlan plan(p);
    Samples base = sample_counts(plan, static_cast<long>(n) + 1);
    Samples first(base);
    first.ks.pop_back();
    first.counts.pop_back();
    BarycenterRationalFunction out;
    out.denominator = ehrhart_from(p, first);

    for (std::size_t i = 0; i < n; ++i) {
        Integer c = lift_shift(p, i);
        Polytope lifted = lifted_polytope(p, i, c);
        Samples ls = sample_counts(EnumerationPlan(lifted), static_cast<long>(n) + 1);
        Polynomial el = interpolate(ls.ks, ls.counts);

        // raw(k) = E_{P_i}(k) - (C k + 1) E_P(k)
        Polynomial raw{RatVector(n + 2)};
        for (std::size_t d = 0; d < el.coefficients.size(); ++d) raw.coefficients[d] += el.coefficients[d];
        for (std::size_t d = 0; d <= n; ++d) {
            raw.coefficients[d] -= out.denominator.coefficients[d];
            raw.coefficients[d + 1] -= Rational(c) * out.denominator.coefficients[d];
        }
        if (raw.coefficients[0] != 0) throw InvariantViolation("lifted numerator has a nonzero constant term");
        Polynomial tilde{RatVector(raw.coefficients.begin() + 1, raw.coefficients.end())};

        // the lifted route must agree with the direct coordinate sums
        for (long k = 1; k <= static_cast<long>(n) + 1; ++k)
            if (tilde(Rational(k)) * k != Rational(base.raw[static_cast<std::size_t>(k)].sum[i]))
                throw InvariantViolation("lifted-polytope numerator disagrees with direct enumeration");

        out.raw_numerators.push_back(std::move(raw));
        out.numerators.push_back(std::move(tilde));
        out.shifts.push_back(c);
    }
    return out;
}

RigidityVerdict rigidity_verdict(const Polytope& p, const std::vector<long>& ks) {
    std::set<long> distinct(ks.begin(), ks.end());
    if (distinct.size() < p.dim() + 1) throw ValidationError("rigidity needs at least n+1 distinct values of k");
    if (*distinct.begin() < 1) throw ValidationError("k must be positive");
    require_lattice(p);
    RigidityVerdict out;
    for (long k : distinct) {
        RatVector b = quantized_barycenter(p, k);
        if (!is_zero(b)) out.witnesses.push_back({k, std::move(b)});
    }
    if (!out.witnesses.empty()) return out;
    auto rf = barycenter_rational_function(p);
    if (!rf.identically_zero()) throw InvariantViolation("Bc_k vanished at n+1 values but the numerator is nonzero");
    out.barycenter = volume_and_barycenter(p).barycenter;
    if (!is_zero(out.barycenter)) throw InvariantViolation("Bc_k vanish identically but Bc(P) is nonzero");
    out.identically_zero = true;
    return out;
}

}  // namespace toricsym
