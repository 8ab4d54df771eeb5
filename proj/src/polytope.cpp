#include "toricsym/polytope.hpp"

#include "toricsym/lp.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toricsym {

Inequality normalized(const RatVector& normal, const Rational& rhs) {
    Inequality out;
    out.normal.assign(normal.size(), Integer(0));
    if (is_zero(normal)) {
        out.rhs = rhs;
        return out;
    }
    Integer l = 1;
    for (const auto& x : normal) l = lcm(l, x.get_den());
    IntVector scaled(normal.size());
    for (std::size_t i = 0; i < normal.size(); ++i) scaled[i] = Rational(normal[i] * l).get_num();
    Integer g = gcd_of(scaled);
    for (auto& x : scaled) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    out.normal = std::move(scaled);
    out.rhs = rhs * Rational(l) / Rational(g);
    return out;
}

long affine_dimension(const std::vector<RatVector>& points) {
    if (points.empty()) return -1;
    std::vector<RatVector> diffs;
    diffs.reserve(points.size());
    for (std::size_t i = 1; i < points.size(); ++i) {
        RatVector d(points[i].size());
        for (std::size_t j = 0; j < d.size(); ++j) d[j] = points[i][j] - points[0][j];
        diffs.push_back(std::move(d));
    }
    return static_cast<long>(rank(diffs));
}

namespace {

RatVector ratify(const IntVector& v) { return to_rational(v); }

// Row-echelon basis that grows one vector at a time; used for rank-pruned subset search.
struct IncrementalSpan {
    std::vector<RatVector> rows;  // echelon, each with a leading one
    std::vector<std::size_t> lead;

    std::optional<RatVector> reduce(const RatVector& v) const {
        RatVector r = v;
        for (std::size_t i = 0; i < rows.size(); ++i) {
            if (r[lead[i]] == 0) continue;
            Rational f = r[lead[i]];
            for (std::size_t j = 0; j < r.size(); ++j) r[j] -= f * rows[i][j];
        }
        if (is_zero(r)) return std::nullopt;
        return r;
    }
    bool push(const RatVector& v) {
        auto r = reduce(v);
        if (!r) return false;
        std::size_t c = 0;
        while ((*r)[c] == 0) ++c;
        Rational inv = 1 / (*r)[c];
        for (auto& x : *r) x *= inv;
        rows.push_back(std::move(*r));
        lead.push_back(c);
        return true;
    }
    void pop() {
        rows.pop_back();
        lead.pop_back();
    }
};

std::vector<RatVector> subset_points(const std::vector<RatVector>& pts, const std::vector<std::size_t>& idx) {
    std::vector<RatVector> out;
    out.reserve(idx.size());
    for (auto i : idx) out.push_back(pts[i]);
    return out;
}

}  // namespace

void Polytope::build_incidence() {
    incidence_.assign(facets_.size(), std::vector<bool>(vertices_.size(), false));
    for (std::size_t f = 0; f < facets_.size(); ++f)
        for (std::size_t v = 0; v < vertices_.size(); ++v) incidence_[f][v] = facets_[f].tight_at(vertices_[v]);
}

std::vector<std::size_t> Polytope::facet_vertices(std::size_t facet) const {
    std::vector<std::size_t> out;
    for (std::size_t v = 0; v < vertices_.size(); ++v)
        if (incidence_[facet][v]) out.push_back(v);
    return out;
}

HPolytope Polytope::h() const {
    HPolytope out{dim_, facets_};
    for (const auto& e : equations_) {
        out.inequalities.push_back(e);
        Inequality neg{e.normal, -e.rhs};
        for (auto& x : neg.normal) x = -x;
        out.inequalities.push_back(std::move(neg));
    }
    return out;
}

Polytope Polytope::point(std::size_t dim) {
    Polytope p;
    p.dim_ = dim;
    p.affine_dim_ = 0;
    p.vertices_ = {RatVector(dim)};
    for (std::size_t j = 0; j < dim; ++j) {
        IntVector e(dim);
        e[j] = 1;
        p.equations_.push_back({e, 0});
    }
    return p;
}

std::optional<Polytope> Polytope::try_from_inequalities(const HPolytope& h, bool allow_lower_dim) {
    const std::size_t n = h.dim;
    std::vector<Inequality> ineqs;
    std::vector<std::size_t> origin, dropped;
    for (std::size_t i = 0; i < h.inequalities.size(); ++i) {
        const auto& q = h.inequalities[i];
        if (q.normal.size() != n) throw ValidationError("inequality has the wrong dimension");
        if (gcd_of(q.normal) == 0) {
            if (q.rhs < 0) return std::nullopt;
            dropped.push_back(i);
            continue;
        }
        ineqs.push_back(normalized(ratify(q.normal), q.rhs));
        origin.push_back(i);
    }
    if (n == 0) return point(0);

    std::vector<RatVector> a;
    RatVector b;
    for (const auto& q : ineqs) {
        a.push_back(ratify(q.normal));
        b.push_back(q.rhs);
    }
    if (!lp_feasible_point(n, a, b)) return std::nullopt;
    for (std::size_t j = 0; j < n; ++j)
        for (int s : {1, -1}) {
            RatVector c(n);
            c[j] = s;
            if (lp_maximize(c, a, b).status == LpStatus::unbounded)
                throw ValidationError("polytope is unbounded");
        }

    // n-subsets of inequalities with independent normals
    std::set<RatVector> found;
    IncrementalSpan span;
    std::vector<std::size_t> chosen;
    auto solve_chosen = [&]() {
        std::vector<RatVector> rows;
        RatVector rhs;
        for (auto i : chosen) {
            rows.push_back(a[i]);
            rhs.push_back(b[i]);
        }
        auto x = solve_rational(rows, rhs);
        if (!x) return;
        for (std::size_t i = 0; i < a.size(); ++i)
            if (dot(a[i], *x) > b[i]) return;
        found.insert(std::move(*x));
    };
    auto dfs = [&](auto&& self, std::size_t start) -> void {
        if (chosen.size() == n) {
            solve_chosen();
            return;
        }
        for (std::size_t i = start; i + (n - chosen.size()) <= a.size(); ++i) {
            if (!span.push(a[i])) continue;
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
            span.pop();
        }
    };
    dfs(dfs, 0);
    if (found.empty()) throw InvariantViolation("bounded feasible system without vertices");

    std::vector<RatVector> verts(found.begin(), found.end());
    const long adim = affine_dimension(verts);
    if (static_cast<std::size_t>(adim) < n && !allow_lower_dim) throw ValidationError("polytope has empty interior");

    std::vector<Inequality> facets;
    std::set<std::vector<std::size_t>> seen_faces;
    for (std::size_t i = 0; i < ineqs.size(); ++i) {
        std::vector<std::size_t> tight;
        for (std::size_t v = 0; v < verts.size(); ++v)
            if (ineqs[i].tight_at(verts[v])) tight.push_back(v);
        if (tight.size() == verts.size()) continue;  // implicit equality
        if (!tight.empty() && affine_dimension(subset_points(verts, tight)) == adim - 1 &&
            seen_faces.insert(tight).second)
            facets.push_back(ineqs[i]);
        else
            dropped.push_back(origin[i]);
    }
    std::sort(dropped.begin(), dropped.end());

    Polytope out = from_trusted(n, std::move(facets), std::move(verts));
    if (out.affine_dim_ < n) {
        // equations: kernel of the difference vectors of the vertex set
        std::vector<RatVector> diffs;
        for (std::size_t i = 1; i < out.vertices_.size(); ++i) {
            RatVector d(n);
            for (std::size_t j = 0; j < n; ++j) d[j] = out.vertices_[i][j] - out.vertices_[0][j];
            diffs.push_back(std::move(d));
        }
        for (const auto& k : kernel(diffs, n)) out.equations_.push_back(normalized(k, dot(k, out.vertices_[0])));
    }
    out.dropped_ = std::move(dropped);
    return out;
}

Polytope Polytope::from_inequalities(const HPolytope& h, bool allow_lower_dim) {
    auto p = try_from_inequalities(h, allow_lower_dim);
    if (!p) throw ValidationError("polytope is empty");
    return std::move(*p);
}

Polytope Polytope::from_points(std::size_t n, const std::vector<RatVector>& input) {
    std::set<RatVector> uniq;
    for (const auto& p : input) {
        if (p.size() != n) throw ValidationError("point has the wrong dimension");
        uniq.insert(p);
    }
    std::vector<RatVector> pts(uniq.begin(), uniq.end());
    if (n == 0 || affine_dimension(pts) != static_cast<long>(n))
        throw ValidationError("convex hull is not full-dimensional");

    std::set<std::pair<IntVector, Rational>> facet_set;
    std::vector<Inequality> facets;
    IncrementalSpan span;
    std::vector<std::size_t> chosen;
    auto diff = [&](std::size_t i) {
        RatVector d(n);
        for (std::size_t j = 0; j < n; ++j) d[j] = pts[i][j] - pts[chosen[0]][j];
        return d;
    };
    auto try_hyperplane = [&]() {
        auto k = kernel(span.rows, n);
        if (k.size() != 1) return;
        RatVector normal = k[0];
        Rational rhs = dot(normal, pts[chosen[0]]);
        bool le = true, ge = true;
        for (const auto& p : pts) {
            Rational v = dot(normal, p);
            if (v > rhs) le = false;
            if (v < rhs) ge = false;
        }
        if (!le && !ge) return;
        if (!le) {
            for (auto& x : normal) x = -x;
            rhs = -rhs;
        }
        Inequality q = normalized(normal, rhs);
        if (facet_set.insert({q.normal, q.rhs}).second) facets.push_back(std::move(q));
    };
    auto dfs = [&](auto&& self, std::size_t start) -> void {
        if (chosen.size() == n) {
            try_hyperplane();
            return;
        }
        for (std::size_t i = start; i + (n - chosen.size()) <= pts.size(); ++i) {
            if (chosen.empty()) {
                chosen.push_back(i);
                self(self, i + 1);
                chosen.pop_back();
                continue;
            }
            if (!span.push(diff(i))) continue;
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
            span.pop();
        }
    };
    dfs(dfs, 0);

    std::vector<RatVector> verts;
    for (const auto& p : pts) {
        std::vector<RatVector> tight;
        for (const auto& f : facets)
            if (f.tight_at(p)) tight.push_back(ratify(f.normal));
        if (rank(tight) == n) verts.push_back(p);
    }
    return from_trusted(n, std::move(facets), std::move(verts));
}

Polytope Polytope::from_trusted(std::size_t dim, std::vector<Inequality> facets, std::vector<RatVector> vertices) {
    Polytope p;
    p.dim_ = dim;
    std::sort(vertices.begin(), vertices.end());
    p.vertices_ = std::move(vertices);
    p.facets_ = std::move(facets);
    p.affine_dim_ = static_cast<std::size_t>(std::max(0L, affine_dimension(p.vertices_)));
    for (const auto& v : p.vertices_)
        for (const auto& f : p.facets_)
            if (!f.satisfied_by(v)) throw InvariantViolation("vertex violates a facet inequality");
    p.build_incidence();
    return p;
}

Polytope vertices_from_inequalities(const HPolytope& h) { return Polytope::from_inequalities(h, false); }

namespace {

using Simplex = std::vector<std::size_t>;

struct Triangulator {
    const Polytope& p;
    std::vector<std::vector<std::size_t>> facet_sets;
    std::map<std::vector<std::size_t>, std::vector<Simplex>> memo;

    explicit Triangulator(const Polytope& poly) : p(poly) {
        for (std::size_t f = 0; f < p.facets().size(); ++f) facet_sets.push_back(p.facet_vertices(f));
    }

    long dim_of(const std::vector<std::size_t>& face) const {
        return affine_dimension(subset_points(p.vertices(), face));
    }

    // Cone from the smallest vertex of the face over the facets of the face avoiding it.
    const std::vector<Simplex>& run(const std::vector<std::size_t>& face, long d) {
        auto it = memo.find(face);
        if (it != memo.end()) return it->second;
        std::vector<Simplex> out;
        if (d == 0) {
            out.push_back({face[0]});
        } else {
            const std::size_t base = face[0];
            std::set<std::vector<std::size_t>> subs;
            for (const auto& fs : facet_sets) {
                std::vector<std::size_t> sub;
                std::set_intersection(face.begin(), face.end(), fs.begin(), fs.end(), std::back_inserter(sub));
                if (sub.empty() || std::binary_search(sub.begin(), sub.end(), base)) continue;
                if (sub.size() < static_cast<std::size_t>(d) || sub.size() == face.size()) continue;
                subs.insert(std::move(sub));
            }
            for (const auto& sub : subs) {
                if (dim_of(sub) != d - 1) continue;
                for (const auto& s : run(sub, d - 1)) {
                    Simplex t{base};
                    t.insert(t.end(), s.begin(), s.end());
                    out.push_back(std::move(t));
                }
            }
        }
        return memo.emplace(face, std::move(out)).first->second;
    }
};

}  // namespace

VolumeBarycenter volume_and_barycenter(const Polytope& p) {
    const std::size_t n = p.dim();
    if (!p.full_dimensional() || n == 0) throw ValidationError("volume_and_barycenter needs a full-dimensional polytope");
    Triangulator tri(p);
    std::vector<std::size_t> all(p.vertices().size());
    for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
    const auto& simplices = tri.run(all, static_cast<long>(n));

    Integer fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= static_cast<unsigned long>(i);
    VolumeBarycenter out{0, RatVector(n)};
    const auto& v = p.vertices();
    for (const auto& s : simplices) {
        std::vector<RatVector> rows(n, RatVector(n));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) rows[i][j] = v[s[i + 1]][j] - v[s[0]][j];
        Rational vol = abs(determinant(rows)) / Rational(fact);
        out.volume += vol;
        for (std::size_t j = 0; j < n; ++j) {
            Rational c = 0;
            for (auto idx : s) c += v[idx][j];
            out.barycenter[j] += vol * c / Rational(static_cast<long>(n + 1));
        }
    }
    if (out.volume == 0) throw InvariantViolation("triangulation produced zero volume");
    for (auto& x : out.barycenter) x /= out.volume;
    return out;
}

Polytope dilate(const Polytope& p, long k) {
    if (k <= 0) throw ValidationError("dilation factor must be positive");
    std::vector<Inequality> facets = p.facets();
    for (auto& f : facets) f.rhs *= k;
    std::vector<RatVector> verts = p.vertices();
    for (auto& v : verts)
        for (auto& x : v) x *= k;
    Polytope out = Polytope::from_trusted(p.dim(), std::move(facets), std::move(verts));
    if (!p.equations().empty()) {
        HPolytope h = out.h();
        for (auto e : p.equations()) {
            e.rhs *= k;
            h.inequalities.push_back(e);
            for (auto& x : e.normal) x = -x;
            e.rhs = -e.rhs;
            h.inequalities.push_back(e);
        }
        return Polytope::from_inequalities(h, true);
    }
    return out;
}

bool contains(const Polytope& p, const RatVector& x, bool strict) {
    if (x.size() != p.dim()) throw ValidationError("contains: dimension mismatch");
    for (const auto& e : p.equations())
        if (!e.tight_at(x)) return false;
    for (const auto& f : p.facets()) {
        Rational v = dot(x, f.normal);
        if (strict ? v >= f.rhs : v > f.rhs) return false;
    }
    return true;
}

RatVector Slice::to_ambient(const RatVector& t) const {
    if (basis.empty()) return {};
    RatVector y(basis[0].size());
    for (std::size_t j = 0; j < basis.size(); ++j)
        for (std::size_t i = 0; i < y.size(); ++i) y[i] += t[j] * basis[j][i];
    return y;
}

Slice intersect_with_subspace(const Polytope& p, const std::vector<RatVector>& basis) {
    for (const auto& b : basis)
        if (b.size() != p.dim()) throw ValidationError("subspace basis has the wrong dimension");
    if (rank(basis) != basis.size()) throw ValidationError("subspace basis is not linearly independent");

    Slice out;
    out.basis = basis;
    const std::size_t s = basis.size();
    if (s == 0) {
        out.empty = !contains(p, RatVector(p.dim()));
        if (!out.empty) out.polytope = Polytope::point(0);
        return out;
    }
    HPolytope h{s, {}};
    for (const auto& q : p.h().inequalities) {
        RatVector normal(s);
        for (std::size_t j = 0; j < s; ++j) normal[j] = dot(basis[j], q.normal);
        h.inequalities.push_back(normalized(normal, q.rhs));
    }
    auto r = Polytope::try_from_inequalities(h, true);
    if (!r) {
        out.empty = true;
        return out;
    }
    out.polytope = std::move(*r);
    return out;
}

bool is_lattice_polytope(const Polytope& p) {
    for (const auto& v : p.vertices())
        for (const auto& x : v)
            if (x.get_den() != 1) return false;
    return true;
}

}  // namespace toricsym
