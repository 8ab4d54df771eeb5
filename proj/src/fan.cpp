#include "toricsym/fan.hpp"

#include "toricsym/lp.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace toricsym {

namespace {

std::string cone_name(const Cone& c) {
    std::string s = "{";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + "}";
}

std::vector<RatVector> cone_rays(const Fan& f, const Cone& c) {
    std::vector<RatVector> out;
    for (auto i : c) out.push_back(to_rational(f.rays[i]));
    return out;
}

bool strongly_convex(const std::vector<RatVector>& rays, std::size_t n) {
    // some c with c.r >= 1 on every generator
    std::vector<RatVector> a;
    RatVector b;
    for (const auto& r : rays) {
        RatVector row(n);
        for (std::size_t j = 0; j < n; ++j) row[j] = -r[j];
        a.push_back(std::move(row));
        b.push_back(-1);
    }
    return lp_feasible_point(n, a, b).has_value();
}

bool in_cone(const RatVector& x, const std::vector<RatVector>& gens) {
    // x = sum lambda_j g_j with lambda >= 0
    const std::size_t m = gens.size(), n = x.size();
    std::vector<RatVector> a, eq;
    RatVector b, e;
    for (std::size_t j = 0; j < m; ++j) {
        RatVector row(m);
        row[j] = -1;
        a.push_back(std::move(row));
        b.push_back(0);
    }
    for (std::size_t i = 0; i < n; ++i) {
        RatVector row(m);
        for (std::size_t j = 0; j < m; ++j) row[j] = gens[j][i];
        eq.push_back(std::move(row));
        e.push_back(x[i]);
    }
    return lp_feasible_point(m, a, b, eq, e).has_value();
}

// Separation test for the intersection axiom.
bool meet_is_common_face(const Fan& f, const Cone& s, const Cone& t) {
    const std::size_t n = f.dim;
    std::vector<RatVector> a, eq;
    RatVector b, e;
    for (auto i : s) {
        RatVector r = to_rational(f.rays[i]);
        if (std::binary_search(t.begin(), t.end(), i)) {
            eq.push_back(r);
            e.push_back(0);
        } else {
            for (auto& x : r) x = -x;
            a.push_back(r);
            b.push_back(-1);
        }
    }
    for (auto i : t) {
        if (std::binary_search(s.begin(), s.end(), i)) continue;
        a.push_back(to_rational(f.rays[i]));
        b.push_back(-1);
    }
    return lp_feasible_point(n, a, b, eq, e).has_value();
}

}  // namespace

FanValidation validate_fan(const Fan& f) {
    FanValidation out;
    const std::size_t n = f.dim;
    if (n == 0) out.problems.push_back("dimension must be positive");
    std::set<IntVector> seen;
    for (std::size_t i = 0; i < f.rays.size(); ++i) {
        const auto& r = f.rays[i];
        if (r.size() != n) {
            out.problems.push_back("ray " + std::to_string(i) + " has the wrong dimension");
            continue;
        }
        Integer g = gcd_of(r);
        if (g == 0) out.problems.push_back("ray " + std::to_string(i) + " is zero");
        else if (g != 1) out.problems.push_back("ray " + std::to_string(i) + " " + to_string(r) + " is not primitive");
        if (!seen.insert(r).second) out.problems.push_back("ray " + std::to_string(i) + " is a duplicate");
    }
    if (!out.ok()) return out;
    if (f.max_cones.empty()) out.problems.push_back("fan has no cones");

    for (const auto& c : f.max_cones) {
        if (c.empty()) {
            out.problems.push_back("empty cone");
            continue;
        }
        bool sorted = std::is_sorted(c.begin(), c.end()) && std::adjacent_find(c.begin(), c.end()) == c.end();
        bool in_range = std::all_of(c.begin(), c.end(), [&](std::size_t i) { return i < f.rays.size(); });
        if (!sorted || !in_range) {
            out.problems.push_back("cone " + cone_name(c) + " has bad ray indices");
            continue;
        }
        auto gens = cone_rays(f, c);
        if (!strongly_convex(gens, n)) {
            out.problems.push_back("cone " + cone_name(c) + " is not strongly convex");
            continue;
        }
        for (std::size_t k = 0; k < gens.size(); ++k) {
            std::vector<RatVector> others;
            for (std::size_t j = 0; j < gens.size(); ++j)
                if (j != k) others.push_back(gens[j]);
            if (!others.empty() && in_cone(gens[k], others))
                out.problems.push_back("ray " + std::to_string(c[k]) + " is not extremal in cone " + cone_name(c));
        }
    }
    if (!out.ok()) return out;

    for (std::size_t i = 0; i < f.max_cones.size(); ++i)
        for (std::size_t j = i + 1; j < f.max_cones.size(); ++j)
            if (!meet_is_common_face(f, f.max_cones[i], f.max_cones[j])) {
                out.bad_pairs.push_back({i, j});
                out.problems.push_back("cones " + cone_name(f.max_cones[i]) + " and " + cone_name(f.max_cones[j]) +
                                       " do not meet in a common face");
            }
    return out;
}

void require_valid(const Fan& f) {
    auto v = validate_fan(f);
    if (!v.ok()) throw ValidationError("invalid fan: " + v.problems.front());
}

std::vector<Cone> cone_facets(const Fan& f, const Cone& cone) {
    const std::size_t n = f.dim;
    auto gens = cone_rays(f, cone);
    const std::size_t d = rank(gens);
    std::set<Cone> out;
    if (d == 0) return {};
    // supporting hyperplanes of the cone inside its own span, found from rank-(d-1) subsets
    std::vector<RatVector> span_eqs = kernel(gens, n);  // orthogonal complement of the span
    std::vector<std::size_t> chosen;
    auto consider = [&]() {
        std::vector<RatVector> rows = span_eqs;
        for (auto k : chosen) rows.push_back(gens[k]);
        auto normals = kernel(rows, n);
        if (normals.size() != 1) return;
        const RatVector& c = normals[0];
        bool pos = false, neg = false;
        Cone face;
        for (std::size_t k = 0; k < gens.size(); ++k) {
            Rational v = dot(c, gens[k]);
            if (v > 0) pos = true;
            if (v < 0) neg = true;
            if (v == 0) face.push_back(cone[k]);
        }
        if (pos && neg) return;
        out.insert(face);
    };
    auto dfs = [&](auto&& self, std::size_t start) -> void {
        if (chosen.size() + 1 == d) {
            consider();
            return;
        }
        for (std::size_t k = start; k < gens.size(); ++k) {
            chosen.push_back(k);
            std::vector<RatVector> sub;
            for (auto c : chosen) sub.push_back(gens[c]);
            if (rank(sub) == chosen.size()) self(self, k + 1);
            chosen.pop_back();
        }
    };
    dfs(dfs, 0);
    return {out.begin(), out.end()};
}

bool is_complete(const Fan& f) {
    if (f.max_cones.empty()) return false;
    std::map<Cone, int> shared;
    for (const auto& c : f.max_cones) {
        if (rank(cone_rays(f, c)) != f.dim) return false;
        for (const auto& facet : cone_facets(f, c)) ++shared[facet];
    }
    return std::all_of(shared.begin(), shared.end(), [](const auto& kv) { return kv.second == 2; });
}

bool is_simplicial(const Fan& f) {
    for (const auto& c : f.max_cones)
        if (rank(cone_rays(f, c)) != c.size()) return false;
    return true;
}

bool is_smooth(const Fan& f) {
    if (!is_simplicial(f)) return false;
    for (const auto& c : f.max_cones) {
        // the cone's rays must extend to a lattice basis: gcd of maximal minors is 1
        IntMatrix m(c.size(), f.dim);
        for (std::size_t i = 0; i < c.size(); ++i)
            for (std::size_t j = 0; j < f.dim; ++j) m(i, j) = f.rays[c[i]][j];
        auto s = smith_normal_form(m);
        for (std::size_t i = 0; i < c.size(); ++i)
            if (s.diagonal[i] != 1) return false;
    }
    return true;
}

Polytope polytope_from_fan(const Fan& f) {
    if (!is_complete(f)) throw DomainError("anticanonical polytope needs a complete fan");
    HPolytope h{f.dim, {}};
    for (const auto& v : f.rays) {
        IntVector a(v.size());
        for (std::size_t j = 0; j < v.size(); ++j) a[j] = -v[j];
        h.inequalities.push_back({a, 1});
    }
    try {
        return Polytope::from_inequalities(h);
    } catch (const ValidationError& e) {
        throw DomainError(std::string("fan is not complete: ") + e.what());
    }
}

Fan face_fan_from_polytope(const std::vector<IntVector>& vertices) {
    if (vertices.empty()) throw ValidationError("face fan of an empty point set");
    const std::size_t n = vertices[0].size();
    std::vector<RatVector> pts;
    for (const auto& v : vertices) pts.push_back(to_rational(v));
    Polytope hull = Polytope::from_points(n, pts);
    if (!contains(hull, RatVector(n), true)) throw ValidationError("origin is not interior to the hull");

    Fan f;
    f.dim = n;
    std::map<RatVector, std::size_t> index;
    for (const auto& v : vertices) {
        RatVector r = to_rational(v);
        if (index.count(r)) continue;
        if (!std::binary_search(hull.vertices().begin(), hull.vertices().end(), r)) continue;
        index[r] = f.rays.size();
        f.rays.push_back(v);
    }
    for (std::size_t fi = 0; fi < hull.facets().size(); ++fi) {
        Cone c;
        for (auto vi : hull.facet_vertices(fi)) c.push_back(index.at(hull.vertices()[vi]));
        std::sort(c.begin(), c.end());
        f.max_cones.push_back(std::move(c));
    }
    std::sort(f.max_cones.begin(), f.max_cones.end());
    require_valid(f);
    return f;
}

std::optional<std::size_t> facet_of_ray(const Polytope& p, const IntVector& ray) {
    for (std::size_t i = 0; i < p.facets().size(); ++i) {
        const auto& q = p.facets()[i];
        if (q.rhs != 1) continue;
        bool match = true;
        for (std::size_t j = 0; j < ray.size() && match; ++j) match = q.normal[j] == -ray[j];
        if (match) return i;
    }
    return std::nullopt;
}

bool is_fano(const Fan& f) {
    if (!is_complete(f)) return false;
    std::vector<RatVector> pts;
    for (const auto& r : f.rays) pts.push_back(to_rational(r));
    Polytope hull = Polytope::from_points(f.dim, pts);
    if (hull.vertices().size() != f.rays.size()) return false;
    Polytope p = polytope_from_fan(f);
    if (!is_lattice_polytope(p)) return false;
    if (p.facets().size() != f.rays.size()) return false;
    for (const auto& r : f.rays)
        if (!facet_of_ray(p, r)) return false;
    return true;
}

}  // namespace toricsym
