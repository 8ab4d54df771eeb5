#include "doctest.h"
#include "toricsym/polytope.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>

using namespace toricsym;

namespace {

Rational q(long a, long b = 1) { return make_rational(a, b); }

HPolytope system(std::size_t n, const std::vector<std::vector<long>>& rows) {
    // each row: normal..., rhs
    HPolytope h{n, {}};
    for (const auto& r : rows) {
        IntVector a(r.begin(), r.begin() + static_cast<long>(n));
        h.inequalities.push_back({a, Rational(r[n])});
    }
    return h;
}

HPolytope anticanonical(const std::vector<std::vector<long>>& rays) {
    HPolytope h{rays[0].size(), {}};
    for (const auto& v : rays) {
        IntVector a;
        for (long x : v) a.emplace_back(-x);
        h.inequalities.push_back({a, 1});
    }
    return h;
}

std::set<RatVector> vset(const Polytope& p) { return {p.vertices().begin(), p.vertices().end()}; }

std::set<RatVector> pts(const std::vector<std::vector<Rational>>& v) { return {v.begin(), v.end()}; }

// Shoelace oracle for a convex polygon: area and centroid from the angularly sorted vertex cycle.
std::pair<Rational, RatVector> shoelace(std::vector<RatVector> v) {
    Rational cx = 0, cy = 0;
    for (auto& p : v) {
        cx += p[0];
        cy += p[1];
    }
    cx /= static_cast<long>(v.size());
    cy /= static_cast<long>(v.size());
    // sort by angle around the vertex average using exact cross products, split by half-plane
    auto half = [&](const RatVector& p) { return (p[1] - cy > 0 || (p[1] == cy && p[0] - cx > 0)) ? 0 : 1; };
    std::sort(v.begin(), v.end(), [&](const RatVector& a, const RatVector& b) {
        int ha = half(a), hb = half(b);
        if (ha != hb) return ha < hb;
        Rational cr = (a[0] - cx) * (b[1] - cy) - (a[1] - cy) * (b[0] - cx);
        return cr > 0;
    });
    Rational a2 = 0, sx = 0, sy = 0;
    for (std::size_t i = 0; i < v.size(); ++i) {
        const auto& p = v[i];
        const auto& r = v[(i + 1) % v.size()];
        Rational cr = p[0] * r[1] - r[0] * p[1];
        a2 += cr;
        sx += (p[0] + r[0]) * cr;
        sy += (p[1] + r[1]) * cr;
    }
    Rational area = a2 / 2;
    return {area, {sx / (3 * a2), sy / (3 * a2)}};
}

}  // namespace

TEST_CASE("square from inequalities") {
    Polytope p = vertices_from_inequalities(system(2, {{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}}));
    CHECK(vset(p) == pts({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));
    CHECK(p.facets().size() == 4);
}

TEST_CASE("projective plane polytope") {
    Polytope p = vertices_from_inequalities(system(2, {{-1, 0, 1}, {0, -1, 1}, {1, 1, 1}}));
    CHECK(vset(p) == pts({{-1, 2}, {-1, -1}, {2, -1}}));
    auto vb = volume_and_barycenter(p);
    CHECK(vb.volume == q(9, 2));
    CHECK(vb.barycenter == RatVector{0, 0});
    CHECK(is_lattice_polytope(p));
    CHECK(contains(p, {0, 0}, true));
    CHECK(contains(p, {2, -1}, false));
    CHECK_FALSE(contains(p, {2, -1}, true));
    CHECK_FALSE(contains(p, {3, 0}, false));
    CHECK_THROWS_AS(contains(p, {0, 0, 0}, false), ValidationError);
    Polytope p3 = dilate(p, 3);
    CHECK(vset(p3) == pts({{-3, 6}, {-3, -3}, {6, -3}}));
    CHECK(vset(dilate(p, 1)) == vset(p));
    CHECK_THROWS_AS(dilate(p, 0), ValidationError);
}

TEST_CASE("five-ray del Pezzo polytope") {
    Polytope p = vertices_from_inequalities(anticanonical({{-1, 0}, {-1, -1}, {0, -1}, {1, 0}, {0, 1}}));
    CHECK(vset(p) == pts({{1, -1}, {1, 0}, {0, 1}, {-1, 1}, {-1, -1}}));
    Slice s = intersect_with_subspace(p, {{1, 1}});
    REQUIRE_FALSE(s.empty);
    CHECK(vset(s.polytope) == pts({{-1}, {q(1, 2)}}));
    CHECK(s.to_ambient({q(1, 2)}) == RatVector{q(1, 2), q(1, 2)});
}

TEST_CASE("slices") {
    Polytope sq = vertices_from_inequalities(system(2, {{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}}));
    Slice s = intersect_with_subspace(sq, {{1, 1}});
    CHECK(vset(s.polytope) == pts({{-1}, {1}}));
    Slice z = intersect_with_subspace(sq, {});
    CHECK_FALSE(z.empty);
    CHECK(z.polytope.vertices().size() == 1);
    // a slice missing the polytope entirely
    Polytope off = vertices_from_inequalities(system(2, {{1, 0, 3}, {-1, 0, -2}, {0, 1, 1}, {0, -1, 1}}));
    CHECK(intersect_with_subspace(off, {{1, 0}}).empty == false);
    CHECK(intersect_with_subspace(off, {{0, 1}}).empty);
    CHECK(intersect_with_subspace(off, {}).empty);
    CHECK_THROWS_AS(intersect_with_subspace(sq, {{1, 1}, {2, 2}}), ValidationError);
}

TEST_CASE("cube and the 3-fold with nonzero barycenter") {
    Polytope cube = vertices_from_inequalities(
        system(3, {{1, 0, 0, 1}, {-1, 0, 0, 1}, {0, 1, 0, 1}, {0, -1, 0, 1}, {0, 0, 1, 1}, {0, 0, -1, 1}}));
    auto vb = volume_and_barycenter(cube);
    CHECK(vb.volume == 8);
    CHECK(vb.barycenter == RatVector{0, 0, 0});

    // -1<=x1<=1-x3, -1<=x2<=1, -1<=x3<=1, -1<=x3-x2<=1
    Polytope p = vertices_from_inequalities(system(3, {{-1, 0, 0, 1},
                                                      {1, 0, 1, 1},
                                                      {0, -1, 0, 1},
                                                      {0, 1, 0, 1},
                                                      {0, 0, -1, 1},
                                                      {0, 0, 1, 1},
                                                      {0, 1, -1, 1},
                                                      {0, -1, 1, 1}}));
    auto b = volume_and_barycenter(p);
    CHECK(b.volume == 6);
    CHECK(b.barycenter == RatVector{q(5, 72), q(-5, 72), q(-5, 36)});
}

TEST_CASE("lattice polytope predicate") {
    // weighted plane: the hand intersection points are (-1,-1), (3,-1), (-1,1)
    Polytope w = vertices_from_inequalities(anticanonical({{1, 0}, {0, 1}, {-1, -2}}));
    std::set<RatVector> oracle;
    const std::vector<std::array<long, 3>> lines{{-1, 0, 1}, {0, -1, 1}, {1, 2, 1}};
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i + 1; j < 3; ++j) {
            const auto &a = lines[i], &b = lines[j];
            long det = a[0] * b[1] - a[1] * b[0];
            RatVector x{q(a[2] * b[1] - a[1] * b[2], det), q(a[0] * b[2] - a[2] * b[0], det)};
            bool ok = true;
            for (const auto& l : lines) ok = ok && l[0] * x[0] + l[1] * x[1] <= l[2];
            if (ok) oracle.insert(x);
        }
    CHECK(vset(w) == oracle);
    CHECK(is_lattice_polytope(w));

    Polytope half = Polytope::from_points(2, {{0, 1}, {0, -1}, {q(1, 2), 0}, {q(-1, 2), 0}});
    CHECK(half.vertices().size() == 4);
    CHECK_FALSE(is_lattice_polytope(half));
}

TEST_CASE("bad systems") {
    CHECK_THROWS_AS(vertices_from_inequalities(system(2, {{1, 0, 1}, {0, 1, 1}})), ValidationError);
    CHECK_THROWS_AS(vertices_from_inequalities(system(2, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 1}, {0, -1, 1}})),
                    ValidationError);
    CHECK_THROWS_AS(vertices_from_inequalities(system(1, {{1, -1}, {-1, -1}})), ValidationError);
    auto flat = Polytope::from_inequalities(system(2, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 1}, {0, -1, 1}}), true);
    CHECK(flat.affine_dim() == 1);
    CHECK(flat.equations().size() == 1);
    CHECK(flat.facets().size() == 2);
}

TEST_CASE("redundant inequalities are dropped and reported") {
    Polytope p = vertices_from_inequalities(
        system(2, {{1, 0, 1}, {-1, 0, 1}, {0, 1, 1}, {0, -1, 1}, {1, 1, 5}, {2, 0, 2}}));
    CHECK(p.facets().size() == 4);
    CHECK(p.dropped() == std::vector<std::size_t>{4, 5});
}

TEST_CASE("random polygons against the shoelace oracle") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> c(-6, 6);
    int checked = 0;
    while (checked < 60) {
        std::vector<RatVector> points;
        for (int i = 0; i < 7; ++i) points.push_back({c(rng), c(rng)});
        if (affine_dimension(points) < 2) continue;
        Polytope p = Polytope::from_points(2, points);
        auto vb = volume_and_barycenter(p);
        auto [area, cen] = shoelace(p.vertices());
        CHECK(vb.volume == area);
        CHECK(vb.barycenter == cen);
        ++checked;
    }
}

TEST_CASE("volume and barycenter invariances") {
    std::mt19937 rng(9);
    std::uniform_int_distribution<int> c(-3, 3);
    for (int t = 0; t < 25; ++t) {
        std::vector<RatVector> points;
        for (int i = 0; i < 7; ++i) points.push_back({c(rng), c(rng), c(rng)});
        if (affine_dimension(points) < 3) continue;
        Polytope p = Polytope::from_points(3, points);
        auto base = volume_and_barycenter(p);

        // round trip through the facet system
        CHECK(vset(vertices_from_inequalities(p.h())) == vset(p));

        // incidences lie on their hyperplanes
        for (std::size_t f = 0; f < p.facets().size(); ++f)
            for (auto v : p.facet_vertices(f)) CHECK(p.facets()[f].tight_at(p.vertices()[v]));

        // input order
        std::vector<RatVector> shuffled = p.vertices();
        std::shuffle(shuffled.begin(), shuffled.end(), rng);
        CHECK(volume_and_barycenter(Polytope::from_points(3, shuffled)).volume == base.volume);

        // unimodular map plus translation
        IntMatrix g{{1, 2, 0}, {0, 1, -1}, {1, 1, 0}};
        REQUIRE(is_unimodular(g));
        RatVector shift{q(1, 3), -2, 5};
        std::vector<RatVector> moved;
        for (const auto& v : p.vertices()) {
            RatVector w = g.apply(v);
            for (std::size_t j = 0; j < 3; ++j) w[j] += shift[j];
            moved.push_back(w);
        }
        auto mv = volume_and_barycenter(Polytope::from_points(3, moved));
        CHECK(mv.volume == base.volume);
        RatVector expect = g.apply(base.barycenter);
        for (std::size_t j = 0; j < 3; ++j) expect[j] += shift[j];
        CHECK(mv.barycenter == expect);

        // dilation scales volume by k^n
        CHECK(volume_and_barycenter(dilate(p, 2)).volume == 8 * base.volume);

        // central symmetrization has barycenter exactly zero
        std::vector<RatVector> sym = p.vertices();
        for (const auto& v : p.vertices()) sym.push_back({-v[0], -v[1], -v[2]});
        CHECK(is_zero(volume_and_barycenter(Polytope::from_points(3, sym)).barycenter));
    }
}
