#include "doctest.h"
#include "fixtures.hpp"
#include "toricsym/lp.hpp"

#include <random>

using namespace toricsym;
using fixtures::load;
using fixtures::pts;
using fixtures::q;
using fixtures::vset;

namespace {

Fan make(std::size_t n, std::vector<IntVector> rays, std::vector<Cone> cones) { return Fan{n, std::move(rays), std::move(cones)}; }

// x = sum lambda_j g_j, lambda >= 0
bool direction_in_cone(const Fan& f, const Cone& c, const RatVector& x) {
    const std::size_t m = c.size();
    std::vector<RatVector> a, eq;
    RatVector b, e;
    for (std::size_t j = 0; j < m; ++j) {
        RatVector row(m);
        row[j] = -1;
        a.push_back(row);
        b.push_back(0);
    }
    for (std::size_t i = 0; i < f.dim; ++i) {
        RatVector row(m);
        for (std::size_t j = 0; j < m; ++j) row[j] = f.rays[c[j]][i];
        eq.push_back(row);
        e.push_back(x[i]);
    }
    return lp_feasible_point(m, a, b, eq, e).has_value();
}

bool shoot(const Fan& f, std::mt19937& rng, int samples) {
    std::uniform_int_distribution<int> c(-1000, 1000);
    for (int s = 0; s < samples; ++s) {
        RatVector x(f.dim);
        for (auto& v : x) v = make_rational(c(rng), 7);
        bool hit = false;
        for (const auto& cone : f.max_cones) hit = hit || direction_in_cone(f, cone, x);
        if (!hit) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("validation") {
    Fan p2 = make(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(validate_fan(p2).ok());

    Fan wide = make(2, {{2, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}, {0, 2}});
    auto r = validate_fan(wide);
    REQUIRE_FALSE(r.ok());
    CHECK(r.problems.front().find("not primitive") != std::string::npos);

    // two wedges overlapping between (2,1) and (1,2)
    Fan overlap = make(2, {{1, 0}, {2, 1}, {1, 2}, {0, 1}}, {{0, 2}, {1, 3}});
    auto o = validate_fan(overlap);
    CHECK_FALSE(o.ok());
    REQUIRE(o.bad_pairs.size() == 1);
    CHECK(o.bad_pairs[0] == std::pair<std::size_t, std::size_t>{0, 1});

    Fan flat = make(2, {{1, 0}, {-1, 0}}, {{0, 1}});
    CHECK_FALSE(validate_fan(flat).ok());

    Fan interior_ray = make(2, {{1, 0}, {1, 1}, {0, 1}}, {{0, 1, 2}});
    CHECK_FALSE(validate_fan(interior_ray).ok());

    Fan dup = make(2, {{1, 0}, {1, 0}}, {{0}});
    CHECK_FALSE(validate_fan(dup).ok());
}

TEST_CASE("completeness") {
    CHECK(is_complete(load("p2")));
    CHECK_FALSE(is_complete(make(2, {{1, 0}, {0, 1}}, {{0, 1}})));
    Fan hex = face_fan_from_polytope({{1, 0}, {1, 1}, {0, 1}, {-1, 0}, {-1, -1}, {0, -1}});
    CHECK(hex.max_cones.size() == 6);
    CHECK(is_complete(hex));
    Fan missing = make(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}});
    CHECK_FALSE(is_complete(missing));
}

TEST_CASE("completeness agrees with ray shooting") {
    std::mt19937 rng(17);
    for (const auto& name : fixtures::bundled()) {
        Fan f = load(name);
        CHECK(is_complete(f));
        CHECK(shoot(f, rng, 1000 / static_cast<int>(fixtures::bundled().size()) + 1));
    }
    Fan missing = make(2, {{1, 0}, {0, 1}, {-1, -1}}, {{0, 1}, {1, 2}});
    CHECK_FALSE(shoot(missing, rng, 1000));
}

TEST_CASE("simplicial and smooth") {
    CHECK(is_smooth(load("p2")));
    Fan w = load("weighted_112");
    CHECK(is_simplicial(w));
    CHECK_FALSE(is_smooth(w));
    Fan pyramid = make(3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}}, {{0, 1, 2, 3}});
    CHECK(validate_fan(pyramid).ok());
    CHECK_FALSE(is_simplicial(pyramid));
    for (const auto& name : fixtures::bundled()) {
        Fan f = load(name);
        if (!is_smooth(f)) continue;
        for (const auto& c : f.max_cones) {
            std::vector<IntVector> rows;
            for (auto i : c) rows.push_back(f.rays[i]);
            CHECK(is_unimodular(IntMatrix::from_rows(rows, f.dim)));
        }
    }
}

TEST_CASE("anticanonical polytopes") {
    CHECK(vset(polytope_from_fan(load("p2"))) == pts({{-1, 2}, {-1, -1}, {2, -1}}));
    CHECK(vset(polytope_from_fan(load("p1xp1"))) == pts({{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}));

    // -1<=x1<=1-x3, -1<=x2<=1, -1<=x3<=1, -1<=x3-x2<=1
    Polytope p = polytope_from_fan(load("fano3fold_5_2"));
    std::set<std::pair<IntVector, Rational>> got, want;
    for (const auto& f : p.facets()) got.insert({f.normal, f.rhs});
    for (const auto& [a, b] : std::vector<std::pair<IntVector, long>>{{{-1, 0, 0}, 1},
                                                                      {{1, 0, 1}, 1},
                                                                      {{0, -1, 0}, 1},
                                                                      {{0, 1, 0}, 1},
                                                                      {{0, 0, -1}, 1},
                                                                      {{0, 0, 1}, 1},
                                                                      {{0, 1, -1}, 1},
                                                                      {{0, -1, 1}, 1}})
        want.insert({a, Rational(b)});
    CHECK(got == want);
    CHECK(contains(p, {0, 0, 0}, true));

    CHECK_THROWS_AS(polytope_from_fan(make(2, {{1, 0}, {0, 1}}, {{0, 1}})), DomainError);
}

TEST_CASE("face fans") {
    Fan sq = face_fan_from_polytope({{1, 0}, {0, 1}, {-1, 0}, {0, -1}});
    CHECK(sq.max_cones == std::vector<Cone>{{0, 1}, {0, 3}, {1, 2}, {2, 3}});
    Fan p2 = face_fan_from_polytope({{1, 0}, {0, 1}, {-1, -1}});
    CHECK(p2.max_cones == std::vector<Cone>{{0, 1}, {0, 2}, {1, 2}});
    CHECK_THROWS_AS(face_fan_from_polytope({{1, 0}, {0, 1}, {1, 1}}), ValidationError);
    CHECK_THROWS_AS(face_fan_from_polytope({{1, 0}, {-1, 0}}), ValidationError);
}

TEST_CASE("fano predicate") {
    CHECK(is_fano(load("p2")));
    CHECK(is_fano(load("dp1")));
    // (0,1) sits on the segment from (-1,0) to (1,2), and its inequality is redundant
    Fan refined = make(2, {{1, 0}, {1, 2}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}});
    REQUIRE(validate_fan(refined).ok());
    REQUIRE(is_complete(refined));
    Polytope p = polytope_from_fan(refined);
    CHECK(p.facets().size() == 4);
    CHECK_FALSE(facet_of_ray(p, {0, 1}));
    CHECK_FALSE(is_fano(refined));
}

TEST_CASE("reflexive duality applied twice") {
    for (const auto& name : fixtures::bundled()) {
        Fan f = load(name);
        if (!is_fano(f)) continue;
        Polytope p = polytope_from_fan(f);
        std::vector<IntVector> dual;
        for (const auto& v : p.vertices()) {
            IntVector w;
            for (const auto& x : v) w.push_back(x.get_num());
            dual.push_back(w);
        }
        Fan g = face_fan_from_polytope(dual);
        CHECK(is_fano(g));
        Polytope back = polytope_from_fan(g);
        std::set<RatVector> rays;
        for (const auto& r : f.rays) rays.insert(to_rational(r));
        CHECK(vset(back) == rays);
    }
}
