#include "doctest.h"
#include "fixtures.hpp"
#include "toricsym/chain.hpp"
#include "toricsym/reflexive.hpp"
#include "toricsym/symmetry.hpp"

#include <random>

using namespace toricsym;
using fixtures::load;

namespace {

bool has(const std::vector<std::string>& v, const std::string& s) { return std::find(v.begin(), v.end(), s) != v.end(); }

IntMatrix random_unimodular(std::mt19937& rng) {
    std::uniform_int_distribution<int> pick(0, 3), c(-2, 2);
    IntMatrix g = IntMatrix::identity(2);
    for (int s = 0; s < 6; ++s) {
        IntMatrix e = IntMatrix::identity(2);
        switch (pick(rng)) {
            case 0: e(0, 1) = c(rng); break;
            case 1: e(1, 0) = c(rng); break;
            case 2: e = IntMatrix{{0, 1}, {1, 0}}; break;
            default: e = IntMatrix{{-1, 0}, {0, 1}}; break;
        }
        g = g * e;
    }
    return g;
}

}  // namespace

TEST_CASE("sixteen reflexive polygons") {
    auto polys = reflexive_polygons();
    CHECK(polys.size() == 16);
    // the same classes already fit in the smaller box
    CHECK(reflexive_polygons(2).size() == 16);
    std::set<std::size_t> vertex_counts;
    for (const auto& p : polys) {
        vertex_counts.insert(p.size());
        Fan f = face_fan_from_polytope(p);
        CHECK(is_fano(f));
    }
    CHECK(vertex_counts == std::set<std::size_t>{3, 4, 5, 6});
}

TEST_CASE("normal form is a GL(2,Z) invariant") {
    std::mt19937 rng(8);
    auto polys = reflexive_polygons(2);
    for (const auto& p : polys) {
        IntMatrix form = polygon_normal_form(p);
        for (int t = 0; t < 10; ++t) {
            IntMatrix g = random_unimodular(rng);
            std::vector<IntVector> img;
            for (const auto& v : p) img.push_back(g.apply(v));
            if (determinant(g) < 0) std::reverse(img.begin(), img.end());
            CHECK(polygon_normal_form(img) == form);
        }
    }
}

TEST_CASE("chain on P2") {
    auto r = verify_implication_chain(load("p2"), 4);
    CHECK(r.consistent());
    CHECK(r.value("central_symmetry") == false);
    for (const auto& id : {"bs_symmetry", "alpha_one", "bc_k_zero_all_k", "bc_k_zero_n_plus_1", "bc_zero", "lattice_symmetry", "reductive"})
        CHECK_MESSAGE(r.value(id) == true, id);
    CHECK(has(r.strict_witnesses, "bs_symmetry holds without central_symmetry"));
    CHECK(r.vanishing_ks == std::vector<long>{1, 2, 3, 4});
}

TEST_CASE("chain on dP1") {
    auto r = verify_implication_chain(load("dp1"), 3);
    CHECK(r.consistent());
    for (const auto& id : {"central_symmetry", "bs_symmetry", "bc_k_zero_all_k", "bc_k_zero_n_plus_1", "bc_zero", "lattice_symmetry", "reductive"})
        CHECK_MESSAGE(r.value(id) == false, id);
    CHECK(r.vanishing_ks.empty());
}

TEST_CASE("chain on the 3-fold with R = -R but Bc != 0") {
    auto r = verify_implication_chain(load("fano3fold_5_2"), 2);
    CHECK(r.consistent());
    CHECK(r.value("bc_zero") == false);
    CHECK(r.value("lattice_symmetry") == true);
    CHECK(has(r.strict_witnesses, "lattice_symmetry holds without bc_zero"));
}

TEST_CASE("chain on every bundled Fano fan and random reflexive polygons") {
    for (const auto& name : fixtures::bundled()) {
        Fan f = load(name);
        if (!is_fano(f)) continue;
        auto r = verify_implication_chain(f, 3);
        CHECK_MESSAGE(r.consistent(), name);
        for (const auto& n : r.nodes) CHECK_MESSAGE(n.value.has_value(), name << " " << n.id);
    }
    std::mt19937 rng(21);
    auto polys = reflexive_polygons(2);
    for (int t = 0; t < 20; ++t) {
        const auto& p = polys[static_cast<std::size_t>(t) % polys.size()];
        IntMatrix g = random_unimodular(rng);
        std::vector<IntVector> rays;
        for (const auto& v : p) rays.push_back(g.apply(v));
        Fan f = face_fan_from_polytope(rays);
        auto r = verify_implication_chain(f, 3);
        CHECK(r.consistent());
    }
    CHECK_THROWS_AS(verify_implication_chain(Fan{2, {{1, 0}, {1, 2}, {0, 1}, {-1, 0}, {0, -1}}, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}}, 3),
                    DomainError);
}
