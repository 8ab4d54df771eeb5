#include "doctest.h"
#include "fixtures.hpp"
#include "toricsym/demazure.hpp"

#include <map>

using namespace toricsym;
using fixtures::load;

namespace {

std::vector<std::vector<std::size_t>> partition(const Fan& f) {
    std::vector<std::vector<std::size_t>> out;
    for (const auto& c : variable_classes(f)) out.push_back(c.rays);
    return out;
}

// monomials x^a with sum a_v deg(v) = target, on the free part, by bounded search
std::size_t monomials_of_degree(const ClassGroup& cg, const IntVector& target, int max_exp) {
    const std::size_t d = cg.degree_of.size();
    std::vector<int> a(d, 0);
    std::size_t count = 0;
    while (true) {
        IntVector s(target.size());
        for (std::size_t v = 0; v < d; ++v)
            for (std::size_t c = 0; c < s.size(); ++c) s[c] += a[v] * cg.degree_of[v][c];
        if (s == target) ++count;
        std::size_t v = 0;
        while (v < d && ++a[v] > max_exp) a[v++] = 0;
        if (v == d) break;
    }
    return count;
}

}  // namespace

TEST_CASE("class groups") {
    auto p2 = class_group(load("p2"));
    CHECK(p2.free_rank == 1);
    CHECK(p2.torsion.empty());
    CHECK(p2.degree_of == std::vector<IntVector>{{1}, {1}, {1}});

    auto sq = class_group(load("p1xp1"));
    CHECK(sq.free_rank == 2);
    CHECK(sq.degree_of == std::vector<IntVector>{{1, 0}, {0, 1}, {1, 0}, {0, 1}});

    auto w = class_group(load("weighted_112"));
    CHECK(w.free_rank == 1);
    CHECK(w.torsion.empty());
    CHECK(w.degree_of == std::vector<IntVector>{{1}, {2}, {1}});

    // all 2x2 minors are divisible by 3: a quotient of P^2 with Z/3 torsion
    Fan quotient{2, {{2, 1}, {-1, 1}, {-1, -2}}, {{0, 1}, {1, 2}, {0, 2}}};
    REQUIRE(validate_fan(quotient).ok());
    REQUIRE(is_complete(quotient));
    auto qc = class_group(quotient);
    CHECK(qc.free_rank == 1);
    CHECK(qc.torsion == std::vector<Integer>{3});
    for (const auto& d : qc.degree_of) CHECK(d[0] == 1);
}

TEST_CASE("variable classes") {
    CHECK(partition(load("p2")) == std::vector<std::vector<std::size_t>>{{0, 1, 2}});
    // rays (1,0),(0,1) share the fiber class; (-1,-1) and (1,1) stand alone
    CHECK(partition(load("dp1")) == std::vector<std::vector<std::size_t>>{{0, 1}, {2}, {3}});
    CHECK(partition(load("dp3")).size() == 6);
    for (const auto& name : fixtures::bundled()) {
        Fan f = load(name);
        std::size_t total = 0;
        for (const auto& c : variable_classes(f)) total += c.rays.size();
        CHECK(total == f.rays.size());
    }
}

TEST_CASE("graded dimensions") {
    Fan p2 = load("p2");
    CHECK(graded_dimension(p2, {1}) == 3);
    Fan dp1 = load("dp1");
    auto cg = class_group(dp1);
    CHECK(graded_dimension(dp1, cg.degree_of[2]) == 3);  // x0
    CHECK(graded_dimension(dp1, cg.degree_of[3]) == 1);  // y
    CHECK(graded_dimension(dp1, cg.degree_of[0]) == 2);
    CHECK_THROWS_AS(graded_dimension(dp1, {7, 7}), ValidationError);

    // counting monomials directly on the free grading
    for (const auto& name : {"p2", "p1xp1", "dp1", "dp2", "dp3", "weighted_112"}) {
        Fan f = load(name);
        auto g = class_group(f);
        for (const auto& c : variable_classes(f))
            CHECK_MESSAGE(graded_dimension(f, c.degree) == monomials_of_degree(g, c.degree, 2), name);
    }
}

TEST_CASE("root automorphisms") {
    Fan dp1 = load("dp1");
    auto a = root_automorphism(dp1, {1, 0});
    CHECK(a.ray == 2);
    CHECK(a.exponents == std::vector<Integer>{1, 0, 0, 1});  // x0 -> x0 + y x1'

    Fan p2 = load("p2");
    for (const auto& r : roots(p2).roots) {
        auto ra = root_automorphism(p2, r.m);
        CHECK(ra.ray == r.ray);
        Integer sum = 0;
        for (const auto& e : ra.exponents) sum += e;
        CHECK(sum == 1);
        CHECK(ra.exponents[ra.ray] == 0);
    }

    for (const auto& name : fixtures::bundled()) {
        Fan f = load(name);
        auto cg = class_group(f);
        auto rd = roots(f);
        for (const auto& r : rd.roots) {
            auto ra = root_automorphism(f, r.m);
            CHECK(ra.exponents[ra.ray] == 0);
            IntVector deg(cg.degree_of[0].size());
            for (std::size_t v = 0; v < f.rays.size(); ++v)
                for (std::size_t c = 0; c < deg.size(); ++c) deg[c] += ra.exponents[v] * cg.degree_of[v][c];
            for (std::size_t c = cg.free_rank; c < deg.size(); ++c)
                mpz_fdiv_r(deg[c].get_mpz_t(), deg[c].get_mpz_t(), cg.torsion[c - cg.free_rank].get_mpz_t());
            CHECK(deg == cg.degree_of[ra.ray]);
        }
        for (const auto& r : rd.semisimple) {
            LatticePoint neg = r.m;
            for (auto& x : neg) x = -x;
            auto there = root_automorphism(f, r.m), back = root_automorphism(f, neg);
            CHECK(there.exponents[back.ray] == 1);
            CHECK(back.exponents[there.ray] == 1);
        }
    }
    CHECK_THROWS_AS(root_automorphism(dp1, {1, 1}), ValidationError);
}

TEST_CASE("Demazure reports") {
    auto dp2 = demazure_report(load("dp2"));
    CHECK(dp2.unipotent_dim == 2);
    CHECK(dp2.gs_factor_sizes == std::vector<std::size_t>{1, 1, 1, 1, 1});
    CHECK(dp2.dim_aut0 == 4);
    CHECK_FALSE(dp2.is_reductive);

    auto sq = demazure_report(load("p1xp1"));
    CHECK(sq.gs_factor_sizes == std::vector<std::size_t>{2, 2});
    CHECK(sq.is_reductive);
    CHECK(sq.weyl_order == 4);
    CHECK(sq.component_group_order == 2);

    auto p2 = demazure_report(load("p2"));
    CHECK(p2.dim_aut0 == 8);
    CHECK(p2.is_reductive);
    CHECK(p2.component_group_order == 1);

    // GL(2) x (C*)^2 and dim 6
    auto dp1 = demazure_report(load("dp1"));
    CHECK(dp1.gs_factor_sizes == std::vector<std::size_t>{2, 1, 1});
    CHECK(dp1.dim_aut0 == 6);

    auto w = demazure_report(load("weighted_112"));
    CHECK(w.dim_aut0 == 7);
    CHECK_FALSE(w.weyl_order);
    CHECK_FALSE(w.component_group_order);

    Fan pyramid{3, {{1, 0, 1}, {0, 1, 1}, {-1, 0, 1}, {0, -1, 1}}, {{0, 1, 2, 3}}};
    CHECK_THROWS_AS(demazure_report(pyramid), DomainError);
}

TEST_CASE("reductive exactly when lattice symmetric") {
    for (const auto& name : fixtures::bundled()) {
        Fan f = load(name);
        if (!is_fano(f)) continue;
        CHECK(demazure_report(f).is_reductive == classify_symmetry(f).centrally_lattice_symmetric);
    }
}
