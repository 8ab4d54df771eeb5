// Reference values for the del Pezzo surfaces, their polygons and threefold 5.2 live in
// data/golden.json; each one is compared exactly.
#include "doctest.h"
#include "fixtures.hpp"
#include "toricsym/demazure.hpp"
#include "toricsym/lattice_count.hpp"
#include "toricsym/stability.hpp"

#include "json.hpp"

using namespace toricsym;
using fixtures::load;
using nlohmann::json;

namespace {

const json& golden() {
    static const json g = json::parse(read_file(std::string(TORICSYM_DATA_DIR) + "/golden.json"));
    return g;
}

RatVector ratvec(const json& j) {
    RatVector v;
    for (const auto& x : j) v.push_back(parse_rational(x.get<std::string>()));
    return v;
}

std::set<LatticePoint> points(const json& j) { return j.get<std::set<LatticePoint>>(); }

std::set<LatticePoint> ms(const std::vector<Root>& rs) {
    std::set<LatticePoint> out;
    for (const auto& r : rs) out.insert(r.m);
    return out;
}

// facets as n / rhs, so <x, n / rhs> <= 1
std::set<RatVector> unit_facets(const Polytope& p) {
    std::set<RatVector> out;
    for (const auto& f : p.facets()) {
        RatVector n = to_rational(f.normal);
        for (auto& x : n) x /= f.rhs;
        out.insert(n);
    }
    return out;
}

}  // namespace

TEST_CASE("del Pezzo reference values") {
    for (const auto& [name, cell] : golden().at("surfaces").items()) {
        INFO(name);
        Fan f = load(name);
        Polytope p = polytope_from_fan(f);
        std::set<RatVector> verts;
        for (const auto& v : cell.at("vertices")) verts.insert(ratvec(v));
        CHECK(fixtures::vset(p) == verts);

        CHECK(polytope_automorphisms(p).order() == cell.at("aut_order").get<std::size_t>());
        CHECK(aut0_subgroup(p).order() == cell.at("aut0_order").get<std::size_t>());

        auto rd = roots(f);
        CHECK(ms(rd.semisimple) == points(cell.at("semisimple_roots")));
        CHECK(ms(rd.unipotent) == points(cell.at("unipotent_roots")));

        auto d = demazure_report(f);
        CHECK(d.gs_factor_sizes == cell.at("gs_factor_sizes").get<std::vector<std::size_t>>());
        CHECK(d.unipotent_dim == cell.at("unipotent_dim").get<std::size_t>());
        CHECK(d.dim_aut0 == cell.at("dim_aut0").get<std::size_t>());
        CHECK(d.is_reductive == cell.at("reductive").get<bool>());
        CHECK(classify_symmetry(f).bs_symmetric == cell.at("bs_symmetric").get<bool>());
    }
}

TEST_CASE("reflection orbits on the square") {
    Polytope sq = polytope_from_fan(load("p1xp1"));
    std::set<std::set<LatticePoint>> orbits;
    for (const auto& x : enumerate_lattice_points(sq)) orbits.insert({x, {x[1], x[0]}});
    CHECK(orbits.size() == golden().at("reflection_orbits_p1xp1_k1").get<std::size_t>());
}

TEST_CASE("Fano threefold 5.2") {
    const auto& g = golden().at("fano3fold_5_2");
    Fan f = load("fano3fold_5_2");
    Polytope p = polytope_from_fan(f);

    std::set<RatVector> expect;
    for (const auto& row : g.at("inequalities")) {
        RatVector n = ratvec(row[0]);
        Rational rhs = parse_rational(row[1].get<std::string>());
        for (auto& x : n) x /= rhs;
        expect.insert(n);
    }
    CHECK(unit_facets(p) == expect);

    auto vb = volume_and_barycenter(p);
    CHECK(vb.volume == parse_rational(g.at("volume").get<std::string>()));
    CHECK(vb.volume * 6 == g.at("anticanonical_degree").get<long>());
    CHECK(vb.barycenter == ratvec(g.at("barycenter")));
    RatVector moments = vb.barycenter;
    for (auto& x : moments) x *= vb.volume;
    CHECK(moments == ratvec(g.at("first_moments")));

    auto rd = roots(f);
    CHECK(ms(rd.roots) == points(g.at("roots")));
    auto v = metric_verdicts(f, 1);
    CHECK(v.reductive == g.at("reductive").get<bool>());
    CHECK(v.ke_exists == g.at("ke_exists").get<bool>());
    CHECK(v.alpha.at("full") == parse_rational(g.at("alpha").get<std::string>()));
    CHECK(demazure_report(f).dim_aut0 == g.at("dim_aut0").get<std::size_t>());
}
