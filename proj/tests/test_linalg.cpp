#include "doctest.h"
#include "toricsym/linalg.hpp"

#include <random>

using namespace toricsym;

namespace {

IntMatrix diag_form(const IntMatrix& a, const SmithDecomposition& s) {
    return s.left * a * s.right;
}

void check_smith(const IntMatrix& a) {
    auto s = smith_normal_form(a);
    IntMatrix d = diag_form(a, s);
    for (std::size_t i = 0; i < d.rows(); ++i)
        for (std::size_t j = 0; j < d.cols(); ++j)
            CHECK(d(i, j) == (i == j ? s.diagonal[i] : Integer(0)));
    CHECK(is_unimodular(s.left));
    CHECK(is_unimodular(s.right));
    for (std::size_t i = 0; i + 1 < s.diagonal.size(); ++i) {
        CHECK(s.diagonal[i] >= 0);
        if (s.diagonal[i] != 0) CHECK(s.diagonal[i + 1] % s.diagonal[i] == 0);
        else CHECK(s.diagonal[i + 1] == 0);
    }
}

IntMatrix random_unimodular(std::size_t n, std::mt19937& rng) {
    IntMatrix u = IntMatrix::identity(n);
    std::uniform_int_distribution<int> pick(0, static_cast<int>(n) - 1), coef(-2, 2);
    for (int step = 0; step < 12; ++step) {
        std::size_t i = pick(rng), j = pick(rng);
        if (i == j) continue;
        IntMatrix e = IntMatrix::identity(n);
        e(i, j) = coef(rng);
        u = u * e;
    }
    return u;
}

}  // namespace

TEST_CASE("smith of identity") {
    IntMatrix id = IntMatrix::identity(2);
    auto s = smith_normal_form(id);
    CHECK(s.diagonal == std::vector<Integer>{1, 1});
    CHECK(s.left == id);
    CHECK(s.right == id);
}

TEST_CASE("smith of projective plane rays") {
    IntMatrix a{{1, 0}, {0, 1}, {-1, -1}};
    auto s = smith_normal_form(a);
    CHECK(s.diagonal == std::vector<Integer>{1, 1});
    check_smith(a);
    // last row of U spans the left kernel: the cokernel map
    IntVector rel = s.left.row(2);
    CHECK(abs(rel[0]) == 1);
    CHECK(rel[0] == rel[1]);
    CHECK(rel[1] == rel[2]);
}

TEST_CASE("smith of weighted plane rays gives weights 1,2,1") {
    IntMatrix a{{1, 0}, {0, 1}, {-1, -2}};
    auto s = smith_normal_form(a);
    CHECK(s.diagonal == std::vector<Integer>{1, 1});
    IntVector rel = s.left.row(2);
    if (rel[0] < 0)
        for (auto& x : rel) x = -x;
    CHECK(rel == IntVector{1, 2, 1});
    // the cokernel map kills the image
    for (std::size_t c = 0; c < 2; ++c) CHECK(dot(rel, a.col(c)) == 0);
}

TEST_CASE("smith with torsion") {
    IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
    auto s = smith_normal_form(a);
    CHECK(s.diagonal == std::vector<Integer>{2, 6, 12});
    check_smith(a);
    check_smith(IntMatrix{{0, 0}, {0, 3}, {0, 0}});
    check_smith(IntMatrix{{4, 6}});
}

TEST_CASE("invariant factors survive unimodular changes") {
    std::mt19937 rng(7);
    std::uniform_int_distribution<int> entry(-5, 5);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t m = 2 + trial % 4, n = 2 + (trial / 4) % 3;
        IntMatrix a(m, n);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j) a(i, j) = entry(rng);
        auto base = smith_normal_form(a).diagonal;
        IntMatrix b = random_unimodular(m, rng) * a * random_unimodular(n, rng);
        CHECK(smith_normal_form(b).diagonal == base);
        check_smith(b);
    }
}

TEST_CASE("unimodularity") {
    CHECK(is_unimodular(IntMatrix::identity(3)));
    CHECK(is_unimodular(IntMatrix{{0, 1}, {1, 0}}));
    CHECK_FALSE(is_unimodular(IntMatrix{{2, 0}, {0, 1}}));
    CHECK_THROWS_AS(is_unimodular(IntMatrix{{1, 0, 0}, {0, 1, 0}}), ValidationError);
}

TEST_CASE("determinant against cofactor expansion") {
    std::mt19937 rng(3);
    std::uniform_int_distribution<int> entry(-4, 4);
    for (int t = 0; t < 50; ++t) {
        IntMatrix a(3, 3);
        for (std::size_t i = 0; i < 3; ++i)
            for (std::size_t j = 0; j < 3; ++j) a(i, j) = entry(rng);
        Integer cof = a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) -
                      a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
                      a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
        CHECK(determinant(a) == cof);
    }
}

TEST_CASE("solve_rational") {
    RatVector b{make_rational(3, 4), make_rational(-2)};
    CHECK(*solve_rational(IntMatrix::identity(2), b) == b);
    auto x = solve_rational(IntMatrix{{1, 1}, {1, -1}}, RatVector{1, 0});
    REQUIRE(x);
    CHECK(*x == RatVector{make_rational(1, 2), make_rational(1, 2)});
    CHECK_FALSE(solve_rational(IntMatrix{{1, 1}, {2, 2}}, RatVector{1, 0}));
    CHECK_THROWS_AS(solve_rational(IntMatrix{{1, 1}, {2, 2}}, RatVector{1}), ValidationError);
}

TEST_CASE("solve then substitute reproduces b") {
    std::mt19937 rng(11);
    std::uniform_int_distribution<int> entry(-6, 6);
    for (int t = 0; t < 40; ++t) {
        IntMatrix a(4, 4);
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) a(i, j) = entry(rng);
        RatVector b(4);
        for (auto& q : b) q = make_rational(entry(rng), 1 + (entry(rng) + 6) % 5);
        auto x = solve_rational(a, b);
        if (determinant(a) == 0) {
            CHECK_FALSE(x);
            continue;
        }
        REQUIRE(x);
        CHECK(a.apply(*x) == b);
    }
}

TEST_CASE("hermite normal form") {
    IntMatrix h = hermite_normal_form(IntMatrix{{2, 3}, {4, 5}});
    CHECK(h == IntMatrix{{2, 0}, {0, 1}});
    IntMatrix z = hermite_normal_form(IntMatrix{{1, 2}, {2, 4}});
    CHECK(z == IntMatrix{{1, 2}, {0, 0}});
}

TEST_CASE("kernel, rank, primitive direction") {
    std::vector<RatVector> rows{{1, 1, 1}};
    auto k = kernel(rows, 3);
    CHECK(k.size() == 2);
    for (auto& v : k) CHECK(dot(v, rows[0]) == 0);
    CHECK(rank(std::vector<IntVector>{{1, 2}, {2, 4}}) == 1);
    CHECK(primitive_direction(RatVector{make_rational(2, 3), make_rational(-4, 3)}) == IntVector{1, -2});
}
