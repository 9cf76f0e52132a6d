#include "conj/oracle.hpp"
#include "conj/sol.hpp"
#include "doctest.h"

using namespace gmc;
using namespace gmc::sol;

TEST_CASE("quadratic field arithmetic") {
    QuadraticFieldElement s(0, 1, 5);
    CHECK(s * s == QuadraticFieldElement(5, 0, 5));
    CHECK(QuadraticFieldElement(-2, 1, 5).sign() == 1);
    CHECK(QuadraticFieldElement(-3, 1, 5).sign() == -1);
    CHECK(QuadraticFieldElement(3, -1, 5).compare_abs(QuadraticFieldElement(-3, 1, 5)) == 0);
}

TEST_CASE("eigen_power_solve examples") {
    Mat2 phi{2, 1, 1, 1};
    CHECK(eigen_power_solve({2, 1}, {1, 0}, phi) == 1);
    CHECK(eigen_power_solve({0, 0}, {0, 0}, phi) == 0);
    CHECK_FALSE(eigen_power_solve({1, 1}, {1, 0}, phi));
    for (long long n = -6; n <= 6; ++n)
        for (Vec2 v : {Vec2{1, 0}, Vec2{3, -2}, Vec2{-1, 4}}) CHECK(eigen_power_solve(phi.pow(n) * v, v, phi) == n);
    CHECK_THROWS_AS(eigen_power_solve({1, 0}, {1, 0}, Mat2{1, 1, 0, 1}), DomainError);
}

TEST_CASE("torus bundle examples") {
    TorusBundleGroup G({2, 1, 1, 1});
    auto w = torus_bundle_conjugacy({{1, 0}, 1}, {{0, 0}, 1}, G);
    REQUIRE(w);
    CHECK(w->u == Vec2{0, 1});
    CHECK(w->p == 0);
    CHECK_FALSE(torus_bundle_conjugacy({{0, 0}, 3}, {{0, 0}, 2}, G));
    auto id = torus_bundle_conjugacy({{1, 2}, 2}, {{1, 2}, 2}, G);
    REQUIRE(id);
    CHECK(*id == TorusElement{});
    CHECK_THROWS_AS(TorusBundleGroup({1, 1, 0, 1}), DomainError);
    for (long long p = -5; p <= 5; ++p)
        if (p != 0) CHECK((Mat2::identity() - G.phi().pow(p)).det() != 0);
}

TEST_CASE("torus bundle words round trip") {
    TorusBundleGroup G({2, 1, 1, 1});
    auto e = G.normalize(parse_word("x t y^-1 t^-1 x^2"));
    CHECK(G.normalize(G.to_word(e)) == e);
    CHECK(G.multiply(e, G.inverse(e)) == TorusElement{});
}

TEST_CASE("double Klein examples") {
    DoubleKleinGroup I(Mat2::identity());
    CHECK(I.derived_matrix() == Mat2::identity());
    CHECK_FALSE(double_klein_conjugacy(I.from_h({1, 3}), I.from_h({1, 1}), I));
    CHECK(double_klein_conjugacy(I.from_h({1, 3}), I.from_h({1, -3}), I));

    DoubleKleinGroup G({1, 1, 0, 1});
    CHECK(G.derived_matrix() == Mat2{1, -2, 0, 1});
    CHECK(row_orbit_power({1, 3}, {1, 1}, G.derived_matrix()) == 1);
    auto w = double_klein_conjugacy(G.from_h({1, 3}), G.from_h({1, 1}), G);
    REQUIRE(w);
    CHECK(G.conjugate(*w, G.from_h({1, 3})) == G.from_h({1, 1}));

    auto a1 = G.normalize(parse_word("a1"));
    auto ab = G.normalize(parse_word("a1 b1^2"));
    auto x = double_klein_conjugacy(a1, ab, G);
    REQUIRE(x);
    CHECK(G.conjugate(*x, a1) == ab);
    CHECK_FALSE(double_klein_conjugacy(a1, G.normalize(parse_word("a2")), G));
}

TEST_CASE("double Klein agrees with brute force") {
    for (Mat2 V : {Mat2{1, 1, 0, 1}, Mat2{2, 1, 1, 1}, Mat2{0, 1, 1, 0}}) {
        DoubleKleinGroup G(V);
        oracle::GroupHandle H{G.alphabet(), [&](const Word& x) { return G.normalize(x) == DoubleKleinElement{}; },
                              [&](const Word& x) { return G.str(G.normalize(x)); }};
        auto words = oracle::ball(G.alphabet(), 2);
        for (std::size_t i = 0; i < words.size(); i += 3)
            for (std::size_t j = 0; j < words.size(); j += 4) {
                auto U = G.normalize(words[i]), W = G.normalize(words[j]);
                CHECK(G.normalize(G.to_word(U)) == U);
                auto fast = double_klein_conjugacy(U, W, G);
                if (fast) CHECK(G.conjugate(*fast, U) == W);
                auto slow = oracle::brute_conjugator(words[j], words[i], H, 4);
                if (slow) CHECK(fast.has_value());
            }
    }
}
