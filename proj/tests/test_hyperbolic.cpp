#include <random>

#include "conj/hyperbolic.hpp"
#include "conj/oracle.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace gmc;
using namespace gmc::hyperbolic;

namespace {
Word w(const char* s) { return parse_word(s); }
Word conj3(const Word& g, const Word& x) { return concat({&g, &x, &static_cast<const Word&>(inverse(g))}); }
}  // namespace

TEST_CASE("polynomial ring arithmetic") {
    poly::PolyRing R({1, 1, 1});
    auto om = R.from_coeffs({0, 1});
    // w^3 = 1
    CHECK(R.mul(R.mul(om, om), om) == R.from_int(1));
    CHECK(R.add(R.add(R.from_int(1), om), R.mul(om, om)) == R.zero());
    CHECK_THROWS_AS(poly::PolyRing({1, 1, 2}), DomainError);
}

TEST_CASE("representation validation and word problem") {
    HyperbolicPiece P = fixtures::figure_eight();
    CHECK(P.word_problem(Word{}));
    for (const auto& r : P.presentation().relators) CHECK(P.word_problem(r));
    CHECK_FALSE(P.word_problem(w("x y x^-1")));
    // A relator the matrices do not satisfy is rejected.
    Presentation bad = P.presentation();
    bad.relators.push_back(w("x y"));
    CHECK_THROWS_AS(HyperbolicPiece(bad, P.rep(), {P.boundary(1)}, {}), DomainError);
}

TEST_CASE("boundary membership") {
    HyperbolicPiece P = fixtures::figure_eight();
    CHECK(P.boundary_membership(Word{}, 1) == Vec2{0, 0});
    CHECK(P.boundary_membership(w("x^3"), 1) == Vec2{3, 0});
    Word l = P.boundary(1).second;
    CHECK(P.boundary_membership(concat(l, w("x^-2")), 1) == Vec2{-2, 1});
    CHECK_FALSE(P.boundary_membership(w("x y"), 1));
    CHECK_FALSE(P.boundary_membership(w("y"), 1));
}

TEST_CASE("boundary parallelism") {
    HyperbolicPiece P = fixtures::figure_eight();
    auto in = P.boundary_parallelism(w("x^2"), 1);
    REQUIRE(in.size() == 1);
    CHECK(in.elements[0].coords == Vec2{2, 0});
    auto planted = P.boundary_parallelism(conj3(w("y x"), w("x")), 1);
    REQUIRE(planted.size() == 1);
    CHECK(planted.elements[0].coords == Vec2{1, 0});
    Word g = planted.elements[0].witness;
    CHECK(P.word_problem(concat(conj3(g, w("x")), inverse(conj3(w("y x"), w("x"))))));
    auto lox = P.boundary_parallelism(w("x y^-1"), 1);
    CHECK(lox.empty());
    CHECK(lox.exact);
}

TEST_CASE("two cosets") {
    HyperbolicPiece P = fixtures::figure_eight();
    Word v = w("x y^-1");
    auto id = P.two_cosets(v, v, 1, 1);
    REQUIRE(id.kind == CosetSolutionSet::Kind::Singleton);
    CHECK(id.base_c == Vec2{0, 0});
    CHECK(id.base_c2 == Vec2{0, 0});
    Word u = concat({&static_cast<const Word&>(w("x")), &v, &static_cast<const Word&>(w("x^-2"))});
    auto s = P.two_cosets(u, v, 1, 1);
    REQUIRE(s.kind == CosetSolutionSet::Kind::Singleton);
    CHECK(s.base_c == Vec2{1, 0});
    CHECK(s.base_c2 == Vec2{-2, 0});
    auto none = P.two_cosets(w("y"), v, 1, 1);
    CHECK(none.is_empty());
}

TEST_CASE("conjugacy") {
    HyperbolicPiece P = fixtures::figure_eight();
    Word v = w("x y^-1 x");
    auto id = P.conjugacy(v, v);
    REQUIRE(id.witness);
    CHECK(id.witness->empty());
    Word g = w("y x^-1 y");
    auto r = P.conjugacy(conj3(g, v), v);
    REQUIRE(r.witness);
    CHECK(P.word_problem(concat(conj3(*r.witness, v), inverse(conj3(g, v)))));
    auto neg = P.conjugacy(w("x y"), w("x y^-1 x y"));
    CHECK_FALSE(neg.witness);
    CHECK(neg.exact);
}

TEST_CASE("bounded search agrees with exact free group computation") {
    // Sanov's faithful representation of F2; the peripheral subgroup <a> is cyclic.
    poly::PolyRing Z;
    GeneratorId a("a"), b("b");
    MatrixRep rep{Z, {}, false};
    rep.generators[a] = {Z.from_int(1), Z.from_int(2), Z.zero(), Z.from_int(1)};
    rep.generators[b] = {Z.from_int(1), Z.zero(), Z.from_int(2), Z.from_int(1)};
    Presentation pres{{a, b}, {}};
    auto is_equal = [&](const Word& x, const Word& y) { return free_reduce(concat(x, inverse(y))).empty(); };
    std::mt19937_64 rng(31);
    Alphabet ab{a, b};
    for (int i = 0; i < 60; ++i) {
        Word u = free_reduce(fixtures::random_word(rng, ab, 6, 1));
        Word v = i % 2 ? oracle::plant_conjugate(u, free_reduce(fixtures::random_word(rng, ab, 3))) :
                         free_reduce(fixtures::random_word(rng, ab, 6, 1));
        bool exact = cyclic_reduce(u).word == cyclic_reduce(v).word;
        oracle::GroupHandle H{ab, [&](const Word& x) { return rep.is_identity(rep.eval(x)); }, {}};
        auto found = oracle::brute_conjugator(u, v, H, 6);
        if (found) CHECK(is_equal(concat({&*found, &v, &static_cast<const Word&>(inverse(*found))}), u));
        CHECK(found.has_value() == exact);
    }
    (void)pres;
}
