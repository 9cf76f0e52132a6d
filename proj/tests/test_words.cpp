#include <random>

#include "conj/errors.hpp"
#include "conj/words.hpp"
#include "doctest.h"
#include "fixtures.hpp"

using namespace gmc;

namespace {
Word w(const char* s) { return parse_word(s); }
}

TEST_CASE("free_reduce examples") {
    CHECK(free_reduce(w("a b b^-1")) == w("a"));
    CHECK(free_reduce(Word{}).empty());
    CHECK(free_reduce(w("a b a^-1 a b^-1")) == w("a"));
}

TEST_CASE("cyclic_reduce examples") {
    auto r = cyclic_reduce(w("a b a^-1"));
    CHECK(r.word.letters == w("b"));
    CHECK(r.conjugator == w("a"));
    r = cyclic_reduce(w("b"));
    CHECK(r.word.letters == w("b"));
    CHECK(r.conjugator.empty());
    r = cyclic_reduce(w("a a b a^-1 a^-1"));
    CHECK(r.word.letters == w("b"));
    CHECK(r.conjugator == w("a a"));
}

TEST_CASE("parse_word examples and errors") {
    Word x = w("a^2 b^-1");
    REQUIRE(x.size() == 3);
    CHECK(x[0] == Letter(GeneratorId("a"), 1));
    CHECK(x[1] == Letter(GeneratorId("a"), 1));
    CHECK(x[2] == Letter(GeneratorId("b"), -1));
    CHECK(w("").empty());
    CHECK(parse_word("c1^3", Alphabet{GeneratorId("c1")}).size() == 3);
    CHECK_THROWS_AS(parse_word("c2", Alphabet{GeneratorId("c1")}), UnknownGenerator);
    CHECK_THROWS_AS(parse_word("a^0"), ParseError);
    CHECK_THROWS_AS(parse_word("a^"), ParseError);
    CHECK_THROWS_AS(parse_word("1a"), ParseError);
    CHECK(parse_word("v1.c1 v1.h^-1")[0].gen == GeneratorId("v1", "c1"));
}

TEST_CASE("free_reduce properties on random words") {
    std::mt19937_64 rng(7);
    Alphabet ab{GeneratorId("a"), GeneratorId("b"), GeneratorId("c")};
    for (int i = 0; i < 300; ++i) {
        Word x = fixtures::random_word(rng, ab, 64);
        Word r = free_reduce(x);
        CHECK(free_reduce(r) == r);
        CHECK(is_freely_reduced(r));
        CHECK(free_reduce(concat(x, inverse(x))).empty());
        CHECK(parse_word(format_word(r)) == r);
        for (const auto& g : ab) CHECK(exponent_sum(r, g) == exponent_sum(x, g));
    }
}

TEST_CASE("cyclic_reduce properties on random words") {
    std::mt19937_64 rng(11);
    Alphabet ab{GeneratorId("a"), GeneratorId("b")};
    for (int i = 0; i < 300; ++i) {
        Word x = fixtures::random_word(rng, ab, 24);
        auto r = cyclic_reduce(x);
        const Word& c = r.word.letters;
        CHECK(is_freely_reduced(c));
        if (c.size() > 1) CHECK_FALSE(c.front().cancels(c.back()));
        CHECK(least_rotation(c) == 0);
        CHECK(free_reduce(concat({&r.conjugator, &c, &static_cast<const Word&>(inverse(r.conjugator))})) ==
              free_reduce(x));
        // Conjugate words share the cyclic word.
        Word g = fixtures::random_word(rng, ab, 5);
        CHECK(cyclic_reduce(concat({&g, &x, &static_cast<const Word&>(inverse(g))})).word == r.word);
    }
}
