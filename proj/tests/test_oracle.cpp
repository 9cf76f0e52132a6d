#include "conj/klein.hpp"
#include "conj/oracle.hpp"
#include "doctest.h"

using namespace gmc;
using namespace gmc::oracle;

namespace {
Word w(const char* s) { return parse_word(s); }
GroupHandle klein_handle(bool with_key) {
    GroupHandle H{{GeneratorId("a"), GeneratorId("b")},
                  [](const Word& x) { return klein::klein_normalize(x) == klein::KleinNF{}; },
                  {}};
    if (with_key) H.key = [](const Word& x) { return klein::klein_normalize(x).str(); };
    return H;
}
}  // namespace

TEST_CASE("ball order") {
    auto B = ball({GeneratorId("a"), GeneratorId("b")}, 2);
    CHECK(B.size() == 1 + 4 + 12);
    CHECK(B[0].empty());
    for (std::size_t i = 1; i < B.size(); ++i) CHECK(shortlex_less(B[i - 1], B[i]));
}

TEST_CASE("brute_conjugator examples") {
    for (bool key : {false, true}) {
        GroupHandle K = klein_handle(key);
        auto id = brute_conjugator(w("a b"), w("a b"), K, 0);
        REQUIRE(id);
        CHECK(id->empty());
        auto g = brute_conjugator(w("a^2 b"), w("a^2 b^-1"), K, 1);
        REQUIRE(g);
        CHECK(*g == w("a"));
    }
    GroupHandle F{{GeneratorId("a"), GeneratorId("b")}, [](const Word& x) { return free_reduce(x).empty(); }, {}};
    CHECK_FALSE(brute_conjugator(w("a"), w("b"), F, 6));
}

TEST_CASE("rewrite_reachable examples") {
    CHECK(rewrite_reachable(w("a b"), w("a b"), {}, 0));
    CHECK(rewrite_reachable(w("x x"), Word{}, {w("x^2")}, 1));
    CHECK_FALSE(rewrite_reachable(w("a"), w("b"), {w("a^5")}, 2));
}

TEST_CASE("plant_conjugate examples") {
    CHECK(plant_conjugate(w("a b"), Word{}) == w("a b"));
    Word p = plant_conjugate(w("a^2 b^-1"), w("a"));
    CHECK(klein::klein_normalize(p) == klein::KleinNF{2, 1});
    GroupHandle K = klein_handle(true);
    Word v = w("a b^2"), g = w("b a b");
    CHECK(brute_conjugator(plant_conjugate(v, g), v, K, 3));
}
