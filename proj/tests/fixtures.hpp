#pragma once

#include <random>
#include <string>
#include <vector>

#include "conj/graph.hpp"
#include "conj/hyperbolic.hpp"
#include "conj/oracle.hpp"
#include "conj/seifert.hpp"
#include "conj/words.hpp"

namespace fixtures {

inline gmc::seifert::Invariants trefoil_invariants() {
    gmc::seifert::Invariants inv;
    inv.orientable_base = true;
    inv.genus = 0;
    inv.boundary = 1;
    inv.b = 0;
    inv.exceptional = {{2, 1}, {3, 1}};
    return inv;
}

// Non-orientable base of genus 1 with one boundary and one exceptional fiber.
inline gmc::seifert::Invariants mobius_invariants() {
    gmc::seifert::Invariants inv;
    inv.orientable_base = false;
    inv.genus = 1;
    inv.boundary = 1;
    inv.b = 0;
    inv.exceptional = {{2, 1}};
    return inv;
}

inline gmc::graph::GraphOfGroups two_trefoil() {
    using namespace gmc::graph;
    std::vector<Vertex> vs = {{"v1", make_seifert(gmc::seifert::SeifertPiece(trefoil_invariants(), "v1"))},
                              {"v2", make_seifert(gmc::seifert::SeifertPiece(trefoil_invariants(), "v2"))}};
    std::vector<Edge> es = {{"e1", 0, 1, 1, 1, gmc::Mat2{0, 1, 1, 0}}};
    return GraphOfGroups(std::move(vs), std::move(es));
}

// Figure-eight knot group with a Riley representation over Z[w], w^2+w+1 = 0.
inline gmc::hyperbolic::HyperbolicPiece figure_eight(const std::string& space = "",
                                                      gmc::hyperbolic::SearchConstants consts = {}) {
    using namespace gmc;
    poly::PolyRing R({1, 1, 1});
    GeneratorId x(space, "x"), y(space, "y");
    hyperbolic::MatrixRep rep{R, {}, true};
    rep.generators[x] = {R.from_int(1), R.from_int(1), R.zero(), R.from_int(1)};
    rep.generators[y] = {R.from_int(1), R.zero(), R.from_coeffs({0, -1}), R.from_int(1)};
    Presentation pres;
    pres.generators = {x, y};
    pres.relators = {with_space(parse_word("x^-1 y x y^-1 x y x^-1 y^-1 x y^-1"), space)};
    std::vector<hyperbolic::BoundaryBasis> cusps = {
        {with_space(parse_word("x"), space), with_space(parse_word("y x^-1 y^-1 x^2 y^-1 x^-1 y"), space)}};
    return hyperbolic::HyperbolicPiece(pres, rep, cusps, consts, space);
}

inline gmc::Word random_word(std::mt19937_64& rng, const gmc::Alphabet& alphabet, std::size_t max_len,
                             std::size_t min_len = 0) {
    std::vector<gmc::GeneratorId> gens(alphabet.begin(), alphabet.end());
    std::uniform_int_distribution<std::size_t> len(min_len, max_len);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    std::bernoulli_distribution sign(0.5);
    gmc::Word w;
    std::size_t n = len(rng);
    for (std::size_t i = 0; i < n; ++i) w.emplace_back(gens[pick(rng)], sign(rng) ? 1 : -1);
    return w;
}

}  // namespace fixtures
