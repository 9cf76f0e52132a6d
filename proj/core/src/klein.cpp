#include "conj/klein.hpp"

#include <cstdlib>

#include "conj/errors.hpp"

namespace gmc::klein {

namespace {
long long parity_sign(long long n) { return (n % 2 == 0) ? 1 : -1; }
}  // namespace

KleinNF multiply(const KleinNF& x, const KleinNF& y) { return {x.n + y.n, parity_sign(y.n) * x.m + y.m}; }

KleinNF inverse(const KleinNF& x) { return {-x.n, -parity_sign(x.n) * x.m}; }

KleinNF conjugate(const KleinNF& g, const KleinNF& x) { return multiply(multiply(g, x), inverse(g)); }

KleinNF klein_normalize(const Word& w) {
    KleinNF out;
    for (const Letter& l : w) {
        if (l.gen.name == "a")
            out = multiply(out, {l.sign, 0});
        else if (l.gen.name == "b")
            out = multiply(out, {0, l.sign});
        else
            throw UnknownGenerator(l.gen.full());
    }
    return out;
}

Word to_word(const KleinNF& x, const std::string& space) {
    return concat(letter_word(GeneratorId(space, "a"), x.n), letter_word(GeneratorId(space, "b"), x.m));
}

KleinNF from_boundary(const Vec2& pq) { return {2 * pq.x, pq.y}; }

std::optional<KleinNF> klein_conjugacy(const KleinNF& u, const KleinNF& v) {
    if (u.n != v.n) return std::nullopt;
    const bool odd = (u.n % 2) != 0;
    const bool conj = u.m == v.m || u.m == -v.m || (odd && (u.m - v.m) % 2 == 0);
    if (!conj) return std::nullopt;
    // Scan b^k then a b^k for k = 0, 1, -1, 2, -2, ...
    const long long bound = std::llabs(u.m) + std::llabs(v.m) + 1;
    for (long long i = 0; i <= 2 * bound; ++i) {
        long long k = (i == 0) ? 0 : ((i % 2 == 1) ? (i + 1) / 2 : -(i / 2));
        KleinNF g1{0, k};
        if (conjugate(g1, v) == u) return g1;
        KleinNF g2 = multiply({1, 0}, g1);
        if (conjugate(g2, v) == u) return g2;
    }
    throw ContractViolation("klein_conjugacy: witness scan exhausted");
}

std::optional<Vec2> klein_boundary_membership(const KleinNF& u) {
    if (u.n % 2 != 0) return std::nullopt;
    return Vec2{u.n / 2, u.m};
}

ParallelismSet klein_boundary_parallelism(const KleinNF& u, const std::string& space) {
    ParallelismSet out;
    auto pq = klein_boundary_membership(u);
    if (!pq) return out;  // odd n never enters the index two subgroup
    out.elements.push_back({1, *pq, {}});
    if (pq->y != 0) {
        // a . (a^n b^-m) . a^-1 = a^n b^m
        out.elements.push_back({1, Vec2{pq->x, -pq->y}, letter_word(GeneratorId(space, "a"))});
    }
    return out;
}

CosetSolutionSet klein_two_cosets(const KleinNF& u, const KleinNF& v) {
    const bool v_in = v.n % 2 == 0;
    const bool u_in = u.n % 2 == 0;
    CosetSolutionSet s = CosetSolutionSet::empty(1, 1);
    KleinNF w = multiply(u, inverse(v));
    if (v_in) {
        if (!u_in) return s;
        // (u v^-1 t, t^-1), t in T
        s.kind = CosetSolutionSet::Kind::FullCoset;
        s.base_c = *klein_boundary_membership(w);
        s.base_c2 = {0, 0};
        s.generators = {{{1, 0}, {-1, 0}}, {{0, 1}, {0, -1}}};
        return s;
    }
    auto k0 = klein_boundary_membership(w);
    if (!k0) return s;
    // (u v^-1 a^2n b^p, a^-2n b^p)
    s.kind = CosetSolutionSet::Kind::KleinFamily;
    s.base_c = *k0;
    s.base_c2 = {0, 0};
    s.generators = {{{1, 0}, {-1, 0}}, {{0, 1}, {0, 1}}};
    return s;
}

}  // namespace gmc::klein
