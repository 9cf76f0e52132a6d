#include "conj/hyperbolic.hpp"

#include <cstdlib>

#include "conj/errors.hpp"
#include "conj/oracle.hpp"

namespace gmc::hyperbolic {

using poly::Int;
using poly::Mat;

void SearchConstants::check() const {
    if (k_num <= 0 || k_den <= 0) throw DomainError("search constant K must be positive");
    if (c_bcp <= 0) throw DomainError("search constant C must be positive");
    if (r_conj == 0) throw DomainError("search radius R must be positive");
}

Mat MatrixRep::eval(const Word& w) const {
    Mat acc = poly::mat_identity(ring);
    for (const Letter& l : w) {
        auto it = generators.find(l.gen);
        if (it == generators.end()) throw UnknownGenerator(l.gen.full());
        acc = poly::mat_mul(ring, acc, l.sign > 0 ? it->second : poly::mat_inverse(ring, it->second));
    }
    return acc;
}

bool MatrixRep::is_identity(const Mat& m) const { return equal(m, poly::mat_identity(ring)); }

namespace {

bool constant_trace(const poly::PolyRing& R, const Mat& m, Int& t) { return R.is_constant(poly::mat_trace(R, m), t); }

std::vector<Int> flatten(const Mat& m) {
    std::vector<Int> out;
    for (const auto& e : m) out.insert(out.end(), e.c.begin(), e.c.end());
    return out;
}

bool fits(const Int& x) { return boost::multiprecision::abs(x) < Int(1LL << 62); }

}  // namespace

HyperbolicPiece::HyperbolicPiece(Presentation pres, MatrixRep rep, std::vector<BoundaryBasis> boundaries,
                                 SearchConstants consts, std::string space)
    : pres_(std::move(pres)),
      alphabet_(pres_.alphabet()),
      rep_(std::move(rep)),
      boundaries_(std::move(boundaries)),
      consts_(consts),
      space_(std::move(space)) {
    consts_.check();
    pres_.check();
    const auto& R = rep_.ring;
    for (const GeneratorId& g : pres_.generators) {
        auto it = rep_.generators.find(g);
        if (it == rep_.generators.end()) throw DomainError("generator " + g.full() + " has no matrix");
        poly::mat_inverse(R, it->second);
    }
    for (const auto& [g, m] : rep_.generators)
        if (!pres_.alphabet().count(g)) throw DomainError("matrix given for undeclared generator " + g.full());
    for (std::size_t i = 0; i < pres_.relators.size(); ++i) {
        if (!word_problem(pres_.relators[i]))
            throw DomainError("relator " + std::to_string(i + 1) + " (" + format_word(pres_.relators[i]) +
                              ") does not evaluate to the identity");
    }
    if (boundaries_.empty()) throw DomainError("hyperbolic piece needs at least one boundary subgroup");
    for (std::size_t k = 0; k < boundaries_.size(); ++k) {
        const std::string tag = "boundary " + std::to_string(k + 1) + ": ";
        Cusp c;
        c.b1 = rep_.eval(boundaries_[k].first);
        c.b2 = rep_.eval(boundaries_[k].second);
        c.len1 = std::max<std::size_t>(1, free_reduce(boundaries_[k].first).size());
        c.len2 = std::max<std::size_t>(1, free_reduce(boundaries_[k].second).size());
        Int t1, t2;
        if (!constant_trace(R, c.b1, t1) || !constant_trace(R, c.b2, t2) || (t1 != 2 && t1 != -2) ||
            (t2 != 2 && t2 != -2))
            throw DomainError(tag + "basis elements must be parabolic (trace +-2)");
        if (rep_.is_identity(c.b1) || rep_.is_identity(c.b2)) throw DomainError(tag + "basis element is trivial");
        if (poly::mat_mul(R, c.b1, c.b2) != poly::mat_mul(R, c.b2, c.b1))
            throw DomainError(tag + "basis elements do not commute");
        c.s1 = t1 == 2 ? 1 : -1;
        c.s2 = t2 == 2 ? 1 : -1;
        c.n1 = poly::mat_sub(R, poly::mat_scale(R, c.b1, c.s1), poly::mat_identity(R));
        c.n2 = poly::mat_sub(R, poly::mat_scale(R, c.b2, c.s2), poly::mat_identity(R));
        auto a = flatten(c.n1), b = flatten(c.n2);
        bool independent = false;
        for (std::size_t i = 0; i < a.size() && !independent; ++i)
            for (std::size_t j = i + 1; j < a.size() && !independent; ++j) independent = a[i] * b[j] != a[j] * b[i];
        if (!independent) throw DomainError(tag + "basis elements are not independent");
        cusps_.push_back(std::move(c));
    }
}

void HyperbolicPiece::check_boundary(int k) const {
    if (k < 1 || k > boundary_count())
        throw ContractViolation("boundary index " + std::to_string(k) + " out of range 1.." +
                                std::to_string(boundary_count()));
}

const BoundaryBasis& HyperbolicPiece::boundary(int k) const {
    check_boundary(k);
    return boundaries_[static_cast<std::size_t>(k - 1)];
}

Word HyperbolicPiece::boundary_word(int k, const Vec2& c) const {
    const BoundaryBasis& b = boundary(k);
    return concat(power(b.first, c.x), power(b.second, c.y));
}

Mat HyperbolicPiece::boundary_matrix(int k, const Vec2& c) const {
    const Cusp& cu = cusps_[static_cast<std::size_t>(k - 1)];
    const auto& R = rep_.ring;
    Mat m = poly::mat_add(R, poly::mat_identity(R),
                          poly::mat_add(R, poly::mat_scale(R, cu.n1, c.x), poly::mat_scale(R, cu.n2, c.y)));
    int sign = 1;
    if (cu.s1 < 0 && (c.x % 2 != 0)) sign = -sign;
    if (cu.s2 < 0 && (c.y % 2 != 0)) sign = -sign;
    return sign > 0 ? m : poly::mat_neg(R, m);
}

std::optional<Vec2> HyperbolicPiece::coords_of(const Mat& m, int k) const {
    const Cusp& cu = cusps_[static_cast<std::size_t>(k - 1)];
    const auto& R = rep_.ring;
    Int t;
    if (!constant_trace(R, m, t) || (t != 2 && t != -2)) return std::nullopt;
    // Commuting with a nontrivial parabolic of the cusp characterizes T.
    if (poly::mat_mul(R, m, cu.b1) != poly::mat_mul(R, cu.b1, m)) return std::nullopt;
    const int s = t == 2 ? 1 : -1;
    const Mat d = poly::mat_sub(R, poly::mat_scale(R, m, s), poly::mat_identity(R));
    const auto a = flatten(cu.n1), b = flatten(cu.n2), r = flatten(d);
    for (std::size_t i = 0; i < a.size(); ++i) {
        for (std::size_t j = i + 1; j < a.size(); ++j) {
            Int det = a[i] * b[j] - a[j] * b[i];
            if (det == 0) continue;
            Int nx = r[i] * b[j] - r[j] * b[i];
            Int ny = a[i] * r[j] - a[j] * r[i];
            if (nx % det != 0 || ny % det != 0) return std::nullopt;
            Int x = nx / det, y = ny / det;
            for (std::size_t e = 0; e < a.size(); ++e)
                if (x * a[e] + y * b[e] != r[e]) return std::nullopt;
            if (!fits(x) || !fits(y)) return std::nullopt;
            Vec2 c{x.convert_to<long long>(), y.convert_to<long long>()};
            if (!rep_.equal(boundary_matrix(k, c), m)) return std::nullopt;
            return c;
        }
    }
    return std::nullopt;
}

std::optional<Vec2> HyperbolicPiece::boundary_membership(const Word& w, int k) const {
    check_boundary(k);
    return coords_of(rep_.eval(w), k);
}

long long HyperbolicPiece::parallelism_bound(const Word& w) const {
    const long long lg = static_cast<long long>(free_reduce(w).size());
    return lg * consts_.k_den / consts_.k_num;
}

long long HyperbolicPiece::coset_bound(const Word& u, const Word& v) const {
    const long long lu = static_cast<long long>(free_reduce(u).size());
    const long long lv = static_cast<long long>(free_reduce(v).size());
    return consts_.c_bcp * (2 * (lu + lv) + 1);
}

ParallelismSet HyperbolicPiece::boundary_parallelism(const Word& w, int k) const {
    check_boundary(k);
    ParallelismSet out;
    const auto& R = rep_.ring;
    const Mat W = rep_.eval(w);
    if (auto c = coords_of(W, k)) {
        out.elements.push_back({k, *c, {}});
        return out;
    }
    Int t;
    if (!constant_trace(R, W, t) || (t != 2 && t != -2)) return out;  // not parabolic: exact
    const long long bound = parallelism_bound(w);
    for (const Word& g : oracle::ball(alphabet(), consts_.r_conj)) {
        const Mat G = rep_.eval(g);
        const Mat X = poly::mat_mul(R, poly::mat_inverse(R, G), poly::mat_mul(R, W, G));
        auto c = coords_of(X, k);
        if (!c || std::llabs(c->x) + std::llabs(c->y) > bound) continue;
        const Word cw = boundary_word(k, *c);
        Word gi = inverse(g), wi = inverse(w);
        if (!word_problem(concat({&g, &cw, &gi, &wi})))
            throw ContractViolation("hyperbolic parallelism: witness failed verification");
        out.elements.push_back({k, *c, g});
        return out;
    }
    out.exact = false;
    return out;
}

CosetSolutionSet HyperbolicPiece::two_cosets(const Word& u, const Word& v, int k1, int k2) const {
    check_boundary(k1);
    check_boundary(k2);
    const auto& R = rep_.ring;
    CosetSolutionSet s = CosetSolutionSet::empty(k1, k2);
    if (k1 == k2) {
        if (auto vc = boundary_membership(v, k1)) {
            auto uc = boundary_membership(u, k1);
            if (!uc) return s;
            s.kind = CosetSolutionSet::Kind::FullCoset;
            s.base_c = *uc - *vc;
            s.base_c2 = {0, 0};
            s.generators = {{{1, 0}, {-1, 0}}, {{0, 1}, {0, -1}}};
            return s;
        }
    }
    const Cusp& cu = cusps_[static_cast<std::size_t>(k1 - 1)];
    const Mat U = rep_.eval(u), Vinv = poly::mat_inverse(R, rep_.eval(v));
    const long long L = coset_bound(u, v);
    const long long l1 = static_cast<long long>(cu.len1), l2 = static_cast<long long>(cu.len2);
    auto within = [&](long long x, long long y) { return std::llabs(x) * l1 + std::llabs(y) * l2 <= L; };
    auto attempt = [&](long long x, long long y) -> bool {
        if (!within(x, y)) return false;
        const Vec2 c1{x, y};
        const Mat C1inv = poly::mat_inverse(R, boundary_matrix(k1, c1));
        const Mat C2 = poly::mat_mul(R, Vinv, poly::mat_mul(R, C1inv, U));
        auto c2 = coords_of(C2, k2);
        if (!c2) return false;
        s = CosetSolutionSet::singleton(k1, k2, c1, *c2);
        return true;
    };
    const long long rmax = L;  // each |coordinate| is at most L
    for (long long r = 0; r <= rmax; ++r) {
        // Lattice points with max(|x|,|y|) == r in lexicographic order.
        for (long long x = -r; x <= r; ++x) {
            if (std::llabs(x) == r) {
                for (long long y = -r; y <= r; ++y)
                    if (attempt(x, y)) return s;
            } else {
                if (attempt(x, -r)) return s;
                if (r != 0 && attempt(x, r)) return s;
            }
        }
    }
    s.exact = false;
    return s;
}

HypConjugacy HyperbolicPiece::conjugacy(const Word& u, const Word& v) const {
    const auto& R = rep_.ring;
    const Word vi = inverse(v);
    if (word_problem(concat(u, vi))) return {Word{}, true};
    // Conjugation preserves the trace, up to sign in PSL.
    const poly::Elem tu = poly::mat_trace(R, rep_.eval(u)), tv = poly::mat_trace(R, rep_.eval(v));
    if (!(tu == tv || (rep_.projective && tu == R.neg(tv)))) return {std::nullopt, true};
    oracle::GroupHandle G;
    G.alphabet = alphabet();
    G.word_problem = [this](const Word& w) { return word_problem(w); };
    G.key = [this](const Word& w) { return key(w); };
    auto g = oracle::brute_conjugator(u, v, G, consts_.r_conj);
    if (!g) return {std::nullopt, false};
    Word gi = inverse(*g), ui = inverse(u);
    if (!word_problem(concat({&*g, &v, &gi, &ui})))
        throw ContractViolation("hyperbolic conjugacy: witness failed verification");
    return {*g, true};
}

}  // namespace gmc::hyperbolic
