#include "conj/seifert.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "conj/errors.hpp"

namespace gmc::seifert {

std::string Invariants::str() const {
    std::ostringstream os;
    os << "(" << (orientable_base ? "o" : "n") << ", g=" << genus << ", p=" << boundary << ", b=" << b << " |";
    for (auto [a, be] : exceptional) os << " (" << a << "," << be << ")";
    os << ")";
    return os.str();
}

namespace {

long long sign_of_power(long long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace

SeifertPiece::SeifertPiece(Invariants inv, std::string space) : inv_(std::move(inv)), space_(std::move(space)) {
    if (inv_.boundary < 1)
        throw DomainError("Seifert piece needs at least one boundary component (closed bases are not supported)");
    if (inv_.genus < 0) throw DomainError("Seifert piece genus must be >= 0");
    if (!inv_.orientable_base && inv_.genus < 1)
        throw DomainError("non-orientable base needs genus >= 1");
    for (auto [a, b] : inv_.exceptional) {
        if (a < 2) throw DomainError("exceptional fiber alpha must be >= 2, got " + std::to_string(a));
        if (b <= 0 || b >= a)
            throw DomainError("exceptional fiber beta must satisfy 0 < beta < alpha, got (" + std::to_string(a) +
                              "," + std::to_string(b) + ")");
    }

    std::vector<freeprod::Factor> factors;
    for (int i = 1; i <= inv_.genus; ++i) {
        a_factor_.push_back(static_cast<int>(factors.size()));
        factors.push_back({GeneratorId(space_, "a" + std::to_string(i)), 0});
        if (inv_.orientable_base) factors.push_back({GeneratorId(space_, "b" + std::to_string(i)), 0});
    }
    c_offset_ = static_cast<int>(factors.size());
    for (std::size_t j = 0; j < inv_.exceptional.size(); ++j)
        factors.push_back({GeneratorId(space_, "c" + std::to_string(j + 1)), inv_.exceptional[j].first});
    for (int k = 1; k < inv_.boundary; ++k) factors.push_back({GeneratorId(space_, "d" + std::to_string(k)), 0});
    quotient_ = freeprod::Group(std::move(factors));

    // d_p = P^-1 h^b with P the long relation product without d_p.
    Word P;
    for (int i = 1; i <= inv_.genus; ++i) {
        GeneratorId a(space_, "a" + std::to_string(i));
        if (inv_.orientable_base) {
            GeneratorId b(space_, "b" + std::to_string(i));
            P.insert(P.end(), {Letter(a, 1), Letter(b, 1), Letter(a, -1), Letter(b, -1)});
        } else {
            P.insert(P.end(), {Letter(a, 1), Letter(a, 1)});
        }
    }
    for (std::size_t j = 0; j < inv_.exceptional.size(); ++j)
        P.emplace_back(GeneratorId(space_, "c" + std::to_string(j + 1)), 1);
    for (int k = 1; k < inv_.boundary; ++k) P.emplace_back(GeneratorId(space_, "d" + std::to_string(k)), 1);
    dp_expansion_ = gmc::inverse(P);

    for (int k = 1; k < inv_.boundary; ++k)
        d_bar_.push_back(freeprod::generator_nf(quotient_, quotient_.index_of(boundary_gen(k))));
    d_bar_.push_back(freeprod::normalize(dp_expansion_, quotient_));

    alphabet_ = presentation().alphabet();
    for (const GeneratorId& g : alphabet_) gen_info_.emplace(g, parse_generator(g));
    for (const Letter& l : concat(dp_expansion_, letter_word(fiber_gen(), inv_.b)))
        dp_letters_.emplace_back(lookup(l.gen), l.sign);
    for (const Letter& l : concat(letter_word(fiber_gen(), -inv_.b), gmc::inverse(dp_expansion_)))
        dp_inverse_letters_.emplace_back(lookup(l.gen), l.sign);
}

std::string SeifertPiece::excluded_reason() const {
    const std::size_t q = inv_.exceptional.size();
    if (inv_.orientable_base && inv_.genus == 0 && inv_.boundary == 1 && q <= 1) return "solid torus";
    if (inv_.orientable_base && inv_.genus == 0 && inv_.boundary == 2 && q == 0) return "thickened torus S1 x S1 x I";
    if (!inv_.orientable_base && inv_.genus == 1 && inv_.boundary == 1 && q == 0)
        return "twisted I-bundle over the Klein bottle (use a klein piece)";
    if (inv_.orientable_base && inv_.genus == 0 && inv_.boundary == 1 && q == 2 && inv_.exceptional[0].first == 2 &&
        inv_.exceptional[1].first == 2)
        return "twisted I-bundle over the Klein bottle (use a klein piece)";
    return {};
}

std::vector<std::string> SeifertPiece::warnings() const {
    std::vector<std::string> out;
    for (std::size_t j = 0; j < inv_.exceptional.size(); ++j) {
        auto [a, b] = inv_.exceptional[j];
        if (std::gcd(a, b) != 1)
            out.push_back("exceptional fiber c" + std::to_string(j + 1) + " has gcd(alpha, beta) = " +
                          std::to_string(std::gcd(a, b)));
    }
    return out;
}

Presentation SeifertPiece::presentation() const {
    Presentation pr;
    const GeneratorId h = fiber_gen();
    auto commutator_with_h = [&](const GeneratorId& g) {
        return Word{Letter(g, 1), Letter(h, 1), Letter(g, -1), Letter(h, -1)};
    };
    Word long_rel;
    for (int i = 1; i <= inv_.genus; ++i) {
        GeneratorId a(space_, "a" + std::to_string(i));
        pr.generators.push_back(a);
        if (inv_.orientable_base) {
            GeneratorId b(space_, "b" + std::to_string(i));
            pr.generators.push_back(b);
            pr.relators.push_back(commutator_with_h(a));
            pr.relators.push_back(commutator_with_h(b));
            long_rel.insert(long_rel.end(), {Letter(a, 1), Letter(b, 1), Letter(a, -1), Letter(b, -1)});
        } else {
            pr.relators.push_back({Letter(a, 1), Letter(h, 1), Letter(a, -1), Letter(h, 1)});
            long_rel.insert(long_rel.end(), {Letter(a, 1), Letter(a, 1)});
        }
    }
    for (std::size_t j = 0; j < inv_.exceptional.size(); ++j) {
        GeneratorId c(space_, "c" + std::to_string(j + 1));
        pr.generators.push_back(c);
        pr.relators.push_back(commutator_with_h(c));
        pr.relators.push_back(concat(letter_word(c, inv_.exceptional[j].first),
                                     letter_word(h, -inv_.exceptional[j].second)));
        long_rel.emplace_back(c, 1);
    }
    for (int k = 1; k <= inv_.boundary; ++k) {
        GeneratorId d = boundary_gen(k);
        pr.generators.push_back(d);
        pr.relators.push_back(commutator_with_h(d));
        long_rel.emplace_back(d, 1);
    }
    pr.generators.push_back(h);
    Word hb = letter_word(h, -inv_.b);
    long_rel.insert(long_rel.end(), hb.begin(), hb.end());
    pr.relators.push_back(long_rel);
    return pr;
}

SeifertPiece::GenInfo SeifertPiece::lookup(const GeneratorId& g) const {
    auto it = gen_info_.find(g);
    if (it == gen_info_.end()) throw UnknownGenerator(g.full());
    return it->second;
}

SeifertPiece::GenInfo SeifertPiece::parse_generator(const GeneratorId& g) const {
    if (g.space != space_ || g.name.empty()) throw UnknownGenerator(g.full());
    if (g.name == "h") return {Kind::H, 0, -1};
    const char k = g.name[0];
    const std::string digits = g.name.substr(1);
    if (digits.empty() || digits[0] == '0' ||
        !std::all_of(digits.begin(), digits.end(), [](unsigned char ch) { return std::isdigit(ch); }) ||
        digits.size() > 6)
        throw UnknownGenerator(g.full());
    const int idx = std::stoi(digits);
    if (k == 'd') {
        if (idx > inv_.boundary) throw UnknownGenerator(g.full());
        if (idx == inv_.boundary) return {Kind::D, idx, -1};
        return {Kind::D, idx, quotient_.index_of(g)};
    }
    Kind kind;
    switch (k) {
        case 'a': kind = Kind::A; break;
        case 'b': kind = Kind::B; break;
        case 'c': kind = Kind::C; break;
        default: throw UnknownGenerator(g.full());
    }
    const int f = quotient_.index_of(g);
    if (f < 0) throw UnknownGenerator(g.full());
    return {kind, idx, f};
}

void SeifertPiece::push_syllable(std::vector<freeprod::Syllable>& s, freeprod::Syllable x, long long& carry) const {
    // Right multiplication by a single letter x = g^(+-1) of factor x.factor.
    const long long n = quotient_.factor(x.factor).order;
    const long long beta =
        n == 0 ? 0 : inv_.exceptional[static_cast<std::size_t>(x.factor - c_offset_)].second;
    carry = 0;
    if (!s.empty() && s.back().factor == x.factor) {
        long long e = s.back().exp + x.exp;
        if (n != 0 && e == n) {
            carry = beta;
            e = 0;
        }
        if (e == 0)
            s.pop_back();
        else
            s.back().exp = e;
        return;
    }
    if (n != 0 && x.exp < 0) {
        // c^-1 = c^(alpha-1) h^-beta
        s.push_back({x.factor, n - 1});
        carry = -beta;
        return;
    }
    s.push_back(x);
}

void SeifertPiece::push_letter(SeifertNF& acc, const GenInfo& info, int sign) const {
    if (info.kind == Kind::H) {
        acc.fiber += sign;
        return;
    }
    if (info.factor < 0) {
        // d_p = P^-1 h^b
        for (const auto& [g, s] : sign > 0 ? dp_letters_ : dp_inverse_letters_) push_letter(acc, g, s);
        return;
    }
    const long long eps = (!inv_.orientable_base && info.kind == Kind::A) ? -1 : 1;
    long long carry = 0;
    push_syllable(acc.quotient.syl, {info.factor, sign}, carry);
    acc.fiber = eps * acc.fiber + carry;
}

SeifertNF SeifertPiece::normalize(const Word& w) const {
    SeifertNF acc;
    for (const Letter& l : w) push_letter(acc, lookup(l.gen), l.sign);
    return acc;
}

Word SeifertPiece::to_word(const SeifertNF& x) const { return concat(lift(x.quotient), letter_word(fiber_gen(), x.fiber)); }

SeifertNF SeifertPiece::multiply(const SeifertNF& x, const SeifertNF& y) const {
    return normalize(concat(to_word(x), to_word(y)));
}

SeifertNF SeifertPiece::inverse(const SeifertNF& x) const { return normalize(gmc::inverse(to_word(x))); }

std::string SeifertPiece::key(const Word& w) const {
    SeifertNF n = normalize(w);
    std::string out;
    for (const auto& s : n.quotient.syl) out += std::to_string(s.factor) + ":" + std::to_string(s.exp) + " ";
    return out + "|" + std::to_string(n.fiber);
}

int SeifertPiece::epsilon(const freeprod::NF& q) const {
    if (inv_.orientable_base) return 1;
    long long e = 1;
    for (const auto& s : q.syl)
        if (std::find(a_factor_.begin(), a_factor_.end(), s.factor) != a_factor_.end()) e *= sign_of_power(s.exp);
    return static_cast<int>(e);
}

int SeifertPiece::canonical_subgroup(const Word& w) const { return epsilon(normalize(w).quotient); }

void SeifertPiece::check_boundary(int k) const {
    if (k < 1 || k > inv_.boundary)
        throw ContractViolation("boundary index " + std::to_string(k) + " out of range 1.." +
                                std::to_string(inv_.boundary));
}

const freeprod::NF& SeifertPiece::boundary_quotient(int k) const {
    check_boundary(k);
    return d_bar_[static_cast<std::size_t>(k - 1)];
}

Word SeifertPiece::boundary_word(int k, const Vec2& coords) const {
    check_boundary(k);
    return concat(letter_word(boundary_gen(k), coords.x), letter_word(fiber_gen(), coords.y));
}

std::optional<Vec2> SeifertPiece::boundary_membership(const Word& w, int k) const {
    check_boundary(k);
    const SeifertNF n = normalize(w);
    const freeprod::NF& d = boundary_quotient(k);
    long long alpha = 0;
    if (!n.quotient.is_identity()) {
        long long bound = static_cast<long long>(n.quotient.length() / d.length()) + 1;
        auto a = freeprod::power_of(quotient_, n.quotient, d, bound);
        if (!a) return std::nullopt;
        alpha = *a;
    }
    SeifertNF rest = normalize(concat(w, letter_word(boundary_gen(k), -alpha)));
    if (!rest.quotient.is_identity()) throw ContractViolation("boundary_membership: residue outside the fiber");
    return Vec2{alpha, rest.fiber};
}

ParallelismSet SeifertPiece::boundary_parallelism(const Word& w, int k) const {
    check_boundary(k);
    ParallelismSet out;
    const SeifertNF n = normalize(w);
    auto add = [&](Vec2 c, Word witness) {
        for (const auto& e : out.elements)
            if (e.coords == c) return;
        out.elements.push_back({k, c, free_reduce(witness)});
    };
    if (n.quotient.is_identity()) {
        add({0, n.fiber}, {});
        if (!inv_.orientable_base && n.fiber != 0) add({0, -n.fiber}, letter_word(GeneratorId(space_, "a1")));
        return out;
    }
    const freeprod::NF& d = boundary_quotient(k);
    if (freeprod::has_finite_order(quotient_, d))
        throw DomainError("boundary parallelism on an excluded piece (" + excluded_reason() + ")");
    auto cp = freeprod::conjugate_to_power(quotient_, n.quotient, d);
    if (!cp) return out;
    for (long long alpha : {cp->alpha, -cp->alpha}) {
        auto xq = freeprod::conjugacy(quotient_, n.quotient, freeprod::power(quotient_, d, alpha));
        if (!xq) continue;
        const Word x = lift(*xq);
        const Word dk = letter_word(boundary_gen(k), alpha);
        // x d^alpha x^-1 = s(q) h^f0, so x d^alpha h^beta x^-1 = w iff f = f0 + eps(x) beta
        const SeifertNF img = normalize(concat(concat(x, dk), gmc::inverse(x)));
        const long long beta = epsilon(*xq) * (n.fiber - img.fiber);
        const Vec2 c{alpha, beta};
        add(c, x);
        // Other elements of T_k reached through the centralizer of d^alpha.
        const freeprod::NF zq = freeprod::centralizer_generator(quotient_, freeprod::power(quotient_, d, alpha));
        const Word z = lift(zq);
        const Word cw = boundary_word(k, c);
        const SeifertNF moved = normalize(concat(concat(z, cw), gmc::inverse(z)));
        if (auto mc = boundary_membership(to_word(moved), k)) add(*mc, concat(x, gmc::inverse(z)));
    }
    for (const auto& e : out.elements) {
        Word chk = concat(concat(e.witness, boundary_word(k, e.coords)), gmc::inverse(e.witness));
        if (!word_problem(concat(chk, gmc::inverse(w))))
            throw ContractViolation("boundary_parallelism: witness failed verification");
    }
    return out;
}

CosetSolutionSet SeifertPiece::two_cosets(const Word& u, const Word& v, int k1, int k2) const {
    check_boundary(k1);
    check_boundary(k2);
    CosetSolutionSet s = CosetSolutionSet::empty(k1, k2);
    if (k1 == k2) {
        auto vc = boundary_membership(v, k1);
        if (vc) {
            auto uc = boundary_membership(u, k1);
            if (!uc) return s;
            // (u v^-1 t, t^-1), t in T
            s.kind = CosetSolutionSet::Kind::FullCoset;
            s.base_c = *uc - *vc;
            s.base_c2 = {0, 0};
            s.generators = {{{1, 0}, {-1, 0}}, {{0, 1}, {0, -1}}};
            return s;
        }
    }
    const SeifertNF nu = normalize(u), nv = normalize(v);
    const freeprod::NF &d1 = boundary_quotient(k1), &d2 = boundary_quotient(k2);
    auto dc = freeprod::double_coset(quotient_, nu.quotient, nv.quotient, d1, d2);
    if (!dc) return s;
    const Word lhs = concat(concat(letter_word(boundary_gen(k1), dc->alpha), v), letter_word(boundary_gen(k2), dc->gamma));
    const SeifertNF diff = normalize(concat(gmc::inverse(lhs), u));
    if (!diff.quotient.is_identity()) throw ContractViolation("two_cosets: double coset residue outside the fiber");
    // d1^a h^n v d2^g h^m = d1^a v d2^g h^(eps(v) n + m)
    const int eps = epsilon(nv.quotient);
    s.kind = CosetSolutionSet::Kind::HLine;
    s.base_c = {dc->alpha, 0};
    s.base_c2 = {dc->gamma, diff.fiber};
    s.generators = {{{0, 1}, {0, -eps}}};
    s.epsilon = eps;
    return s;
}

std::optional<Word> SeifertPiece::conjugacy(const Word& u, const Word& v) const {
    const SeifertNF nu = normalize(u), nv = normalize(v);
    auto verified = [&](Word g) -> std::optional<Word> {
        g = free_reduce(g);
        Word chk = concat(concat(g, v), concat(gmc::inverse(g), gmc::inverse(u)));
        if (!word_problem(chk)) throw ContractViolation("seifert conjugacy: witness failed verification");
        return g;
    };
    if (nv.quotient.is_identity()) {
        if (!nu.quotient.is_identity()) return std::nullopt;
        if (nu.fiber == nv.fiber) return verified({});
        if (!inv_.orientable_base && nu.fiber == -nv.fiber) return verified(letter_word(GeneratorId(space_, "a1")));
        return std::nullopt;
    }
    auto aq = freeprod::conjugacy(quotient_, nu.quotient, nv.quotient);
    if (!aq) return std::nullopt;
    const Word a = lift(*aq);
    // u = a v a^-1 h^t
    const SeifertNF ava = normalize(concat(concat(a, v), gmc::inverse(a)));
    const long long t = nu.fiber - ava.fiber;
    // Conjugators of v modulo <h> are lifts of <x>; the shift s(z) with
    // z v z^-1 = v h^s(z) is a cocycle: s(z1 z2) = s(z1) + eps(z1) s(z2).
    const long long target = epsilon(*aq) * t;
    const freeprod::NF xq = freeprod::centralizer_generator(quotient_, nv.quotient);
    const Word x = lift(xq);
    const SeifertNF sx = normalize(concat(gmc::inverse(v), concat(concat(x, v), gmc::inverse(x))));
    if (!sx.quotient.is_identity()) throw ContractViolation("seifert conjugacy: centralizer lift is not central mod h");
    const long long n1 = sx.fiber;
    const long long e = epsilon(nv.quotient) - 1;  // s(h)
    const GeneratorId h = fiber_gen();
    Word z;
    if (epsilon(xq) == 1) {
        long long sa = 0, sb = 0;
        long long g = detail::egcd(n1, e, sa, sb);
        if (g == 0) {
            if (target != 0) return std::nullopt;
        } else {
            if (target % g != 0) return std::nullopt;
            z = concat(power(x, sa * (target / g)), letter_word(h, sb * (target / g)));
        }
    } else {
        // s(x^k h^j) = s(x^k) + eps(x^k) j e with s(x^k) in {0, n1}
        if (e == 0) {
            if (target == 0) {
            } else if (target == n1) {
                z = x;
            } else {
                return std::nullopt;
            }
        } else {
            if (target % e == 0) {
                z = letter_word(h, target / e);
            } else if ((n1 - target) % e == 0) {
                z = concat(x, letter_word(h, (n1 - target) / e));
            } else {
                return std::nullopt;
            }
        }
    }
    return verified(concat(a, z));
}

}  // namespace gmc::seifert
