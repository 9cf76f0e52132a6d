#include "conj/free_product.hpp"

#include <algorithm>
#include <cstdlib>

namespace gmc::freeprod {

FreeProductOfCyclics::FreeProductOfCyclics(std::vector<Factor> factors) : factors_(std::move(factors)) {
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const Factor& f = factors_[i];
        if (f.order < 0 || f.order == 1)
            throw DomainError("factor " + f.gen.full() + " has order " + std::to_string(f.order));
        if (!index_.emplace(f.gen, static_cast<int>(i)).second)
            throw DomainError("repeated factor generator " + f.gen.full());
    }
}

int FreeProductOfCyclics::index_of(const GeneratorId& g) const {
    auto it = index_.find(g);
    return it == index_.end() ? -1 : it->second;
}

Alphabet FreeProductOfCyclics::alphabet() const {
    Alphabet a;
    for (const Factor& f : factors_) a.insert(f.gen);
    return a;
}

namespace {

long long canon_exp(const Group& G, int f, long long e) {
    long long n = G.factor(f).order;
    if (n == 0) return e;
    e %= n;
    if (e < 0) e += n;
    return e;
}

// Append one syllable, merging and cancelling at the junction.
void push(const Group& G, std::vector<Syllable>& s, Syllable x) {
    x.exp = canon_exp(G, x.factor, x.exp);
    if (x.exp == 0) return;
    if (!s.empty() && s.back().factor == x.factor) {
        long long e = canon_exp(G, x.factor, s.back().exp + x.exp);
        if (e == 0)
            s.pop_back();
        else
            s.back().exp = e;
        return;
    }
    s.push_back(x);
}

}  // namespace

NF normalize(const Word& w, const Group& G) {
    NF out;
    for (const Letter& l : w) {
        int f = G.index_of(l.gen);
        if (f < 0) throw UnknownGenerator(l.gen.full());
        push(G, out.syl, Syllable{f, l.sign});
    }
    return out;
}

NF multiply(const Group& G, const NF& a, const NF& b) {
    NF out = a;
    for (const Syllable& s : b.syl) push(G, out.syl, s);
    return out;
}

NF multiply(const Group& G, std::initializer_list<const NF*> parts) {
    NF out;
    for (const NF* p : parts)
        for (const Syllable& s : p->syl) push(G, out.syl, s);
    return out;
}

NF inverse(const Group& G, const NF& a) {
    NF out;
    for (auto it = a.syl.rbegin(); it != a.syl.rend(); ++it) push(G, out.syl, Syllable{it->factor, -it->exp});
    return out;
}

NF power(const Group& G, const NF& a, long long k) {
    NF base = k < 0 ? inverse(G, a) : a;
    NF out;
    for (long long i = 0; i < std::llabs(k); ++i) out = multiply(G, out, base);
    return out;
}

NF generator_nf(const Group& G, int factor, long long exp) {
    NF out;
    push(G, out.syl, Syllable{factor, exp});
    return out;
}

Word to_word(const Group& G, const NF& a) {
    Word out;
    for (const Syllable& s : a.syl) {
        Word p = letter_word(G.factor(s.factor).gen, s.exp);
        out.insert(out.end(), p.begin(), p.end());
    }
    return out;
}

std::string format(const Group& G, const NF& a) { return format_word(to_word(G, a)); }

bool is_cyclically_reduced(const NF& a) {
    return a.syl.size() <= 1 || a.syl.front().factor != a.syl.back().factor;
}

CyclicForm cyclic_reduce(const Group& G, const NF& a) {
    CyclicForm out;
    out.core = a;
    // a = conj . core . conj^-1; peel x from the front, fold it into the back.
    while (!is_cyclically_reduced(out.core)) {
        Syllable x = out.core.syl.front();
        NF xn = generator_nf(G, x.factor, x.exp);
        std::vector<Syllable> rest(out.core.syl.begin() + 1, out.core.syl.end());
        NF next;
        next.syl = rest;
        push(G, next.syl, x);
        out.core = next;
        out.conjugator = multiply(G, out.conjugator, xn);
    }
    return out;
}

std::size_t cyclic_length(const Group& G, const NF& a) { return cyclic_reduce(G, a).core.length(); }

bool has_finite_order(const Group& G, const NF& a) {
    NF c = cyclic_reduce(G, a).core;
    if (c.syl.empty()) return true;
    return c.syl.size() == 1 && G.factor(c.syl[0].factor).order != 0;
}

std::optional<NF> conjugacy(const Group& G, const NF& u, const NF& v) {
    CyclicForm cu = cyclic_reduce(G, u), cv = cyclic_reduce(G, v);
    const auto& a = cu.core.syl;
    const auto& b = cv.core.syl;
    if (a.size() != b.size()) return std::nullopt;
    const std::size_t n = a.size();
    // u = cu.a.cu^-1, v = cv.b.cv^-1, a = P^-1 b P with P the first k syllables of b.
    for (std::size_t k = 0; k < std::max<std::size_t>(n, 1); ++k) {
        bool ok = true;
        for (std::size_t i = 0; i < n && ok; ++i) ok = a[i] == b[(i + k) % n];
        if (!ok) continue;
        NF P;
        P.syl.assign(b.begin(), b.begin() + static_cast<std::ptrdiff_t>(k));
        NF Pinv = inverse(G, P), cvinv = inverse(G, cv.conjugator);
        return multiply(G, {&cu.conjugator, &Pinv, &cvinv});
    }
    return std::nullopt;
}

std::optional<PowerConjugacy> conjugate_to_power(const Group& G, const NF& u, const NF& d) {
    if (has_finite_order(G, d)) throw ContractViolation("conjugate_to_power: d has finite order");
    if (u.is_identity()) return PowerConjugacy{0, NF{}};
    const std::size_t m = cyclic_length(G, d), n = cyclic_length(G, u);
    std::vector<long long> candidates;
    if (m == 1) {
        // d conjugate to g^e in an infinite factor; u must be conjugate to g^(e.alpha).
        CyclicForm cu = cyclic_reduce(G, u), cd = cyclic_reduce(G, d);
        if (cu.core.length() != 1 || cu.core.syl[0].factor != cd.core.syl[0].factor) return std::nullopt;
        long long e = cd.core.syl[0].exp, f = cu.core.syl[0].exp;
        if (f % e != 0) return std::nullopt;
        candidates.push_back(f / e);
    } else {
        if (n % m != 0) return std::nullopt;
        long long k = static_cast<long long>(n / m);
        candidates = {k, -k};
    }
    for (long long alpha : candidates) {
        if (auto w = conjugacy(G, u, power(G, d, alpha))) return PowerConjugacy{alpha, *w};
    }
    return std::nullopt;
}

long long double_coset_bound(const Group& G, const NF& u, const NF& v, const NF& d) {
    long long c = static_cast<long long>(cyclic_length(G, d));
    long long s = static_cast<long long>(u.length() + v.length());
    return (s + c - 1) / c + 2;
}

std::optional<long long> power_of(const Group& G, const NF& a, const NF& d, long long bound) {
    if (a.is_identity()) return 0;
    if (d.is_identity()) return std::nullopt;
    NF pos = d, neg = inverse(G, d), dinv = neg;
    for (long long k = 1; k <= bound; ++k) {
        if (pos == a) return k;
        if (neg == a) return -k;
        pos = multiply(G, pos, d);
        neg = multiply(G, neg, dinv);
    }
    return std::nullopt;
}

namespace {

// Order 0, 1, -1, 2, -2, ...
std::vector<long long> symmetric_range(long long bound) {
    std::vector<long long> out{0};
    for (long long k = 1; k <= bound; ++k) {
        out.push_back(k);
        out.push_back(-k);
    }
    return out;
}

}  // namespace

std::optional<DoubleCosetSolution> double_coset(const Group& G, const NF& u, const NF& v, const NF& d1,
                                                const NF& d2) {
    if (has_finite_order(G, d1) || has_finite_order(G, d2))
        throw ContractViolation("double_coset: d1 and d2 must have infinite order");
    bool same_subgroup = d1 == d2 || d1 == inverse(G, d2);
    if (same_subgroup) {
        long long b = static_cast<long long>(v.length()) + 1;
        if (power_of(G, v, d1, b))
            throw NonUniqueDoubleCoset("double_coset: v lies in the cyclic subgroup <d1> = <d2>");
    }
    const long long ba = double_coset_bound(G, u, v, d1);
    const long long bg = double_coset_bound(G, u, v, d2);
    const NF d1inv = inverse(G, d1);
    // u = d1^a v d2^g  <=>  v^-1 d1^-a u = d2^g
    const NF vinv = inverse(G, v);
    for (long long a : symmetric_range(ba)) {
        NF pa = power(G, d1inv, a);
        NF rest = multiply(G, {&vinv, &pa, &u});
        if (auto g = power_of(G, rest, d2, bg)) return DoubleCosetSolution{a, *g};
    }
    return std::nullopt;
}

NF centralizer_generator(const Group& G, const NF& v) {
    if (v.is_identity()) throw ContractViolation("centralizer_generator: identity has no cyclic centralizer");
    CyclicForm c = cyclic_reduce(G, v);
    const auto& s = c.core.syl;
    NF root;
    if (s.size() == 1) {
        root = generator_nf(G, s[0].factor, 1);
    } else {
        const std::size_t n = s.size();
        std::size_t r = n;
        for (std::size_t p = 1; p < n; ++p) {
            if (n % p != 0) continue;
            bool periodic = true;
            for (std::size_t i = p; i < n && periodic; ++i) periodic = s[i] == s[i - p];
            if (periodic) {
                r = p;
                break;
            }
        }
        root.syl.assign(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(r));
    }
    NF cinv = inverse(G, c.conjugator);
    return multiply(G, {&c.conjugator, &root, &cinv});
}

}  // namespace gmc::freeprod
