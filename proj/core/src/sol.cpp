#include "conj/sol.hpp"

#include <cstdlib>
#include <limits>

#include "conj/errors.hpp"

namespace gmc::sol {

namespace {

using BigInt = boost::multiprecision::cpp_int;

void check_delta(long long a, long long b) {
    if (a != b) throw ContractViolation("mixed quadratic fields");
}

Mat2 diag_flip() { return {1, 0, 0, -1}; }

// phi^n v with arbitrary precision; nullopt when it leaves the long long range.
std::optional<Vec2> apply_power(const Mat2& phi, long long n, const Vec2& v) {
    Mat2 m = n < 0 ? phi.unimodular_inverse() : phi;
    BigInt x = v.x, y = v.y;
    for (long long i = 0; i < std::llabs(n); ++i) {
        BigInt nx = BigInt(m.a) * x + BigInt(m.b) * y;
        BigInt ny = BigInt(m.c) * x + BigInt(m.d) * y;
        x = nx;
        y = ny;
    }
    BigInt lim = std::numeric_limits<long long>::max();
    if (abs(x) > lim || abs(y) > lim) return std::nullopt;
    return Vec2{static_cast<long long>(x), static_cast<long long>(y)};
}

}  // namespace

QuadraticFieldElement::QuadraticFieldElement(Rational x, Rational y, long long delta)
    : x_(std::move(x)), y_(std::move(y)), delta_(delta) {
    if (delta <= 0) throw ContractViolation("quadratic field needs a positive discriminant");
}

QuadraticFieldElement QuadraticFieldElement::operator+(const QuadraticFieldElement& o) const {
    check_delta(delta_, o.delta_);
    return {x_ + o.x_, y_ + o.y_, delta_};
}

QuadraticFieldElement QuadraticFieldElement::operator-(const QuadraticFieldElement& o) const {
    check_delta(delta_, o.delta_);
    return {x_ - o.x_, y_ - o.y_, delta_};
}

QuadraticFieldElement QuadraticFieldElement::operator*(const QuadraticFieldElement& o) const {
    check_delta(delta_, o.delta_);
    return {x_ * o.x_ + Rational(delta_) * y_ * o.y_, x_ * o.y_ + y_ * o.x_, delta_};
}

QuadraticFieldElement QuadraticFieldElement::operator-() const { return {-x_, -y_, delta_}; }

bool QuadraticFieldElement::operator==(const QuadraticFieldElement& o) const {
    return delta_ == o.delta_ && x_ == o.x_ && y_ == o.y_;
}

int QuadraticFieldElement::sign() const {
    int sx = x_.sign(), sy = y_.sign();
    if (sy == 0) return sx;
    if (sx == 0 || sx == sy) return sx == 0 ? sy : sx;
    // x and y sqrt(delta) have opposite signs: compare squares.
    Rational diff = x_ * x_ - Rational(delta_) * y_ * y_;
    int d = diff.sign();
    return d == 0 ? 0 : (d > 0 ? sx : sy);
}

int QuadraticFieldElement::compare_abs(const QuadraticFieldElement& o) const {
    QuadraticFieldElement a = abs(), b = o.abs();
    return (a - b).sign();
}

std::string QuadraticFieldElement::str() const {
    return x_.str() + " + " + y_.str() + "*sqrt(" + std::to_string(delta_) + ")";
}

void require_anosov(const Mat2& phi) {
    if (phi.det() != 1) throw DomainError("monodromy " + phi.str() + " is not in SL(2,Z)");
    if (std::llabs(phi.trace()) <= 2) throw DomainError("monodromy " + phi.str() + " is not Anosov");
}

std::optional<long long> eigen_power_solve(const Vec2& u, const Vec2& v, const Mat2& phi) {
    require_anosov(phi);
    if (u.is_zero() || v.is_zero()) {
        if (u.is_zero() && v.is_zero()) return 0;
        return std::nullopt;
    }
    long long tr = phi.trace();
    long long delta = tr * tr - 4;
    Rational half(1, 2);
    Rational s = tr > 0 ? half : -half;
    // Dominant eigenvalue and its conjugate; lambda1 * lambda2 = 1.
    QuadraticFieldElement lambda1(Rational(tr) * half, s, delta);
    QuadraticFieldElement lambda2(Rational(tr) * half, -s, delta);
    // Left eigenvector (c, lambda1 - a).
    auto f1 = [&](const Vec2& w) {
        return QuadraticFieldElement(Rational(phi.c * w.x) + Rational(phi.d - phi.a) * half * w.y, s * w.y, delta);
    };
    QuadraticFieldElement target = f1(u);
    QuadraticFieldElement cur = f1(v);
    long long n = 0;
    int cmp = cur.compare_abs(target);
    if (cmp < 0) {
        while (cmp < 0) {
            cur = cur * lambda1;
            ++n;
            cmp = cur.compare_abs(target);
        }
    } else if (cmp > 0) {
        while (cmp > 0) {
            cur = cur * lambda2;
            --n;
            cmp = cur.compare_abs(target);
        }
    }
    if (cmp != 0 || !(cur == target)) return std::nullopt;
    auto image = apply_power(phi, n, v);
    if (!image || *image != u) throw ContractViolation("eigen solve disagrees with integer power");
    return n;
}

TorusBundleGroup::TorusBundleGroup(Mat2 phi) : phi_(phi) { require_anosov(phi_); }

TorusElement TorusBundleGroup::multiply(const TorusElement& a, const TorusElement& b) const {
    return {a.u + phi_.pow(a.p) * b.u, a.p + b.p};
}

TorusElement TorusBundleGroup::inverse(const TorusElement& a) const { return {-(phi_.pow(-a.p) * a.u), -a.p}; }

TorusElement TorusBundleGroup::conjugate(const TorusElement& g, const TorusElement& x) const {
    return multiply(multiply(g, x), inverse(g));
}

TorusElement TorusBundleGroup::normalize(const Word& w) const {
    TorusElement acc;
    for (const auto& l : w) {
        TorusElement g;
        if (l.gen.name == "x" && l.gen.space.empty()) {
            g.u = {1, 0};
        } else if (l.gen.name == "y" && l.gen.space.empty()) {
            g.u = {0, 1};
        } else if (l.gen.name == "t" && l.gen.space.empty()) {
            g.p = 1;
        } else {
            throw UnknownGenerator(l.gen.full());
        }
        acc = multiply(acc, l.sign > 0 ? g : inverse(g));
    }
    return acc;
}

Word TorusBundleGroup::to_word(const TorusElement& a) const {
    return concat({&static_cast<const Word&>(letter_word(GeneratorId("x"), a.u.x)),
                   &static_cast<const Word&>(letter_word(GeneratorId("y"), a.u.y)),
                   &static_cast<const Word&>(letter_word(GeneratorId("t"), a.p))});
}

Alphabet TorusBundleGroup::alphabet() const { return {GeneratorId("x"), GeneratorId("y"), GeneratorId("t")}; }

std::optional<TorusElement> torus_bundle_conjugacy(const TorusElement& g1, const TorusElement& g2,
                                                   const TorusBundleGroup& G) {
    if (g1.p != g2.p) return std::nullopt;
    const Mat2& phi = G.phi();
    // Abelianization: Z^2 / (phi - I) x Z.
    if (!solve_integer(phi - Mat2::identity(), g2.u - g1.u)) return std::nullopt;
    auto verified = [&](const TorusElement& w) {
        if (G.conjugate(w, g1) != g2) throw ContractViolation("torus witness failed verification");
        return w;
    };
    if (g1 == g2) return verified(TorusElement{});
    long long p = g1.p;
    if (p == 0) {
        auto n = eigen_power_solve(g2.u, g1.u, phi);
        if (!n) return std::nullopt;
        return verified(TorusElement{{0, 0}, *n});
    }
    Mat2 L = Mat2::identity() - phi.pow(p);
    if (L.det() == 0) throw ContractViolation("I - phi^p is singular for an Anosov phi");
    // (c, k) g1 (c, k)^-1 = (phi^k u + (I - phi^p) c, p); k beyond |p| repeats.
    for (long long k = 0; k <= std::llabs(p); ++k) {
        Vec2 rhs = g2.u - phi.pow(k) * g1.u;
        auto sol = solve_integer(L, rhs);
        if (sol) return verified(TorusElement{sol->x, k});
    }
    return std::nullopt;
}

DoubleKleinGroup::DoubleKleinGroup(Mat2 varphi) : varphi_(varphi) {
    long long e = varphi_.det();
    if (e != 1 && e != -1) throw DomainError("gluing " + varphi_.str() + " is not invertible over Z");
    varphi_inv_ = varphi_.unimodular_inverse();
    conj_[0] = Mat2::identity();
    conj_[1] = diag_flip();
    conj_[2] = varphi_ * diag_flip() * varphi_inv_;
    psi_ = conj_[1] * conj_[2];
}

Vec2 DoubleKleinGroup::to_h1(int factor, const Vec2& hi) const {
    return factor == 1 ? hi : row_times(hi, varphi_inv_);
}

void DoubleKleinGroup::push_letter(DoubleKleinElement& acc, int factor) const {
    acc.h = row_times(acc.h, conj_[factor]);
    if (!acc.letters.empty() && acc.letters.back() == factor) {
        acc.letters.pop_back();
        acc.h = acc.h + to_h1(factor, {1, 0});
    } else {
        acc.letters.push_back(factor);
    }
}

DoubleKleinElement DoubleKleinGroup::multiply(const DoubleKleinElement& a, const DoubleKleinElement& b) const {
    DoubleKleinElement acc = a;
    for (int f : b.letters) push_letter(acc, f);
    acc.h = acc.h + b.h;
    return acc;
}

DoubleKleinElement DoubleKleinGroup::inverse(const DoubleKleinElement& a) const {
    DoubleKleinElement acc{{}, -a.h};
    for (auto it = a.letters.rbegin(); it != a.letters.rend(); ++it) {
        // a_i^-1 = a_i^-2 a_i
        acc.h = acc.h - to_h1(*it, {1, 0});
        push_letter(acc, *it);
    }
    return acc;
}

DoubleKleinElement DoubleKleinGroup::conjugate(const DoubleKleinElement& g, const DoubleKleinElement& x) const {
    return multiply(multiply(g, x), inverse(g));
}

DoubleKleinElement DoubleKleinGroup::normalize(const Word& w) const {
    DoubleKleinElement acc;
    for (const auto& l : w) {
        const std::string& n = l.gen.name;
        if (!l.gen.space.empty() || n.size() != 2 || (n[0] != 'a' && n[0] != 'b') || (n[1] != '1' && n[1] != '2'))
            throw UnknownGenerator(l.gen.full());
        int f = n[1] - '0';
        if (n[0] == 'a') {
            if (l.sign < 0) acc.h = acc.h - to_h1(f, {1, 0});
            push_letter(acc, f);
        } else {
            Vec2 b = to_h1(f, {0, 1});
            acc.h = l.sign > 0 ? acc.h + b : acc.h - b;
        }
    }
    return acc;
}

Word DoubleKleinGroup::to_word(const DoubleKleinElement& a) const {
    Word out;
    for (int f : a.letters) out.push_back(Letter(GeneratorId(f == 1 ? "a1" : "a2"), 1));
    Word sq = letter_word(GeneratorId("a1"), 2 * a.h.x);
    Word b = letter_word(GeneratorId("b1"), a.h.y);
    return free_reduce(concat({&out, &sq, &b}));
}

Alphabet DoubleKleinGroup::alphabet() const {
    return {GeneratorId("a1"), GeneratorId("b1"), GeneratorId("a2"), GeneratorId("b2")};
}

DoubleKleinElement DoubleKleinGroup::from_factor(int i, const klein::KleinNF& x) const {
    if (i != 1 && i != 2) throw ContractViolation("factor index must be 1 or 2");
    DoubleKleinElement acc;
    long long n = x.n;
    // a^n = a^(2 floor(n/2)) a^(n mod 2)
    long long r = n - 2 * floor_div(n, 2);
    acc.h = to_h1(i, {floor_div(n, 2), 0});
    if (r == 1) push_letter(acc, i);
    acc.h = acc.h + to_h1(i, {0, x.m});
    return acc;
}

std::string DoubleKleinGroup::str(const DoubleKleinElement& a) const {
    std::string s;
    for (int f : a.letters) s += f == 1 ? "a1 " : "a2 ";
    return s + "h" + a.h.str();
}

std::optional<long long> row_orbit_power(const Vec2& h1, const Vec2& h2, const Mat2& M) {
    if (M.det() != 1) throw ContractViolation("orbit power needs det 1");
    if (h1 == h2) return 0;
    long long tr = M.trace();
    if (std::llabs(tr) > 2) return eigen_power_solve(h2, h1, M.transpose());
    if (std::llabs(tr) < 2) {
        // Finite order at most 6.
        Vec2 cur = h1;
        for (long long n = 1; n < 12; ++n) {
            cur = row_times(cur, M);
            if (cur == h2) return n;
        }
        return std::nullopt;
    }
    // M = s (I + N), N nilpotent: h1 M^n = s^n (h1 + n h1 N).
    long long s = tr / 2;
    Mat2 N = Mat2{s * M.a, s * M.b, s * M.c, s * M.d} - Mat2::identity();
    Vec2 g = row_times(h1, N);
    for (long long sigma : {1LL, -1LL}) {
        if (sigma == -1 && s == 1) continue;
        Vec2 r = h2 * sigma - h1;
        auto parity_ok = [&](long long n) { return s == 1 || ((n % 2 == 0) == (sigma == 1)); };
        if (g.is_zero()) {
            if (r.is_zero()) {
                long long n = sigma == 1 ? 0 : 1;
                if (parity_ok(n)) return n;
            }
            continue;
        }
        long long n = g.x != 0 ? r.x / g.x : r.y / g.y;
        if (g * n == r && parity_ok(n)) return n;
    }
    return std::nullopt;
}

namespace {

// form with R form R^-1 == x, form cyclically reduced and, for even length,
// starting with a1.
struct Reduced {
    DoubleKleinElement form;
    DoubleKleinElement R;
};

Reduced reduce(const DoubleKleinElement& x, const DoubleKleinGroup& G) {
    Reduced out{x, {}};
    auto rotate_by = [&](int f) {
        DoubleKleinElement s{{f}, {0, 0}};
        out.form = G.multiply(G.multiply(G.inverse(s), out.form), s);
        out.R = G.multiply(out.R, s);
    };
    while (out.form.letters.size() >= 2 && out.form.letters.front() == out.form.letters.back())
        rotate_by(out.form.letters.front());
    if (out.form.letters.size() >= 2 && out.form.letters.front() == 2) rotate_by(2);
    if (G.conjugate(out.R, out.form) != x) throw ContractViolation("amalgam reduction failed verification");
    return out;
}

DoubleKleinElement power(const DoubleKleinElement& g, long long n, const DoubleKleinGroup& G) {
    DoubleKleinElement base = n < 0 ? G.inverse(g) : g;
    DoubleKleinElement out;
    for (long long i = 0; i < std::llabs(n); ++i) out = G.multiply(out, base);
    return out;
}

klein::KleinNF factor_nf(const DoubleKleinElement& x, const DoubleKleinGroup& G) {
    int f = x.letters.front();
    Vec2 hi = f == 1 ? x.h : row_times(x.h, G.varphi());
    return {2 * hi.x + 1, hi.y};
}

// X with X U X^-1 == V for reduced forms.
std::optional<DoubleKleinElement> reduced_conjugacy(const DoubleKleinElement& U, const DoubleKleinElement& V,
                                                    const DoubleKleinGroup& G) {
    std::size_t k = U.letters.size();
    if (k != V.letters.size()) return std::nullopt;
    const DoubleKleinElement a1{{1}, {0, 0}};
    const DoubleKleinElement w{{1, 2}, {0, 0}};
    const Mat2& psi = G.derived_matrix();
    if (k == 0) {
        if (auto n = row_orbit_power(U.h, V.h, psi)) return power(w, -*n, G);
        if (auto n = row_orbit_power(U.h, row_times(V.h, diag_flip()), psi))
            return G.multiply(G.inverse(a1), power(w, -*n, G));
        return std::nullopt;
    }
    if (k == 1) {
        int f = U.letters.front();
        if (V.letters.front() != f) return std::nullopt;
        auto x = klein::klein_conjugacy(factor_nf(V, G), factor_nf(U, G));
        if (!x) return std::nullopt;
        return G.from_factor(f, *x);
    }
    long long p = static_cast<long long>(k / 2);
    Mat2 L = Mat2::identity() - psi.pow(p);
    for (long long kk = 0; kk <= p; ++kk) {
        Vec2 r = V.h - row_times(U.h, psi.pow(kk));
        auto sol = solve_integer(L.transpose(), r);
        if (!sol) continue;
        return G.multiply(G.from_h(-sol->x), power(w, -kk, G));
    }
    return std::nullopt;
}

}  // namespace

std::optional<DoubleKleinElement> double_klein_conjugacy(const DoubleKleinElement& U, const DoubleKleinElement& V,
                                                         const DoubleKleinGroup& G) {
    for (const auto* e : {&U, &V})
        for (std::size_t i = 0; i < e->letters.size(); ++i) {
            int f = e->letters[i];
            if ((f != 1 && f != 2) || (i > 0 && e->letters[i - 1] == f))
                throw ContractViolation("malformed amalgam normal form");
        }
    if (U == V) return DoubleKleinElement{};
    Reduced ru = reduce(U, G), rv = reduce(V, G);
    auto X = reduced_conjugacy(ru.form, rv.form, G);
    if (!X) return std::nullopt;
    if (G.conjugate(*X, ru.form) != rv.form) throw ContractViolation("amalgam witness failed verification");
    DoubleKleinElement W = G.multiply(G.multiply(rv.R, *X), G.inverse(ru.R));
    if (G.conjugate(W, U) != V) throw ContractViolation("amalgam witness failed verification");
    return W;
}

}  // namespace gmc::sol
