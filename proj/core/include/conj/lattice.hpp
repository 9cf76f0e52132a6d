#pragma once

#include <array>
#include <cstdlib>
#include <numeric>
#include <optional>
#include <string>

#include "conj/errors.hpp"

// Small exact integer linear algebra on Z^2.
namespace gmc {

struct Vec2 {
    long long x = 0;
    long long y = 0;

    friend bool operator==(const Vec2&, const Vec2&) = default;
    friend auto operator<=>(const Vec2&, const Vec2&) = default;
    Vec2 operator+(const Vec2& o) const { return {x + o.x, y + o.y}; }
    Vec2 operator-(const Vec2& o) const { return {x - o.x, y - o.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    Vec2 operator*(long long k) const { return {x * k, y * k}; }
    bool is_zero() const { return x == 0 && y == 0; }
    long long linf() const { return std::max(std::llabs(x), std::llabs(y)); }
    std::string str() const { return "(" + std::to_string(x) + "," + std::to_string(y) + ")"; }
};

// Row-major [[a,b],[c,d]] acting on column vectors.
struct Mat2 {
    long long a = 1, b = 0, c = 0, d = 1;

    static Mat2 identity() { return {}; }
    friend bool operator==(const Mat2&, const Mat2&) = default;

    long long det() const { return a * d - b * c; }
    long long trace() const { return a + d; }
    Vec2 operator*(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Mat2 operator*(const Mat2& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    Mat2 operator-(const Mat2& o) const { return {a - o.a, b - o.b, c - o.c, d - o.d}; }
    Mat2 operator+(const Mat2& o) const { return {a + o.a, b + o.b, c + o.c, d + o.d}; }
    Mat2 transpose() const { return {a, c, b, d}; }
    // Inverse of a unimodular matrix.
    Mat2 unimodular_inverse() const {
        long long e = det();
        if (e != 1 && e != -1) throw DomainError("matrix is not invertible over Z");
        return {d * e, -b * e, -c * e, a * e};
    }
    Mat2 pow(long long k) const {
        Mat2 base = k < 0 ? unimodular_inverse() : *this;
        Mat2 out;
        for (long long i = 0; i < std::llabs(k); ++i) out = out * base;
        return out;
    }
    std::string str() const {
        return "[[" + std::to_string(a) + "," + std::to_string(b) + "],[" + std::to_string(c) + "," +
               std::to_string(d) + "]]";
    }
};

// Row vector times matrix.
inline Vec2 row_times(const Vec2& v, const Mat2& m) { return {v.x * m.a + v.y * m.c, v.x * m.b + v.y * m.d}; }

inline long long floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

// Integer solutions of M x = r. Returns one solution plus the kernel rank;
// for rank-deficient M the chosen solution has its free coordinates at 0
// in the Smith basis.
struct IntSolve {
    Vec2 x;
    int kernel_dim = 0;
    Vec2 kernel;  // generator when kernel_dim == 1
};

namespace detail {
// Extended gcd: g = s*a + t*b, g >= 0.
inline long long egcd(long long a, long long b, long long& s, long long& t) {
    long long s0 = 1, s1 = 0, t0 = 0, t1 = 1;
    while (b != 0) {
        long long q = floor_div(a, b);
        long long r = a - q * b;
        a = b;
        b = r;
        long long ns = s0 - q * s1, nt = t0 - q * t1;
        s0 = s1;
        s1 = ns;
        t0 = t1;
        t1 = nt;
    }
    if (a < 0) {
        a = -a;
        s0 = -s0;
        t0 = -t0;
    }
    s = s0;
    t = t0;
    return a;
}
}  // namespace detail

inline std::optional<IntSolve> solve_integer(const Mat2& M, const Vec2& r) {
    long long det = M.det();
    if (det != 0) {
        long long nx = M.d * r.x - M.b * r.y;
        long long ny = -M.c * r.x + M.a * r.y;
        if (nx % det != 0 || ny % det != 0) return std::nullopt;
        return IntSolve{{nx / det, ny / det}, 0, {}};
    }
    if (M == Mat2{0, 0, 0, 0}) {
        if (!r.is_zero()) return std::nullopt;
        return IntSolve{{0, 0}, 2, {}};
    }
    // Rank one: some row (p,q) != 0, the other is a rational multiple.
    long long p = M.a, q = M.b, rr = r.x;
    long long p2 = M.c, q2 = M.d, r2 = r.y;
    if (p == 0 && q == 0) {
        std::swap(p, p2);
        std::swap(q, q2);
        std::swap(rr, r2);
    }
    // Consistency: second row = lambda * first row, need r2 = lambda * rr.
    // Rows are proportional, so (p2,q2) x (p,q) = 0; check r via cross terms.
    if (p2 * rr != p * r2 || q2 * rr != q * r2) return std::nullopt;
    long long s = 0, t = 0;
    long long g = detail::egcd(p, q, s, t);
    if (rr % g != 0) return std::nullopt;
    long long k = rr / g;
    IntSolve out;
    out.x = {s * k, t * k};
    out.kernel_dim = 1;
    out.kernel = {q / g, -p / g};
    return out;
}

}  // namespace gmc
