#include "conj/poly_ring.hpp"

#include <sstream>

#include "conj/errors.hpp"

namespace gmc::poly {

PolyRing::PolyRing() : mod_{0, 1} {}

PolyRing::PolyRing(std::vector<long long> modulus) : mod_(std::move(modulus)) {
    if (mod_.size() < 2) throw DomainError("ring modulus must have degree >= 1");
    if (mod_.back() != 1) throw DomainError("ring modulus must be monic");
}

Elem PolyRing::zero() const { return Elem{std::vector<Int>(static_cast<std::size_t>(degree()), Int(0))}; }

Elem PolyRing::from_int(long long k) const {
    Elem e = zero();
    e.c[0] = k;
    return e;
}

Elem PolyRing::from_coeffs(const std::vector<long long>& cs) const {
    const std::size_t d = static_cast<std::size_t>(degree());
    std::vector<Int> full(std::max(cs.size(), d), Int(0));
    for (std::size_t i = 0; i < cs.size(); ++i) full[i] = cs[i];
    // t^d = -(m_0 + ... + m_{d-1} t^{d-1})
    for (std::size_t i = full.size(); i-- > d;) {
        Int top = full[i];
        if (top == 0) continue;
        full[i] = 0;
        for (std::size_t j = 0; j < d; ++j) full[i - d + j] -= top * mod_[j];
    }
    full.resize(d);
    return Elem{full};
}

Elem PolyRing::add(const Elem& a, const Elem& b) const {
    Elem out = a;
    for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] += b.c[i];
    return out;
}

Elem PolyRing::sub(const Elem& a, const Elem& b) const {
    Elem out = a;
    for (std::size_t i = 0; i < out.c.size(); ++i) out.c[i] -= b.c[i];
    return out;
}

Elem PolyRing::neg(const Elem& a) const {
    Elem out = a;
    for (auto& x : out.c) x = -x;
    return out;
}

Elem PolyRing::scale(const Elem& a, long long k) const {
    Elem out = a;
    for (auto& x : out.c) x *= k;
    return out;
}

Elem PolyRing::mul(const Elem& a, const Elem& b) const {
    const std::size_t d = static_cast<std::size_t>(degree());
    std::vector<Int> full(2 * d, Int(0));
    for (std::size_t i = 0; i < d; ++i) {
        if (a.c[i] == 0) continue;
        for (std::size_t j = 0; j < d; ++j) full[i + j] += a.c[i] * b.c[j];
    }
    for (std::size_t i = full.size(); i-- > d;) {
        Int top = full[i];
        if (top == 0) continue;
        full[i] = 0;
        for (std::size_t j = 0; j < d; ++j) full[i - d + j] -= top * mod_[j];
    }
    full.resize(d);
    return Elem{full};
}

bool PolyRing::is_zero(const Elem& a) const {
    for (const auto& x : a.c)
        if (x != 0) return false;
    return true;
}

bool PolyRing::is_constant(const Elem& a, Int& k) const {
    for (std::size_t i = 1; i < a.c.size(); ++i)
        if (a.c[i] != 0) return false;
    k = a.c[0];
    return true;
}

std::string PolyRing::str(const Elem& a) const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < a.c.size(); ++i) {
        if (a.c[i] == 0) continue;
        if (!first) os << (a.c[i] > 0 ? "+" : "");
        first = false;
        if (i == 0)
            os << a.c[i];
        else {
            if (a.c[i] == -1)
                os << "-";
            else if (a.c[i] != 1)
                os << a.c[i] << "*";
            os << "t";
            if (i > 1) os << "^" << i;
        }
    }
    if (first) os << "0";
    return os.str();
}

Mat mat_identity(const PolyRing& R) { return {R.from_int(1), R.zero(), R.zero(), R.from_int(1)}; }

Mat mat_mul(const PolyRing& R, const Mat& x, const Mat& y) {
    return {R.add(R.mul(x[0], y[0]), R.mul(x[1], y[2])), R.add(R.mul(x[0], y[1]), R.mul(x[1], y[3])),
            R.add(R.mul(x[2], y[0]), R.mul(x[3], y[2])), R.add(R.mul(x[2], y[1]), R.mul(x[3], y[3]))};
}

Mat mat_neg(const PolyRing& R, const Mat& x) { return {R.neg(x[0]), R.neg(x[1]), R.neg(x[2]), R.neg(x[3])}; }

Mat mat_add(const PolyRing& R, const Mat& x, const Mat& y) {
    return {R.add(x[0], y[0]), R.add(x[1], y[1]), R.add(x[2], y[2]), R.add(x[3], y[3])};
}

Mat mat_sub(const PolyRing& R, const Mat& x, const Mat& y) {
    return {R.sub(x[0], y[0]), R.sub(x[1], y[1]), R.sub(x[2], y[2]), R.sub(x[3], y[3])};
}

Mat mat_scale(const PolyRing& R, const Mat& x, long long k) {
    return {R.scale(x[0], k), R.scale(x[1], k), R.scale(x[2], k), R.scale(x[3], k)};
}

Elem mat_det(const PolyRing& R, const Mat& x) { return R.sub(R.mul(x[0], x[3]), R.mul(x[1], x[2])); }

Elem mat_trace(const PolyRing& R, const Mat& x) { return R.add(x[0], x[3]); }

Mat mat_inverse(const PolyRing& R, const Mat& x) {
    Int k;
    if (!R.is_constant(mat_det(R, x), k) || (k != 1 && k != -1))
        throw DomainError("matrix determinant is not +-1: " + R.str(mat_det(R, x)));
    Mat adj{x[3], R.neg(x[1]), R.neg(x[2]), x[0]};
    return k == 1 ? adj : mat_neg(R, adj);
}

bool mat_equal(const Mat& x, const Mat& y, bool projective, const PolyRing& R) {
    if (x == y) return true;
    return projective && mat_neg(R, x) == y;
}

std::string mat_key(const PolyRing& R, const Mat& x, bool projective) {
    const Mat* m = &x;
    Mat n;
    if (projective) {
        // Sign normalized so the first nonzero coefficient is positive.
        for (const Elem& e : x) {
            bool decided = false;
            for (const auto& c : e.c) {
                if (c == 0) continue;
                if (c < 0) {
                    n = mat_neg(R, x);
                    m = &n;
                }
                decided = true;
                break;
            }
            if (decided) break;
        }
    }
    std::string out;
    for (const Elem& e : *m) {
        for (const auto& c : e.c) {
            out += c.str();
            out += ',';
        }
        out += ';';
    }
    return out;
}

std::string mat_str(const PolyRing& R, const Mat& x) {
    return "[[" + R.str(x[0]) + ", " + R.str(x[1]) + "], [" + R.str(x[2]) + ", " + R.str(x[3]) + "]]";
}

}  // namespace gmc::poly
