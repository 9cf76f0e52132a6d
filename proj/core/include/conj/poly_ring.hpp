#pragma once

#include <array>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

// Exact arithmetic in Z[t]/(m(t)) for a monic integer polynomial m, and
// 2x2 matrices over that ring.
namespace gmc::poly {

using Int = boost::multiprecision::cpp_int;

// Coefficients, lowest degree first, always of length deg(m).
struct Elem {
    std::vector<Int> c;
    friend bool operator==(const Elem&, const Elem&) = default;
};

class PolyRing {
public:
    PolyRing();  // Z, modulus t
    // Coefficients lowest degree first; the leading one must be 1.
    explicit PolyRing(std::vector<long long> modulus);

    int degree() const { return static_cast<int>(mod_.size()) - 1; }
    const std::vector<long long>& modulus() const { return mod_; }

    Elem zero() const;
    Elem from_int(long long k) const;
    Elem from_coeffs(const std::vector<long long>& cs) const;  // reduced mod m
    Elem add(const Elem& a, const Elem& b) const;
    Elem sub(const Elem& a, const Elem& b) const;
    Elem neg(const Elem& a) const;
    Elem mul(const Elem& a, const Elem& b) const;
    Elem scale(const Elem& a, long long k) const;
    bool is_zero(const Elem& a) const;
    // The integer k if a is the constant k.
    bool is_constant(const Elem& a, Int& k) const;
    std::string str(const Elem& a) const;

private:
    std::vector<long long> mod_;
};

// Row-major [a b; c d]
using Mat = std::array<Elem, 4>;

Mat mat_identity(const PolyRing& R);
Mat mat_mul(const PolyRing& R, const Mat& x, const Mat& y);
Mat mat_neg(const PolyRing& R, const Mat& x);
Mat mat_add(const PolyRing& R, const Mat& x, const Mat& y);
Mat mat_sub(const PolyRing& R, const Mat& x, const Mat& y);
Mat mat_scale(const PolyRing& R, const Mat& x, long long k);
Elem mat_det(const PolyRing& R, const Mat& x);
Elem mat_trace(const PolyRing& R, const Mat& x);
// Throws DomainError unless det is +-1.
Mat mat_inverse(const PolyRing& R, const Mat& x);
bool mat_equal(const Mat& x, const Mat& y, bool projective, const PolyRing& R);
std::string mat_key(const PolyRing& R, const Mat& x, bool projective);
std::string mat_str(const PolyRing& R, const Mat& x);

}  // namespace gmc::poly
