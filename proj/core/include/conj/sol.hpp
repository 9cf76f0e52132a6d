#pragma once

#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "conj/klein.hpp"
#include "conj/lattice.hpp"
#include "conj/words.hpp"

// Conjugacy in the two SOL cases: torus bundles Z^2 x|_phi Z with Anosov
// monodromy, and the double of the twisted I-bundle over the Klein bottle.
// Witnesses here conjugate the first argument into the second.
namespace gmc::sol {

using Rational = boost::multiprecision::cpp_rational;

// x + y sqrt(delta) with delta > 0 not a square.
class QuadraticFieldElement {
public:
    QuadraticFieldElement(Rational x, Rational y, long long delta);

    const Rational& x() const { return x_; }
    const Rational& y() const { return y_; }
    long long delta() const { return delta_; }

    QuadraticFieldElement operator+(const QuadraticFieldElement& o) const;
    QuadraticFieldElement operator-(const QuadraticFieldElement& o) const;
    QuadraticFieldElement operator*(const QuadraticFieldElement& o) const;
    QuadraticFieldElement operator-() const;
    bool operator==(const QuadraticFieldElement& o) const;
    int sign() const;
    QuadraticFieldElement abs() const { return sign() < 0 ? -*this : *this; }
    // sign(|this| - |o|)
    int compare_abs(const QuadraticFieldElement& o) const;
    std::string str() const;

private:
    Rational x_, y_;
    long long delta_;
};

// Throws DomainError unless phi is in SL(2,Z) with |trace| > 2.
void require_anosov(const Mat2& phi);
// The unique n with u = phi^n v.
std::optional<long long> eigen_power_solve(const Vec2& u, const Vec2& v, const Mat2& phi);

// u t^p, with t x t^-1 = phi(x).
struct TorusElement {
    Vec2 u;
    long long p = 0;
    friend bool operator==(const TorusElement&, const TorusElement&) = default;
    std::string str() const { return u.str() + " t^" + std::to_string(p); }
};

class TorusBundleGroup {
public:
    explicit TorusBundleGroup(Mat2 phi);

    const Mat2& phi() const { return phi_; }
    TorusElement multiply(const TorusElement& a, const TorusElement& b) const;
    TorusElement inverse(const TorusElement& a) const;
    TorusElement conjugate(const TorusElement& g, const TorusElement& x) const;  // g x g^-1
    // Generators x = (1,0), y = (0,1), t.
    TorusElement normalize(const Word& w) const;
    Word to_word(const TorusElement& a) const;
    Alphabet alphabet() const;

private:
    Mat2 phi_;
};

// witness . g1 . witness^-1 == g2
std::optional<TorusElement> torus_bundle_conjugacy(const TorusElement& g1, const TorusElement& g2,
                                                   const TorusBundleGroup& G);

// Element s_1 ... s_k h of the amalgam K1 *_H K2: s_j alternate between a1
// and a2, h is in H written in the H1 basis (a1^2, b1).
struct DoubleKleinElement {
    std::vector<int> letters;  // factor indices 1 and 2, alternating
    Vec2 h;
    friend bool operator==(const DoubleKleinElement&, const DoubleKleinElement&) = default;
};

class DoubleKleinGroup {
public:
    // varphi sends H1 to H2 acting on row vectors: a1^2x b1^y = a2^2x' b2^y'
    // with (x', y') = (x, y) varphi.
    explicit DoubleKleinGroup(Mat2 varphi);

    const Mat2& varphi() const { return varphi_; }
    // psi: h -> (a1 a2)^-1 h (a1 a2) on row vectors of H1 coordinates.
    const Mat2& derived_matrix() const { return psi_; }

    DoubleKleinElement multiply(const DoubleKleinElement& a, const DoubleKleinElement& b) const;
    DoubleKleinElement inverse(const DoubleKleinElement& a) const;
    DoubleKleinElement conjugate(const DoubleKleinElement& g, const DoubleKleinElement& x) const;
    // Generators a1, b1, a2, b2.
    DoubleKleinElement normalize(const Word& w) const;
    Word to_word(const DoubleKleinElement& a) const;
    Alphabet alphabet() const;
    DoubleKleinElement from_h(const Vec2& h) const { return {{}, h}; }
    // Element of factor i given in its own Klein normal form.
    DoubleKleinElement from_factor(int i, const klein::KleinNF& x) const;
    std::string str(const DoubleKleinElement& a) const;

private:
    void push_letter(DoubleKleinElement& acc, int factor) const;
    Vec2 to_h1(int factor, const Vec2& hi) const;

    Mat2 varphi_, varphi_inv_;
    Mat2 conj_[3];  // h -> a_i^-1 h a_i on H1 row vectors
    Mat2 psi_;
};

// witness . U . witness^-1 == V
std::optional<DoubleKleinElement> double_klein_conjugacy(const DoubleKleinElement& U, const DoubleKleinElement& V,
                                                         const DoubleKleinGroup& G);

// The n with h2 = h1 M^n on row vectors, for M in SL(2,Z) of any type.
std::optional<long long> row_orbit_power(const Vec2& h1, const Vec2& h2, const Mat2& M);

}  // namespace gmc::sol
