#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conj/lattice.hpp"
#include "conj/poly_ring.hpp"
#include "conj/solution_sets.hpp"
#include "conj/words.hpp"

// Hyperbolic pieces, given by an exact 2x2 matrix representation that is
// assumed faithful. Positive answers are always verified; negative answers
// from bounded searches are flagged as radius-conditional.
namespace gmc::hyperbolic {

struct SearchConstants {
    // K = k_num / k_den, lower bound for the stable norm.
    long long k_num = 1;
    long long k_den = 1;
    long long c_bcp = 1;
    std::size_t r_conj = 6;

    void check() const;
};

struct MatrixRep {
    poly::PolyRing ring;
    std::map<GeneratorId, poly::Mat> generators;
    bool projective = true;

    poly::Mat eval(const Word& w) const;
    bool is_identity(const poly::Mat& m) const;
    bool equal(const poly::Mat& x, const poly::Mat& y) const { return poly::mat_equal(x, y, projective, ring); }
};

// Basis words (b1, b2) of a boundary subgroup.
struct BoundaryBasis {
    Word first;
    Word second;
};

struct HypConjugacy {
    std::optional<Word> witness;  // witness . v . witness^-1 == u
    bool exact = true;
};

class HyperbolicPiece {
public:
    // Throws DomainError when a relator is not +-I, a generator has no
    // matrix, or a boundary basis is not a pair of commuting independent
    // parabolics.
    HyperbolicPiece(Presentation pres, MatrixRep rep, std::vector<BoundaryBasis> boundaries,
                    SearchConstants consts, std::string space = "");

    const Presentation& presentation() const { return pres_; }
    const Alphabet& alphabet() const { return alphabet_; }
    const MatrixRep& rep() const { return rep_; }
    const SearchConstants& constants() const { return consts_; }
    const std::string& space() const { return space_; }
    int boundary_count() const { return static_cast<int>(boundaries_.size()); }
    const BoundaryBasis& boundary(int k) const;

    bool word_problem(const Word& w) const { return rep_.is_identity(rep_.eval(w)); }
    std::string key(const Word& w) const { return poly::mat_key(rep_.ring, rep_.eval(w), rep_.projective); }

    Word boundary_word(int k, const Vec2& coords) const;
    std::optional<Vec2> boundary_membership(const Word& w, int k) const;
    ParallelismSet boundary_parallelism(const Word& w, int k) const;
    CosetSolutionSet two_cosets(const Word& u, const Word& v, int k1, int k2) const;
    HypConjugacy conjugacy(const Word& u, const Word& v) const;

    // Number of lattice points |x| + |y| <= bound examined by parallelism.
    long long parallelism_bound(const Word& w) const;
    long long coset_bound(const Word& u, const Word& v) const;

private:
    struct Cusp {
        poly::Mat b1, b2;  // basis matrices
        poly::Mat n1, n2;  // s_i b_i - I, nilpotent
        int s1 = 1, s2 = 1;
        std::size_t len1 = 1, len2 = 1;
    };
    std::optional<Vec2> coords_of(const poly::Mat& m, int k) const;
    poly::Mat boundary_matrix(int k, const Vec2& c) const;
    void check_boundary(int k) const;

    Presentation pres_;
    Alphabet alphabet_;
    MatrixRep rep_;
    std::vector<BoundaryBasis> boundaries_;
    std::vector<Cusp> cusps_;
    SearchConstants consts_;
    std::string space_;
};

// Free-function spellings of the piece operations.
inline bool rep_word_problem(const Word& w, const HyperbolicPiece& P) { return P.word_problem(w); }
inline std::optional<Vec2> hyp_boundary_membership(const Word& w, const HyperbolicPiece& P, int k) {
    return P.boundary_membership(w, k);
}
inline ParallelismSet hyp_boundary_parallelism(const Word& w, const HyperbolicPiece& P, int k) {
    return P.boundary_parallelism(w, k);
}
inline CosetSolutionSet hyp_two_cosets(const Word& u, const Word& v, const HyperbolicPiece& P, int k1, int k2) {
    return P.two_cosets(u, v, k1, k2);
}
inline HypConjugacy hyp_conjugacy(const Word& u, const Word& v, const HyperbolicPiece& P) {
    return P.conjugacy(u, v);
}

}  // namespace gmc::hyperbolic
