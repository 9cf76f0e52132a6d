#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conj/free_product.hpp"
#include "conj/lattice.hpp"
#include "conj/solution_sets.hpp"
#include "conj/words.hpp"

// Seifert fibered pieces with nonempty boundary.
//
// Generators: a_i, b_i (orientable base) or a_i (non-orientable base),
// c_j for the exceptional fibers, d_k for the boundary components, and the
// fiber h. d_p is eliminated: the quotient by <h> is the free product of the
// remaining generators with c_j of order alpha_j.
namespace gmc::seifert {

struct Invariants {
    bool orientable_base = true;
    int genus = 0;
    int boundary = 1;  // p
    long long b = 0;
    std::vector<std::pair<long long, long long>> exceptional;  // (alpha_j, beta_j)

    std::string str() const;
};

// Element s(quotient) . h^fiber, where s reads the quotient normal form
// verbatim as a word.
struct SeifertNF {
    freeprod::NF quotient;
    long long fiber = 0;
    bool is_identity() const { return quotient.is_identity() && fiber == 0; }
    friend bool operator==(const SeifertNF&, const SeifertNF&) = default;
};

class SeifertPiece {
public:
    // Throws DomainError on invalid invariants. Pieces that are excluded from
    // graph manifolds (solid torus, thickened torus, twisted I-bundle over the
    // Klein bottle) are constructible; see excluded_reason().
    explicit SeifertPiece(Invariants inv, std::string space = "");

    const Invariants& invariants() const { return inv_; }
    const std::string& space() const { return space_; }
    int boundary_count() const { return inv_.boundary; }

    // Empty when the piece may appear in a graph manifold.
    std::string excluded_reason() const;
    // Non-fatal remarks, e.g. gcd(alpha_j, beta_j) != 1.
    std::vector<std::string> warnings() const;

    Presentation presentation() const;
    const Alphabet& alphabet() const { return alphabet_; }
    const freeprod::Group& quotient() const { return quotient_; }
    GeneratorId fiber_gen() const { return GeneratorId(space_, "h"); }
    GeneratorId boundary_gen(int k) const { return GeneratorId(space_, "d" + std::to_string(k)); }

    SeifertNF normalize(const Word& w) const;
    SeifertNF multiply(const SeifertNF& x, const SeifertNF& y) const;
    SeifertNF inverse(const SeifertNF& x) const;
    Word to_word(const SeifertNF& x) const;
    bool word_problem(const Word& w) const { return normalize(w).is_identity(); }
    std::string key(const Word& w) const;

    // +1 iff w commutes with h, i.e. w h w^-1 = h^eps.
    int canonical_subgroup(const Word& w) const;
    int epsilon(const freeprod::NF& q) const;

    // Image of d_k in the quotient.
    const freeprod::NF& boundary_quotient(int k) const;
    // d_k^x h^y
    Word boundary_word(int k, const Vec2& coords) const;

    std::optional<Vec2> boundary_membership(const Word& w, int k) const;
    ParallelismSet boundary_parallelism(const Word& w, int k) const;
    CosetSolutionSet two_cosets(const Word& u, const Word& v, int k1, int k2) const;
    // witness . v . witness^-1 == u
    std::optional<Word> conjugacy(const Word& u, const Word& v) const;

private:
    enum class Kind { A, B, C, D, H };
    struct GenInfo {
        Kind kind;
        int index;    // 1-based
        int factor;   // quotient factor, -1 for h and d_p
    };

    GenInfo parse_generator(const GeneratorId& g) const;
    GenInfo lookup(const GeneratorId& g) const;
    void push_letter(SeifertNF& acc, const GenInfo& info, int sign) const;
    void push_syllable(std::vector<freeprod::Syllable>& s, freeprod::Syllable x, long long& carry) const;
    void check_boundary(int k) const;
    Word lift(const freeprod::NF& q) const { return freeprod::to_word(quotient_, q); }

    Invariants inv_;
    std::string space_;
    freeprod::Group quotient_;
    std::vector<int> a_factor_;  // factor index of a_i
    int c_offset_ = 0;           // factor index of c_1
    std::vector<freeprod::NF> d_bar_;  // d_1..d_p in the quotient
    Word dp_expansion_;  // d_p as a word without d_p, without the h^b part
    Alphabet alphabet_;
    std::map<GeneratorId, GenInfo> gen_info_;
    std::vector<std::pair<GenInfo, int>> dp_letters_, dp_inverse_letters_;  // d_p and d_p^-1
};

// Free-function spellings of the piece operations.
inline Presentation presentation(const SeifertPiece& P) { return P.presentation(); }
inline SeifertNF seifert_normalize(const Word& w, const SeifertPiece& P) { return P.normalize(w); }
inline int canonical_subgroup(const Word& w, const SeifertPiece& P) { return P.canonical_subgroup(w); }
inline std::optional<Vec2> boundary_membership(const Word& w, const SeifertPiece& P, int k) {
    return P.boundary_membership(w, k);
}
inline ParallelismSet boundary_parallelism(const Word& w, const SeifertPiece& P, int k) {
    return P.boundary_parallelism(w, k);
}
inline CosetSolutionSet seifert_two_cosets(const Word& u, const Word& v, const SeifertPiece& P, int k1, int k2) {
    return P.two_cosets(u, v, k1, k2);
}
inline std::optional<Word> seifert_conjugacy(const Word& u, const Word& v, const SeifertPiece& P) {
    return P.conjugacy(u, v);
}

}  // namespace gmc::seifert
