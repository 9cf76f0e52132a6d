#pragma once

#include <optional>
#include <string>

#include "conj/lattice.hpp"
#include "conj/solution_sets.hpp"
#include "conj/words.hpp"

// The twisted I-bundle over the Klein bottle: <a,b | a b a^-1 = b^-1>, with
// boundary subgroup T = <a^2, b> (boundary index 1).
namespace gmc::klein {

// a^n b^m
struct KleinNF {
    long long n = 0;
    long long m = 0;
    friend bool operator==(const KleinNF&, const KleinNF&) = default;
    std::string str() const { return "(" + std::to_string(n) + "," + std::to_string(m) + ")"; }
};

KleinNF multiply(const KleinNF& x, const KleinNF& y);
KleinNF inverse(const KleinNF& x);
KleinNF conjugate(const KleinNF& g, const KleinNF& x);  // g x g^-1

// Letters are matched by name ("a", "b"); the space is the caller's business.
KleinNF klein_normalize(const Word& w);
Word to_word(const KleinNF& x, const std::string& space = "");
// a^(2p) b^q
KleinNF from_boundary(const Vec2& pq);

// witness . v . witness^-1 == u
std::optional<KleinNF> klein_conjugacy(const KleinNF& u, const KleinNF& v);
std::optional<Vec2> klein_boundary_membership(const KleinNF& u);
ParallelismSet klein_boundary_parallelism(const KleinNF& u, const std::string& space = "");
CosetSolutionSet klein_two_cosets(const KleinNF& u, const KleinNF& v);

}  // namespace gmc::klein
