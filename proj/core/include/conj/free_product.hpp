#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "conj/errors.hpp"
#include "conj/words.hpp"

// Free products of cyclic groups: syllable normal forms, conjugacy with
// witnesses, roots and double cosets of cyclic subgroups.
namespace gmc::freeprod {

struct Factor {
    GeneratorId gen;
    long long order = 0;  // 0 means infinite
};

class FreeProductOfCyclics {
public:
    FreeProductOfCyclics() = default;
    explicit FreeProductOfCyclics(std::vector<Factor> factors);

    const std::vector<Factor>& factors() const { return factors_; }
    std::size_t size() const { return factors_.size(); }
    const Factor& factor(int i) const { return factors_[static_cast<std::size_t>(i)]; }
    // -1 if the generator is not a factor generator.
    int index_of(const GeneratorId& g) const;
    Alphabet alphabet() const;

private:
    std::vector<Factor> factors_;
    std::map<GeneratorId, int> index_;
};

struct Syllable {
    int factor = 0;
    long long exp = 0;
    friend bool operator==(const Syllable&, const Syllable&) = default;
};

// Adjacent syllables lie in distinct factors; exponents of an order n factor
// are in 1..n-1, infinite factors carry any nonzero exponent.
struct FreeProductNF {
    std::vector<Syllable> syl;

    bool is_identity() const { return syl.empty(); }
    std::size_t length() const { return syl.size(); }
    friend bool operator==(const FreeProductNF&, const FreeProductNF&) = default;
};

using NF = FreeProductNF;
using Group = FreeProductOfCyclics;

NF normalize(const Word& w, const Group& G);
NF multiply(const Group& G, const NF& a, const NF& b);
NF multiply(const Group& G, std::initializer_list<const NF*> parts);
NF inverse(const Group& G, const NF& a);
NF power(const Group& G, const NF& a, long long k);
NF generator_nf(const Group& G, int factor, long long exp = 1);
// The section: syllables read verbatim as letters.
Word to_word(const Group& G, const NF& a);
std::string format(const Group& G, const NF& a);

struct CyclicForm {
    NF core;       // cyclically reduced
    NF conjugator; // a = conjugator . core . conjugator^-1
};
CyclicForm cyclic_reduce(const Group& G, const NF& a);
bool is_cyclically_reduced(const NF& a);
// Syllable length of the cyclic reduction.
std::size_t cyclic_length(const Group& G, const NF& a);
bool has_finite_order(const Group& G, const NF& a);

// witness . v . witness^-1 == u
std::optional<NF> conjugacy(const Group& G, const NF& u, const NF& v);

struct PowerConjugacy {
    long long alpha = 0;
    NF witness;  // witness . d^alpha . witness^-1 == u
};
// d must have infinite order; throws ContractViolation otherwise.
std::optional<PowerConjugacy> conjugate_to_power(const Group& G, const NF& u, const NF& d);

// Raised when double_coset cannot have a unique answer: <d1> = <d2> and v in <d1>.
class NonUniqueDoubleCoset : public ContractViolation {
public:
    using ContractViolation::ContractViolation;
};

struct DoubleCosetSolution {
    long long alpha = 0;
    long long gamma = 0;
    friend bool operator==(const DoubleCosetSolution&, const DoubleCosetSolution&) = default;
};
// u == d1^alpha . v . d2^gamma. Bounded scan, see double_coset_bound.
std::optional<DoubleCosetSolution> double_coset(const Group& G, const NF& u, const NF& v,
                                                const NF& d1, const NF& d2);
long long double_coset_bound(const Group& G, const NF& u, const NF& v, const NF& d);

// Generator of the (cyclic) centralizer of v != 1.
NF centralizer_generator(const Group& G, const NF& v);

// Returns k if a == d^k (exact equality), scanning |k| <= bound.
std::optional<long long> power_of(const Group& G, const NF& a, const NF& d, long long bound);

}  // namespace gmc::freeprod
