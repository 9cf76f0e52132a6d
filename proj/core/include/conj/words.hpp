#pragma once

#include <compare>
#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace gmc {

// A generator symbol. Piece generators carry the vertex name as their space
// ("v1" in "v1.c1"); stable letters and standalone groups use an empty space.
struct GeneratorId {
    std::string space;
    std::string name;

    GeneratorId() = default;
    GeneratorId(std::string space_, std::string name_)
        : space(std::move(space_)), name(std::move(name_)) {}
    explicit GeneratorId(std::string name_) : name(std::move(name_)) {}

    std::string full() const { return space.empty() ? name : space + "." + name; }

    friend bool operator==(const GeneratorId&, const GeneratorId&) = default;
    friend std::strong_ordering operator<=>(const GeneratorId& a, const GeneratorId& b) {
        if (auto c = a.space <=> b.space; c != 0) return c;
        return a.name <=> b.name;
    }
};

// One letter g or g^-1. Exponents other than +-1 never appear in a Word.
struct Letter {
    GeneratorId gen;
    int sign = 1;

    Letter() = default;
    Letter(GeneratorId g, int s) : gen(std::move(g)), sign(s) {}

    Letter inverse() const { return Letter(gen, -sign); }
    bool cancels(const Letter& o) const { return sign == -o.sign && gen == o.gen; }

    friend bool operator==(const Letter&, const Letter&) = default;
    // Generator first, then g before g^-1.
    friend std::strong_ordering operator<=>(const Letter& a, const Letter& b) {
        if (auto c = a.gen <=> b.gen; c != 0) return c;
        return b.sign <=> a.sign;
    }
};

using Word = std::vector<Letter>;
// A Word with no adjacent cancelling pair. Same storage, stronger invariant.
using ReducedWord = Word;

// Reduced and cyclically reduced, stored as its least rotation.
struct CyclicWord {
    Word letters;
    friend bool operator==(const CyclicWord&, const CyclicWord&) = default;
};

using Alphabet = std::set<GeneratorId>;

struct Presentation {
    std::vector<GeneratorId> generators;
    std::vector<Word> relators;

    Alphabet alphabet() const { return {generators.begin(), generators.end()}; }
    // Throws ContractViolation if a relator uses an undeclared generator.
    void check() const;
};

Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word concat(std::initializer_list<const Word*> parts);
Word power(const Word& w, long long k);
Word letter_word(const GeneratorId& g, long long k = 1);

ReducedWord free_reduce(const Word& w);
bool is_freely_reduced(const Word& w);

struct CyclicReduction {
    CyclicWord word;
    ReducedWord conjugator;  // conjugator . word . conjugator^-1 == free_reduce(input)
};
CyclicReduction cyclic_reduce(const Word& w);

// Least rotation of a cyclically reduced word, with the rotation offset used.
std::size_t least_rotation(const Word& w);
Word rotate(const Word& w, std::size_t k);

// Word grammar: whitespace separated tokens NAME or NAME^INT, INT a nonzero
// signed decimal, NAME = [A-Za-z][A-Za-z0-9_]* with an optional "space." prefix.
Word parse_word(std::string_view text, const Alphabet& alphabet);
Word parse_word(std::string_view text);  // any well formed generator accepted
std::string format_word(const Word& w);

// Sum of exponents per generator, used as a cheap invariant in tests.
long long exponent_sum(const Word& w, const GeneratorId& g);

// Replace the space of every letter.
Word with_space(const Word& w, const std::string& space);

}  // namespace gmc
