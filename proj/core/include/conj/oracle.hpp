#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "conj/words.hpp"

// Brute-force oracles: bounded conjugator search, relator rewriting and
// planted conjugates. They only use a word problem, so they are independent
// of every solver they are used to check.
namespace gmc::oracle {

struct GroupHandle {
    Alphabet alphabet;
    std::function<bool(const Word&)> word_problem;
    // Optional canonical form: key(w1) == key(w2) iff w1 == w2 in the group.
    // Enables the meet-in-the-middle search.
    std::function<std::string(const Word&)> key;
};

// Freely reduced words of length <= radius in length-then-lex order.
std::vector<Word> ball(const Alphabet& alphabet, std::size_t radius);
// Length-then-lex comparison.
bool shortlex_less(const Word& a, const Word& b);

// First g in length-then-lex order with |g| <= radius and g v g^-1 = u.
std::optional<Word> brute_conjugator(const Word& u, const Word& v, const GroupHandle& G, std::size_t radius);

// True if w2 is reachable from w1 in at most depth relator applications.
// Sound but incomplete: false means "not found".
bool rewrite_reachable(const Word& w1, const Word& w2, const std::vector<Word>& relators, std::size_t depth);

// free_reduce(g v g^-1)
Word plant_conjugate(const Word& v, const Word& g);

}  // namespace gmc::oracle
