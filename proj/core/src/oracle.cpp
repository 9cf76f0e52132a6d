#include "conj/oracle.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

namespace gmc::oracle {

namespace {

std::vector<Letter> letters_of(const Alphabet& alphabet) {
    std::vector<Letter> out;
    for (const GeneratorId& g : alphabet) {
        out.emplace_back(g, 1);
        out.emplace_back(g, -1);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void extend(const std::vector<Letter>& letters, Word& cur, std::size_t len, std::vector<Word>& out) {
    if (cur.size() == len) {
        out.push_back(cur);
        return;
    }
    for (const Letter& l : letters) {
        if (!cur.empty() && cur.back().cancels(l)) continue;
        cur.push_back(l);
        extend(letters, cur, len, out);
        cur.pop_back();
    }
}

}  // namespace

bool shortlex_less(const Word& a, const Word& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

std::vector<Word> ball(const Alphabet& alphabet, std::size_t radius) {
    const auto letters = letters_of(alphabet);
    std::vector<Word> out;
    Word cur;
    for (std::size_t len = 0; len <= radius; ++len) extend(letters, cur, len, out);
    return out;
}

std::optional<Word> brute_conjugator(const Word& u, const Word& v, const GroupHandle& G, std::size_t radius) {
    if (!G.key) {
        for (const Word& g : ball(G.alphabet, radius)) {
            Word t = concat({&g, &v});
            Word gi = inverse(g), ui = inverse(u);
            if (G.word_problem(concat({&t, &gi, &ui}))) return g;
        }
        return std::nullopt;
    }
    // g = g1 g2 with |g1| <= ceil(r/2), |g2| <= floor(r/2):
    // g v g^-1 = u  <=>  g1^-1 u g1 = g2 v g2^-1.
    const std::size_t r1 = (radius + 1) / 2, r2 = radius / 2;
    std::unordered_map<std::string, std::vector<Word>> left;
    for (const Word& g1 : ball(G.alphabet, r1)) {
        Word g1i = inverse(g1);
        left[G.key(concat({&g1i, &u, &g1}))].push_back(g1);
    }
    std::optional<Word> best;
    for (const Word& g2 : ball(G.alphabet, r2)) {
        Word g2i = inverse(g2);
        auto it = left.find(G.key(concat({&g2, &v, &g2i})));
        if (it == left.end()) continue;
        for (const Word& g1 : it->second) {
            // Ball words are reduced, so g1 g2 only cancels at the junction.
            std::size_t k = 0;
            while (k < g1.size() && k < g2.size() && g1[g1.size() - 1 - k].cancels(g2[k])) ++k;
            const std::size_t keep = g1.size() - k, len = keep + g2.size() - k;
            if (best) {
                if (len > best->size()) continue;
                if (len == best->size()) {
                    auto at = [&](std::size_t i) -> const Letter& { return i < keep ? g1[i] : g2[i - keep + k]; };
                    std::size_t i = 0;
                    while (i < len && at(i) == (*best)[i]) ++i;
                    if (i == len || !(at(i) < (*best)[i])) continue;
                }
            }
            Word g(g1.begin(), g1.begin() + static_cast<std::ptrdiff_t>(keep));
            g.insert(g.end(), g2.begin() + static_cast<std::ptrdiff_t>(k), g2.end());
            best = std::move(g);
        }
    }
    return best;
}

namespace {

// Every rotation of every relator and of its inverse.
std::vector<Word> relator_rotations(const std::vector<Word>& relators) {
    std::set<Word> out;
    for (const Word& r0 : relators) {
        for (const Word& r : {free_reduce(r0), free_reduce(inverse(r0))}) {
            for (std::size_t k = 0; k < r.size(); ++k) out.insert(rotate(r, k));
        }
    }
    return {out.begin(), out.end()};
}

// One relator application: a subword s that is a prefix of a rotation s t is
// replaced by t^-1. Only replacements that do not lengthen the word are tried.
std::vector<Word> neighbours(const Word& w, const std::vector<Word>& rots) {
    std::vector<Word> out;
    for (const Word& rho : rots) {
        const std::size_t n = rho.size();
        for (std::size_t len = (n + 1) / 2; len <= n; ++len) {
            if (len > w.size()) break;
            for (std::size_t i = 0; i + len <= w.size(); ++i) {
                if (!std::equal(rho.begin(), rho.begin() + static_cast<std::ptrdiff_t>(len),
                                w.begin() + static_cast<std::ptrdiff_t>(i)))
                    continue;
                Word t(rho.begin() + static_cast<std::ptrdiff_t>(len), rho.end());
                Word next(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
                Word ti = inverse(t);
                next.insert(next.end(), ti.begin(), ti.end());
                next.insert(next.end(), w.begin() + static_cast<std::ptrdiff_t>(i + len), w.end());
                out.push_back(free_reduce(next));
            }
        }
    }
    return out;
}

}  // namespace

bool rewrite_reachable(const Word& w1, const Word& w2, const std::vector<Word>& relators, std::size_t depth) {
    const Word a = free_reduce(w1), b = free_reduce(w2);
    if (a == b) return true;
    const auto rots = relator_rotations(relators);
    // Bidirectional search: every move is invertible, so meeting in the
    // middle within depth total moves proves reachability.
    std::map<Word, std::size_t> seen_a{{a, 0}}, seen_b{{b, 0}};
    std::vector<Word> front_a{a}, front_b{b};
    std::size_t da = 0, db = 0;
    while (da + db < depth && (!front_a.empty() || !front_b.empty())) {
        bool grow_a = !front_a.empty() && (front_b.empty() || front_a.size() <= front_b.size());
        auto& front = grow_a ? front_a : front_b;
        auto& seen = grow_a ? seen_a : seen_b;
        auto& other = grow_a ? seen_b : seen_a;
        std::size_t& d = grow_a ? da : db;
        std::vector<Word> next;
        for (const Word& w : front) {
            for (Word& x : neighbours(w, rots)) {
                if (other.count(x)) return true;
                if (seen.emplace(x, d + 1).second) next.push_back(std::move(x));
            }
        }
        front = std::move(next);
        ++d;
    }
    return false;
}

Word plant_conjugate(const Word& v, const Word& g) {
    Word gi = inverse(g);
    return free_reduce(concat({&g, &v, &gi}));
}

}  // namespace gmc::oracle
