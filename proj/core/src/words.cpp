#include "conj/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "conj/errors.hpp"

namespace gmc {

void Presentation::check() const {
    Alphabet a = alphabet();
    for (const Word& r : relators)
        for (const Letter& l : r)
            if (!a.count(l.gen))
                throw ContractViolation("relator uses undeclared generator " + l.gen.full());
}

Word inverse(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back(it->inverse());
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out;
    out.reserve(a.size() + b.size());
    out.insert(out.end(), a.begin(), a.end());
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

Word concat(std::initializer_list<const Word*> parts) {
    Word out;
    for (const Word* p : parts) out.insert(out.end(), p->begin(), p->end());
    return out;
}

Word power(const Word& w, long long k) {
    Word base = k < 0 ? inverse(w) : w;
    Word out;
    for (long long i = 0; i < (k < 0 ? -k : k); ++i) out.insert(out.end(), base.begin(), base.end());
    return out;
}

Word letter_word(const GeneratorId& g, long long k) {
    return Word(static_cast<std::size_t>(k < 0 ? -k : k), Letter(g, k < 0 ? -1 : 1));
}

ReducedWord free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (const Letter& l : w) {
        if (!out.empty() && out.back().cancels(l))
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

bool is_freely_reduced(const Word& w) {
    for (std::size_t i = 1; i < w.size(); ++i)
        if (w[i - 1].cancels(w[i])) return false;
    return true;
}

Word rotate(const Word& w, std::size_t k) {
    if (w.empty()) return w;
    k %= w.size();
    Word out(w.begin() + static_cast<std::ptrdiff_t>(k), w.end());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(k));
    return out;
}

std::size_t least_rotation(const Word& w) {
    const std::size_t n = w.size();
    std::size_t best = 0;
    for (std::size_t k = 1; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            const Letter& a = w[(k + i) % n];
            const Letter& b = w[(best + i) % n];
            if (a == b) continue;
            if (a < b) best = k;
            break;
        }
    }
    return best;
}

CyclicReduction cyclic_reduce(const Word& w) {
    Word r = free_reduce(w);
    std::size_t lo = 0, hi = r.size();
    while (hi - lo >= 2 && r[lo].cancels(r[hi - 1])) {
        ++lo;
        --hi;
    }
    Word shell(r.begin(), r.begin() + static_cast<std::ptrdiff_t>(lo));
    Word core(r.begin() + static_cast<std::ptrdiff_t>(lo), r.begin() + static_cast<std::ptrdiff_t>(hi));
    // core = p q, stored rotation q p = p^-1 core p, so core = p (q p) p^-1.
    std::size_t k = least_rotation(core);
    Word p(core.begin(), core.begin() + static_cast<std::ptrdiff_t>(k));
    CyclicReduction out;
    out.word.letters = rotate(core, k);
    out.conjugator = free_reduce(concat(shell, p));
    return out;
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

bool valid_ident(std::string_view s) {
    if (s.empty() || !ident_start(s[0])) return false;
    return std::all_of(s.begin() + 1, s.end(), ident_char);
}

GeneratorId parse_name(std::string_view tok) {
    auto dot = tok.find('.');
    if (dot == std::string_view::npos) {
        if (!valid_ident(tok)) throw ParseError("malformed generator name '" + std::string(tok) + "'");
        return GeneratorId(std::string(tok));
    }
    std::string_view sp = tok.substr(0, dot), nm = tok.substr(dot + 1);
    if (!valid_ident(sp) || !valid_ident(nm))
        throw ParseError("malformed generator name '" + std::string(tok) + "'");
    return GeneratorId(std::string(sp), std::string(nm));
}

long long parse_exponent(std::string_view s, std::string_view tok) {
    if (!s.empty() && s[0] == '+') s.remove_prefix(1);
    long long v = 0;
    auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (s.empty() || ec != std::errc() || p != s.data() + s.size() || (s[0] == '-' && s.size() == 1))
        throw ParseError("malformed exponent in '" + std::string(tok) + "'");
    if (v == 0) throw ParseError("zero exponent in '" + std::string(tok) + "'");
    if (v > 1000000 || v < -1000000) throw ParseError("exponent too large in '" + std::string(tok) + "'");
    return v;
}

Word parse_impl(std::string_view text, const Alphabet* alphabet) {
    Word out;
    std::size_t i = 0;
    while (i < text.size()) {
        while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        if (i >= text.size()) break;
        std::size_t j = i;
        while (j < text.size() && !std::isspace(static_cast<unsigned char>(text[j]))) ++j;
        std::string_view tok = text.substr(i, j - i);
        i = j;
        auto caret = tok.find('^');
        GeneratorId g = parse_name(tok.substr(0, caret));
        long long e = caret == std::string_view::npos ? 1 : parse_exponent(tok.substr(caret + 1), tok);
        if (alphabet && !alphabet->count(g)) throw UnknownGenerator(g.full());
        Word piece = letter_word(g, e);
        out.insert(out.end(), piece.begin(), piece.end());
    }
    return out;
}

}  // namespace

Word parse_word(std::string_view text, const Alphabet& alphabet) { return parse_impl(text, &alphabet); }
Word parse_word(std::string_view text) { return parse_impl(text, nullptr); }

std::string format_word(const Word& w) {
    std::string out;
    std::size_t i = 0;
    while (i < w.size()) {
        std::size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        long long e = static_cast<long long>(j - i) * w[i].sign;
        if (!out.empty()) out += ' ';
        out += w[i].gen.full();
        if (e != 1) out += "^" + std::to_string(e);
        i = j;
    }
    return out;
}

long long exponent_sum(const Word& w, const GeneratorId& g) {
    long long s = 0;
    for (const Letter& l : w)
        if (l.gen == g) s += l.sign;
    return s;
}

Word with_space(const Word& w, const std::string& space) {
    Word out = w;
    for (Letter& l : out) l.gen.space = space;
    return out;
}

}  // namespace gmc
