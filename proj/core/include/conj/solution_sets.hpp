#pragma once

#include <string>
#include <utility>
#include <vector>

#include "conj/lattice.hpp"
#include "conj/words.hpp"

// Solution sets shared by every piece solver and by the graph engine.
// Coordinates are always in the basis of the relevant boundary subgroup.
namespace gmc {

// An element c of a boundary subgroup T together with a conjugator g such
// that g . c . g^-1 equals the queried element.
struct BoundaryConjugate {
    int boundary = 0;
    Vec2 coords;
    Word witness;
};

struct ParallelismSet {
    std::vector<BoundaryConjugate> elements;  // at most two
    // False when a bounded search came back empty and the emptiness is only
    // known up to the search radius.
    bool exact = true;

    bool empty() const { return elements.empty(); }
    std::size_t size() const { return elements.size(); }
};

// All (c, c') in T1 x T2 with u = c . v . c'. Every shape is an affine set
// base + sum n_i * gen_i with 0, 1 or 2 generators.
struct CosetSolutionSet {
    enum class Kind { Empty, Singleton, HLine, KleinFamily, FullCoset };

    Kind kind = Kind::Empty;
    int boundary1 = 0;
    int boundary2 = 0;
    Vec2 base_c;
    Vec2 base_c2;
    std::vector<std::pair<Vec2, Vec2>> generators;
    int epsilon = 1;  // h-line sign
    bool exact = true;

    static CosetSolutionSet empty(int k1, int k2, bool exact = true) {
        CosetSolutionSet s;
        s.boundary1 = k1;
        s.boundary2 = k2;
        s.exact = exact;
        return s;
    }
    static CosetSolutionSet singleton(int k1, int k2, Vec2 c, Vec2 c2) {
        CosetSolutionSet s;
        s.kind = Kind::Singleton;
        s.boundary1 = k1;
        s.boundary2 = k2;
        s.base_c = c;
        s.base_c2 = c2;
        return s;
    }

    bool is_empty() const { return kind == Kind::Empty; }

    // Members with every parameter in [-radius, radius], in parameter order.
    std::vector<std::pair<Vec2, Vec2>> members(long long radius) const {
        std::vector<std::pair<Vec2, Vec2>> out;
        if (kind == Kind::Empty) return out;
        if (generators.empty()) {
            out.emplace_back(base_c, base_c2);
            return out;
        }
        if (generators.size() == 1) {
            for (long long n = -radius; n <= radius; ++n)
                out.emplace_back(base_c + generators[0].first * n, base_c2 + generators[0].second * n);
            return out;
        }
        for (long long n = -radius; n <= radius; ++n)
            for (long long m = -radius; m <= radius; ++m)
                out.emplace_back(base_c + generators[0].first * n + generators[1].first * m,
                                 base_c2 + generators[0].second * n + generators[1].second * m);
        return out;
    }

    // Exact membership test, no enumeration.
    bool contains(const Vec2& c, const Vec2& c2) const {
        if (kind == Kind::Empty) return false;
        const long long t[4] = {c.x - base_c.x, c.y - base_c.y, c2.x - base_c2.x, c2.y - base_c2.y};
        auto row = [&](std::size_t g, int i) {
            const auto& [p, q] = generators[g];
            const long long r[4] = {p.x, p.y, q.x, q.y};
            return r[i];
        };
        if (generators.empty()) return t[0] == 0 && t[1] == 0 && t[2] == 0 && t[3] == 0;
        if (generators.size() == 1) {
            long long n = 0;
            bool fixed = false;
            for (int i = 0; i < 4; ++i) {
                const long long g = row(0, i);
                if (g == 0) {
                    if (t[i] != 0) return false;
                } else if (!fixed) {
                    if (t[i] % g != 0) return false;
                    n = t[i] / g;
                    fixed = true;
                }
            }
            for (int i = 0; i < 4; ++i)
                if (row(0, i) * n != t[i]) return false;
            return true;
        }
        // Two generators: Cramer on the first nonsingular 2x2 minor, then check all rows.
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j) {
                const long long det = row(0, i) * row(1, j) - row(1, i) * row(0, j);
                if (det == 0) continue;
                const long long nn = t[i] * row(1, j) - row(1, i) * t[j];
                const long long mm = row(0, i) * t[j] - t[i] * row(0, j);
                if (nn % det != 0 || mm % det != 0) return false;
                const long long n = nn / det, m = mm / det;
                for (int k = 0; k < 4; ++k)
                    if (row(0, k) * n + row(1, k) * m != t[k]) return false;
                return true;
            }
        return false;
    }

    std::string kind_name() const {
        switch (kind) {
            case Kind::Empty: return "empty";
            case Kind::Singleton: return "singleton";
            case Kind::HLine: return "h-line";
            case Kind::KleinFamily: return "klein-family";
            case Kind::FullCoset: return "full-coset";
        }
        return "?";
    }
};

}  // namespace gmc
