#include <map>

#include "conj/errors.hpp"
#include "conj/graph.hpp"

namespace gmc::graph {

namespace {

bool is_inverse(const Step& a, const Step& b) { return a.edge == b.edge && a.sign == -b.sign; }

// x mu x^-1 for mu = phi_arrival(e): returns phi_departure(e) at the source
// of x, or nothing when mu is not in the edge subgroup.
std::optional<Word> pinch(const Step& x, const Word& mu, const GraphOfGroups& G) {
    const PieceOracle& at = G.piece(G.target(x));
    auto ca = at.boundary_membership(mu, G.arrival_boundary(x));
    if (!ca) return std::nullopt;
    const Vec2 e = G.arrival_matrix(x).unimodular_inverse() * *ca;
    return G.piece(G.source(x)).boundary_word(G.departure_boundary(x), G.departure_matrix(x) * e);
}

void append_path(Form& f, const std::vector<Step>& path) {
    for (const Step& s : path) {
        f.steps.push_back(s);
        f.labels.emplace_back();
    }
}

int vertex_at(const Form& f, std::size_t i, const GraphOfGroups& G) {
    return i == 0 ? f.base : G.target(f.steps[i - 1]);
}

}  // namespace

Form form_of_word(const Word& w, const GraphOfGroups& G, int base, Joining joining) {
    G.require_valid();
    std::map<std::string, int> vertex_of;
    std::vector<const Alphabet*> alphabets;
    for (std::size_t i = 0; i < G.vertices().size(); ++i) {
        vertex_of[G.vertices()[i].id] = static_cast<int>(i);
        alphabets.push_back(&G.vertices()[i].piece->alphabet());
    }
    auto classify = [&](const Letter& l) -> std::pair<int, int> {
        // (vertex, -1) for a vertex letter, (-1, edge) for a stable letter.
        if (l.gen.space.empty()) {
            int e = G.edge_index(l.gen.name);
            if (e < 0) throw UnknownGenerator(l.gen.full());
            return {-1, e};
        }
        auto it = vertex_of.find(l.gen.space);
        if (it == vertex_of.end() || !alphabets[static_cast<std::size_t>(it->second)]->count(l.gen))
            throw UnknownGenerator(l.gen.full());
        return {it->second, -1};
    };

    int start = base;
    if (start < 0) {
        start = G.root();
        if (!w.empty()) {
            auto [v, e] = classify(w.front());
            start = v >= 0 ? v : G.source(Step{e, w.front().sign});
        }
    }
    Form f;
    f.base = start;
    f.labels.emplace_back();
    int cur = start;
    auto move_to = [&](int x, const Letter& l) {
        if (x == cur) return;
        if (joining == Joining::Strict)
            throw ContractViolation("letter " + l.gen.full() + " does not belong to the current vertex '" +
                                    G.vertices()[static_cast<std::size_t>(cur)].id + "'");
        append_path(f, G.tree_path(cur, x));
        cur = x;
    };
    for (const Letter& l : w) {
        auto [v, e] = classify(l);
        if (v >= 0) {
            move_to(v, l);
            f.labels.back().push_back(l);
        } else {
            Step s{e, l.sign};
            move_to(G.source(s), l);
            f.steps.push_back(s);
            f.labels.emplace_back();
            cur = G.target(s);
        }
    }
    if (cur != start) append_path(f, G.tree_path(cur, start));
    return f;
}

Word label(const Form& f, const GraphOfGroups& G) {
    Word out = f.labels[0];
    for (std::size_t i = 0; i < f.steps.size(); ++i) {
        Word x = G.step_word(f.steps[i]);
        out.insert(out.end(), x.begin(), x.end());
        out.insert(out.end(), f.labels[i + 1].begin(), f.labels[i + 1].end());
    }
    return out;
}

namespace {

Form reduce_counting(const Form& f, const GraphOfGroups& G, std::size_t& eliminations) {
    Form out;
    out.base = f.base;
    out.labels.push_back(G.piece(f.base).simplify(f.labels[0]));
    for (std::size_t i = 0; i < f.steps.size(); ++i) {
        const Step& s = f.steps[i];
        const Word& next = f.labels[i + 1];
        if (!out.steps.empty() && is_inverse(out.steps.back(), s)) {
            if (auto rep = pinch(out.steps.back(), out.labels.back(), G)) {
                out.steps.pop_back();
                out.labels.pop_back();
                const int v = vertex_at(out, out.steps.size(), G);
                out.labels.back() = G.piece(v).simplify(concat(concat(out.labels.back(), *rep), next));
                ++eliminations;
                continue;
            }
        }
        out.steps.push_back(s);
        out.labels.push_back(G.piece(G.target(s)).simplify(next));
    }
    return out;
}

}  // namespace

Form reduce(const Form& f, const GraphOfGroups& G) {
    std::size_t n = 0;
    return reduce_counting(f, G, n);
}

CyclicFormResult cyclically_reduce(const Form& f, const GraphOfGroups& G) {
    CyclicFormResult r;
    r.form = reduce_counting(f, G, r.eliminations);
    Word C;
    while (r.form.length() > 0) {
        Form& cur = r.form;
        const std::size_t n = cur.length();
        const PieceOracle& base = G.piece(cur.base);
        if (!base.word_problem(cur.labels[n])) {
            // Conjugate by the trailing label.
            const Word y = cur.labels[n];
            cur.labels[0] = base.simplify(concat(y, cur.labels[0]));
            cur.labels[n].clear();
            C = concat(C, gmc::inverse(y));
        } else {
            cur.labels[n].clear();
        }
        const Step xn = cur.steps[n - 1];
        if (!is_inverse(xn, cur.steps[0])) break;
        auto rep = pinch(xn, cur.labels[0], G);
        if (!rep) break;
        // x_n (mu_0 x_1 mu_1 ... mu_{n-1} x_n) x_n^-1 = phi(e) mu_1 x_2 ... mu_{n-1}
        Form next;
        next.base = G.target(cur.steps[0]);
        next.labels.push_back(G.piece(next.base).simplify(concat(*rep, cur.labels[1])));
        for (std::size_t i = 1; i + 1 < n; ++i) {
            next.steps.push_back(cur.steps[i]);
            next.labels.push_back(cur.labels[i + 1]);
        }
        C = concat(C, gmc::inverse(G.step_word(xn)));
        ++r.eliminations;
        r.form = reduce_counting(next, G, r.eliminations);
    }
    r.conjugator = free_reduce(C);
    return r;
}

bool is_cyclically_reduced(const Form& f, const GraphOfGroups& G) {
    Form r = reduce(f, G);
    if (r.length() != f.length()) return false;
    if (f.length() == 0) return true;
    const std::size_t n = f.length();
    if (!G.piece(f.base).word_problem(f.labels[n])) return false;
    return !(is_inverse(f.steps[n - 1], f.steps[0]) && pinch(f.steps[n - 1], f.labels[0], G));
}

bool gog_word_problem(const Word& w, const GraphOfGroups& G) {
    Form r = reduce(form_of_word(w, G, -1, Joining::Tree), G);
    if (r.length() > 0) return false;
    return G.piece(r.base).word_problem(r.labels[0]);
}

std::optional<std::string> canonical_key(const Word& w, const GraphOfGroups& G) {
    Form f = reduce(form_of_word(w, G, G.root(), Joining::Tree), G);
    std::string key;
    for (std::size_t i = 0; i < f.length(); ++i) {
        const Step& x = f.steps[i];
        const int v = vertex_at(f, i, G);
        auto split = G.piece(v).coset_split(f.labels[i], G.departure_boundary(x));
        if (!split) return std::nullopt;
        // mu = r phi_dep(e), phi_dep(e) x = x phi_arr(e)
        const Vec2 e = G.departure_matrix(x).unimodular_inverse() * split->second;
        const Word carried = G.piece(G.target(x)).boundary_word(G.arrival_boundary(x), G.arrival_matrix(x) * e);
        f.labels[i + 1] = concat(carried, f.labels[i + 1]);
        key += G.piece(v).key(split->first);
        key += x.sign > 0 ? " >" : " <";
        key += G.edges()[static_cast<std::size_t>(x.edge)].id;
        key += "> ";
    }
    key += G.piece(vertex_at(f, f.length(), G)).key(f.labels[f.length()]);
    return key;
}

}  // namespace gmc::graph
