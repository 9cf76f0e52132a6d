#include <map>

#include "conj/errors.hpp"
#include "conj/graph.hpp"
#include "conj/intlin.hpp"

namespace gmc::graph {

namespace {

using Verdict = ConjugacyAnswer::Verdict;

constexpr std::size_t kAcylindricity = 4;

Word step_inverse_word(const Step& s, const GraphOfGroups& G) { return G.step_word({s.edge, -s.sign}); }

// Length zero: u and v are vertex elements. Search for a chain of boundary
// elements through at most four edges.
ConjugacyAnswer length_zero(const Form& fu, const Form& fv, const GraphOfGroups& G, Word& core) {
    ConjugacyAnswer ans;
    struct State {
        int vertex;
        Word elem;
        Word K;  // K . mu_v . K^-1 == elem
        std::vector<std::string> path;
        std::optional<Step> arrived;
    };
    const int a = fu.base;
    const Word& mu_u = fu.labels[0];
    bool exact = true;
    std::map<int, std::vector<Word>> visited;
    std::vector<State> frontier{{fv.base, fv.labels[0], {}, {}, std::nullopt}};
    visited[fv.base].push_back(fv.labels[0]);
    for (std::size_t depth = 0; depth <= kAcylindricity; ++depth) {
        for (const State& s : frontier) {
            if (s.vertex != a) continue;
            PieceConjugacy pc = G.piece(a).conjugacy(mu_u, s.elem);
            if (pc.witness) {
                core = concat(*pc.witness, s.K);
                ans.verdict = Verdict::Conjugate;
                ans.case_tag = s.path.empty() ? "i" : "ii";
                ans.path = s.path;
                return ans;
            }
            if (!pc.exact) exact = false;
        }
        if (depth == kAcylindricity) break;
        std::vector<State> next;
        for (const State& s : frontier) {
            for (std::size_t e = 0; e < G.edges().size(); ++e) {
                for (int sign : {1, -1}) {
                    const Step x{static_cast<int>(e), sign};
                    if (G.source(x) != s.vertex) continue;
                    if (s.arrived && s.arrived->edge == x.edge && s.arrived->sign == -x.sign) continue;
                    const PieceOracle& here = G.piece(s.vertex);
                    ParallelismSet ps = here.boundary_parallelism(s.elem, G.departure_boundary(x));
                    if (!ps.exact) exact = false;
                    const int y = G.target(x);
                    const PieceOracle& there = G.piece(y);
                    for (const BoundaryConjugate& bc : ps.elements) {
                        const Vec2 ec = G.departure_matrix(x).unimodular_inverse() * bc.coords;
                        Word m = there.boundary_word(G.arrival_boundary(x), G.arrival_matrix(x) * ec);
                        bool seen = false;
                        for (const Word& old : visited[y]) {
                            PieceConjugacy pc = there.conjugacy(m, old);
                            if (pc.witness) {
                                seen = true;
                                break;
                            }
                        }
                        if (seen) continue;
                        visited[y].push_back(m);
                        // phi_X(c) x = x phi_Y(c) and bc.witness phi_X(c) bc.witness^-1 = elem
                        Word K = concat(concat(step_inverse_word(x, G), gmc::inverse(bc.witness)), s.K);
                        std::vector<std::string> path = s.path;
                        path.push_back(G.edges()[e].id);
                        next.push_back({y, std::move(m), std::move(K), std::move(path), x});
                    }
                }
            }
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
    }
    ans.verdict = exact ? Verdict::NotConjugate : Verdict::NotConjugateRadiusConditional;
    ans.case_tag = "ii";
    return ans;
}

std::string loop_case(const Form& f, const GraphOfGroups& G) {
    bool hyperbolic = false, klein = false;
    for (std::size_t i = 0; i < f.length(); ++i) {
        const std::string k = G.piece(G.target(f.steps[i])).kind();
        hyperbolic = hyperbolic || k == "hyperbolic";
        klein = klein || k == "klein";
    }
    if (hyperbolic) return "iii-c";
    if (f.length() == 1) return "iii-e";
    if (klein) return f.length() == 2 ? "iii-f" : "iii-g";
    return "iii-d";
}

// Length n >= 1. For each rotation of v with the same edge loop, the
// conjugating edge elements e_0..e_{n-1} satisfy at every vertex i
//   mu_i = phi_in(-e_{i-1}) . nu_i . phi_out(e_i),
// a 2-cosets problem whose solution sets are chained into one integer system.
ConjugacyAnswer positive_length(const Form& fu, const Form& fv, const GraphOfGroups& G, Word& core) {
    ConjugacyAnswer ans;
    const std::size_t n = fu.length();
    bool exact = true;
    Word prefix;  // p_k = nu_0 y_1 ... nu_{k-1} y_k
    for (std::size_t k = 0; k < n; ++k) {
        if (k > 0) {
            prefix = concat(prefix, fv.labels[k - 1]);
            prefix = concat(prefix, G.step_word(fv.steps[k - 1]));
        }
        bool same_loop = true;
        for (std::size_t i = 0; i < n && same_loop; ++i) same_loop = fv.steps[(k + i) % n] == fu.steps[i];
        if (!same_loop) continue;

        std::vector<CosetSolutionSet> sets;
        bool empty = false;
        for (std::size_t i = 0; i < n && !empty; ++i) {
            const Step& in = fu.steps[(i + n - 1) % n];
            const Step& out = fu.steps[i];
            const int v = G.source(out);
            CosetSolutionSet s = G.piece(v).two_cosets(fu.labels[i], fv.labels[(k + i) % n], G.arrival_boundary(in),
                                                       G.departure_boundary(out));
            if (!s.exact) exact = false;
            if (s.is_empty()) empty = true;
            sets.push_back(std::move(s));
        }
        if (empty) continue;

        std::size_t params = 0;
        for (const auto& s : sets) params += s.generators.size();
        const std::size_t cols = 2 * n + params;
        intlin::Matrix A(4 * n, std::vector<intlin::Int>(cols, intlin::Int(0)));
        std::vector<intlin::Int> b(4 * n, intlin::Int(0));
        std::size_t pcol = 2 * n;
        for (std::size_t i = 0; i < n; ++i) {
            const Step& in = fu.steps[(i + n - 1) % n];
            const Step& out = fu.steps[i];
            const Mat2 Bin = G.arrival_matrix(in), Bout = G.departure_matrix(out);
            const std::size_t ein = 2 * ((i + n - 1) % n), eout = 2 * i, r = 4 * i;
            // -Bin e_in - sum p g.first = base_c
            A[r][ein] -= Bin.a;
            A[r][ein + 1] -= Bin.b;
            A[r + 1][ein] -= Bin.c;
            A[r + 1][ein + 1] -= Bin.d;
            // Bout e_out - sum p g.second = base_c2
            A[r + 2][eout] += Bout.a;
            A[r + 2][eout + 1] += Bout.b;
            A[r + 3][eout] += Bout.c;
            A[r + 3][eout + 1] += Bout.d;
            for (const auto& [g1, g2] : sets[i].generators) {
                A[r][pcol] -= g1.x;
                A[r + 1][pcol] -= g1.y;
                A[r + 2][pcol] -= g2.x;
                A[r + 3][pcol] -= g2.y;
                ++pcol;
            }
            b[r] = sets[i].base_c.x;
            b[r + 1] = sets[i].base_c.y;
            b[r + 2] = sets[i].base_c2.x;
            b[r + 3] = sets[i].base_c2.y;
        }
        auto sol = intlin::solve(A, b);
        if (!sol) continue;
        const Vec2 e_last{sol->particular[2 * (n - 1)].convert_to<long long>(),
                          sol->particular[2 * (n - 1) + 1].convert_to<long long>()};
        const Step& in0 = fu.steps[n - 1];
        const Word a0 = G.piece(fu.base).boundary_word(G.arrival_boundary(in0), G.arrival_matrix(in0) * (-e_last));
        core = concat(a0, gmc::inverse(prefix));
        ans.verdict = Verdict::Conjugate;
        ans.case_tag = loop_case(fu, G);
        ans.edge_coords = e_last;
        ans.rotation = k;
        return ans;
    }
    ans.verdict = exact ? Verdict::NotConjugate : Verdict::NotConjugateRadiusConditional;
    ans.case_tag = loop_case(fu, G);
    return ans;
}

}  // namespace

ConjugacyAnswer decide_conjugacy(const Word& u, const Word& v, const GraphOfGroups& G) {
    G.require_valid();
    const CyclicFormResult ru = cyclically_reduce(form_of_word(u, G, -1, Joining::Tree), G);
    const CyclicFormResult rv = cyclically_reduce(form_of_word(v, G, -1, Joining::Tree), G);
    ConjugacyAnswer ans;
    const std::size_t lu = ru.form.length(), lv = rv.form.length();
    if (lu != lv) {
        ans.verdict = Verdict::NotConjugate;
        ans.case_tag = "a";
    } else {
        Word core;
        ans = lu == 0 ? length_zero(ru.form, rv.form, G, core) : positive_length(ru.form, rv.form, G, core);
        if (ans.conjugate()) {
            ans.witness = free_reduce(concat(concat(ru.conjugator, core), gmc::inverse(rv.conjugator)));
            Word check = concat(concat(ans.witness, v), concat(gmc::inverse(ans.witness), gmc::inverse(u)));
            if (!gog_word_problem(check, G))
                throw ContractViolation("decide_conjugacy: witness failed verification");
        }
    }
    ans.length_u = lu;
    ans.length_v = lv;
    return ans;
}

}  // namespace gmc::graph
