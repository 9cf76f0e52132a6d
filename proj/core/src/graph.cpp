#include "conj/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "conj/errors.hpp"

namespace gmc::graph {

namespace {

bool lex_less(const freeprod::NF& a, const freeprod::NF& b) {
    if (a.length() != b.length()) return a.length() < b.length();
    for (std::size_t i = 0; i < a.length(); ++i) {
        if (a.syl[i].factor != b.syl[i].factor) return a.syl[i].factor < b.syl[i].factor;
        if (a.syl[i].exp != b.syl[i].exp) return a.syl[i].exp < b.syl[i].exp;
    }
    return false;
}

class SeifertOracle final : public PieceOracle {
public:
    explicit SeifertOracle(seifert::SeifertPiece p) : p_(std::move(p)) {}

    std::string kind() const override { return "seifert"; }
    Presentation presentation() const override { return p_.presentation(); }
    const Alphabet& alphabet() const override { return p_.alphabet(); }
    int boundary_count() const override { return p_.boundary_count(); }
    bool word_problem(const Word& w) const override { return p_.word_problem(w); }
    std::string key(const Word& w) const override { return p_.key(w); }
    Word simplify(const Word& w) const override { return p_.to_word(p_.normalize(w)); }
    Word boundary_word(int k, const Vec2& c) const override { return p_.boundary_word(k, c); }
    std::optional<Vec2> boundary_membership(const Word& w, int k) const override {
        return p_.boundary_membership(w, k);
    }
    ParallelismSet boundary_parallelism(const Word& w, int k) const override {
        return p_.boundary_parallelism(w, k);
    }
    CosetSolutionSet two_cosets(const Word& u, const Word& v, int k1, int k2) const override {
        return p_.two_cosets(u, v, k1, k2);
    }
    PieceConjugacy conjugacy(const Word& u, const Word& v) const override { return {p_.conjugacy(u, v), true}; }
    std::vector<Vec2> fiber_slopes(int) const override { return {{0, 1}}; }
    std::optional<std::pair<Word, Vec2>> coset_split(const Word& w, int k) const override {
        const auto& Q = p_.quotient();
        const freeprod::NF q = p_.normalize(w).quotient;
        const freeprod::NF& d = p_.boundary_quotient(k);
        // Shortest, then least, element of q <d> in a window around q.
        const long long bound = 2 * static_cast<long long>(q.length()) + 2;
        freeprod::NF best = q, pos = q, neg = q;
        const freeprod::NF dinv = freeprod::inverse(Q, d);
        for (long long a = 1; a <= bound; ++a) {
            pos = freeprod::multiply(Q, pos, d);
            neg = freeprod::multiply(Q, neg, dinv);
            if (lex_less(pos, best)) best = pos;
            if (lex_less(neg, best)) best = neg;
        }
        Word rep = freeprod::to_word(Q, best);
        auto t = p_.boundary_membership(concat(gmc::inverse(rep), w), k);
        if (!t) throw ContractViolation("coset_split: residue outside the boundary subgroup");
        return std::make_pair(rep, *t);
    }
    std::string excluded_reason() const override { return p_.excluded_reason(); }
    std::vector<std::string> warnings() const override { return p_.warnings(); }

private:
    seifert::SeifertPiece p_;
};

class KleinOracle final : public PieceOracle {
public:
    explicit KleinOracle(std::string space) : space_(std::move(space)), alphabet_(presentation().alphabet()) {}

    std::string kind() const override { return "klein"; }
    Presentation presentation() const override {
        GeneratorId a(space_, "a"), b(space_, "b");
        return Presentation{{a, b}, {{Letter(a, 1), Letter(b, 1), Letter(a, -1), Letter(b, 1)}}};
    }
    const Alphabet& alphabet() const override { return alphabet_; }
    int boundary_count() const override { return 1; }
    bool word_problem(const Word& w) const override { return nf(w) == klein::KleinNF{}; }
    std::string key(const Word& w) const override { return nf(w).str(); }
    Word simplify(const Word& w) const override { return klein::to_word(nf(w), space_); }
    Word boundary_word(int k, const Vec2& c) const override {
        check(k);
        return klein::to_word(klein::from_boundary(c), space_);
    }
    std::optional<Vec2> boundary_membership(const Word& w, int k) const override {
        check(k);
        return klein::klein_boundary_membership(nf(w));
    }
    ParallelismSet boundary_parallelism(const Word& w, int k) const override {
        check(k);
        return klein::klein_boundary_parallelism(nf(w), space_);
    }
    CosetSolutionSet two_cosets(const Word& u, const Word& v, int k1, int k2) const override {
        check(k1);
        check(k2);
        return klein::klein_two_cosets(nf(u), nf(v));
    }
    PieceConjugacy conjugacy(const Word& u, const Word& v) const override {
        auto g = klein::klein_conjugacy(nf(u), nf(v));
        if (!g) return {std::nullopt, true};
        return {klein::to_word(*g, space_), true};
    }
    std::vector<Vec2> fiber_slopes(int) const override { return {{1, 0}, {0, 1}}; }
    std::optional<std::pair<Word, Vec2>> coset_split(const Word& w, int k) const override {
        check(k);
        klein::KleinNF x = nf(w);
        if (x.n % 2 == 0) return std::make_pair(Word{}, Vec2{x.n / 2, x.m});
        klein::KleinNF rest = klein::multiply(klein::inverse({1, 0}), x);
        return std::make_pair(letter_word(GeneratorId(space_, "a")), Vec2{rest.n / 2, rest.m});
    }

private:
    klein::KleinNF nf(const Word& w) const {
        for (const Letter& l : w)
            if (l.gen.space != space_) throw UnknownGenerator(l.gen.full());
        return klein::klein_normalize(w);
    }
    void check(int k) const {
        if (k != 1) throw ContractViolation("klein piece has a single boundary component, got " + std::to_string(k));
    }
    std::string space_;
    Alphabet alphabet_;
};

class HyperbolicOracle final : public PieceOracle {
public:
    explicit HyperbolicOracle(hyperbolic::HyperbolicPiece p) : p_(std::move(p)) {}

    std::string kind() const override { return "hyperbolic"; }
    Presentation presentation() const override { return p_.presentation(); }
    const Alphabet& alphabet() const override { return p_.alphabet(); }
    int boundary_count() const override { return p_.boundary_count(); }
    bool word_problem(const Word& w) const override { return p_.word_problem(w); }
    std::string key(const Word& w) const override { return p_.key(w); }
    Word simplify(const Word& w) const override { return free_reduce(w); }
    Word boundary_word(int k, const Vec2& c) const override { return p_.boundary_word(k, c); }
    std::optional<Vec2> boundary_membership(const Word& w, int k) const override {
        return p_.boundary_membership(w, k);
    }
    ParallelismSet boundary_parallelism(const Word& w, int k) const override {
        return p_.boundary_parallelism(w, k);
    }
    CosetSolutionSet two_cosets(const Word& u, const Word& v, int k1, int k2) const override {
        return p_.two_cosets(u, v, k1, k2);
    }
    PieceConjugacy conjugacy(const Word& u, const Word& v) const override {
        auto r = p_.conjugacy(u, v);
        return {r.witness, r.exact};
    }
    std::vector<Vec2> fiber_slopes(int) const override { return {}; }
    std::optional<std::pair<Word, Vec2>> coset_split(const Word&, int) const override { return std::nullopt; }

private:
    hyperbolic::HyperbolicPiece p_;
};

std::vector<Step> inverse_path(const std::vector<Step>& p) {
    std::vector<Step> out;
    for (auto it = p.rbegin(); it != p.rend(); ++it) out.push_back({it->edge, -it->sign});
    return out;
}

}  // namespace

std::shared_ptr<PieceOracle> make_seifert(seifert::SeifertPiece piece) {
    return std::make_shared<SeifertOracle>(std::move(piece));
}
std::shared_ptr<PieceOracle> make_klein(std::string space) { return std::make_shared<KleinOracle>(std::move(space)); }
std::shared_ptr<PieceOracle> make_hyperbolic(hyperbolic::HyperbolicPiece piece) {
    return std::make_shared<HyperbolicOracle>(std::move(piece));
}

GraphOfGroups::GraphOfGroups(std::vector<Vertex> vertices, std::vector<Edge> edges)
    : vertices_(std::move(vertices)), edges_(std::move(edges)) {
    validate();
    if (report_.ok()) build_tree();
}

int GraphOfGroups::vertex_index(const std::string& id) const {
    for (std::size_t i = 0; i < vertices_.size(); ++i)
        if (vertices_[i].id == id) return static_cast<int>(i);
    return -1;
}

int GraphOfGroups::edge_index(const std::string& id) const {
    for (std::size_t i = 0; i < edges_.size(); ++i)
        if (edges_[i].id == id) return static_cast<int>(i);
    return -1;
}

Alphabet GraphOfGroups::alphabet() const {
    Alphabet out;
    for (const Vertex& v : vertices_) {
        const Alphabet& a = v.piece->alphabet();
        out.insert(a.begin(), a.end());
    }
    for (std::size_t e = 0; e < edges_.size(); ++e) out.insert(stable_letter(static_cast<int>(e)));
    return out;
}

void GraphOfGroups::require_valid() const {
    if (report_.ok()) return;
    std::string msg = "invalid graph of groups:";
    for (const auto& e : report_.errors) msg += "\n  " + e;
    throw DomainError(msg);
}

void GraphOfGroups::validate() {
    auto& err = report_.errors;
    if (vertices_.empty()) err.push_back("graph has no vertices");
    std::set<std::string> ids;
    for (const Vertex& v : vertices_) {
        if (v.id.empty()) err.push_back("vertex with empty id");
        if (!ids.insert(v.id).second) err.push_back("duplicate vertex id '" + v.id + "'");
        if (!v.piece) {
            err.push_back("vertex '" + v.id + "' has no piece");
            continue;
        }
        if (auto why = v.piece->excluded_reason(); !why.empty())
            err.push_back("vertex '" + v.id + "' is excluded from graph manifolds: " + why);
        for (const auto& w : v.piece->warnings()) report_.warnings.push_back("vertex '" + v.id + "': " + w);
    }
    std::set<std::string> eids;
    std::set<std::pair<int, int>> used;
    const int nv = static_cast<int>(vertices_.size());
    for (const Edge& e : edges_) {
        const std::string tag = "edge '" + e.id + "': ";
        if (e.id.empty()) err.push_back("edge with empty id");
        if (ids.count(e.id)) err.push_back(tag + "id clashes with a vertex id");
        if (!eids.insert(e.id).second) err.push_back("duplicate edge id '" + e.id + "'");
        if (e.origin < 0 || e.origin >= nv || e.end < 0 || e.end >= nv) {
            err.push_back(tag + "endpoint is not a vertex");
            continue;
        }
        bool ends_ok = true;
        for (auto [v, k] : {std::pair{e.origin, e.origin_boundary}, std::pair{e.end, e.end_boundary}}) {
            const auto& piece = vertices_[static_cast<std::size_t>(v)].piece;
            if (!piece) {
                ends_ok = false;
                continue;
            }
            if (k < 1 || k > piece->boundary_count()) {
                err.push_back(tag + "boundary index " + std::to_string(k) + " does not exist on vertex '" +
                              vertices_[static_cast<std::size_t>(v)].id + "'");
                ends_ok = false;
                continue;
            }
            if (!used.insert({v, k}).second)
                err.push_back(tag + "boundary " + std::to_string(k) + " of vertex '" +
                              vertices_[static_cast<std::size_t>(v)].id + "' is already glued");
        }
        const long long det = e.gluing.det();
        if (det != 1 && det != -1) {
            err.push_back(tag + "gluing matrix " + e.gluing.str() + " has determinant " + std::to_string(det));
            continue;
        }
        if (!ends_ok) continue;
        const auto& po = vertices_[static_cast<std::size_t>(e.origin)].piece;
        const auto& pe = vertices_[static_cast<std::size_t>(e.end)].piece;
        for (const Vec2& fo : po->fiber_slopes(e.origin_boundary)) {
            for (const Vec2& fe : pe->fiber_slopes(e.end_boundary)) {
                Vec2 img = e.gluing * fo;
                if (img == fe || img == -fe)
                    err.push_back(tag + "gluing maps the fiber slope " + fo.str() + " to the fiber slope " +
                                  fe.str() + " of the other side; the pieces would share a fibration");
            }
        }
    }
    if (vertices_.size() == 2 && edges_.size() == 1) {
        bool all_klein = true;
        for (const Vertex& v : vertices_) all_klein = all_klein && v.piece && v.piece->kind() == "klein";
        if (all_klein) err.push_back("graph is the double of the twisted I-bundle over the Klein bottle; use a sol block");
    }
    // Connectivity.
    if (!vertices_.empty() && err.empty()) {
        std::vector<bool> seen(vertices_.size(), false);
        std::deque<int> q{0};
        seen[0] = true;
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (const Edge& e : edges_) {
                for (auto [a, b] : {std::pair{e.origin, e.end}, std::pair{e.end, e.origin}}) {
                    if (a == x && !seen[static_cast<std::size_t>(b)]) {
                        seen[static_cast<std::size_t>(b)] = true;
                        q.push_back(b);
                    }
                }
            }
        }
        for (std::size_t i = 0; i < vertices_.size(); ++i)
            if (!seen[i]) err.push_back("vertex '" + vertices_[i].id + "' is not connected to the rest of the graph");
    }
}

void GraphOfGroups::build_tree() {
    root_ = 0;
    for (std::size_t i = 1; i < vertices_.size(); ++i)
        if (vertices_[i].id < vertices_[static_cast<std::size_t>(root_)].id) root_ = static_cast<int>(i);
    tree_.assign(edges_.size(), false);
    tree_paths_.assign(vertices_.size(), {});
    std::vector<bool> seen(vertices_.size(), false);
    seen[static_cast<std::size_t>(root_)] = true;
    std::deque<int> q{root_};
    while (!q.empty()) {
        int x = q.front();
        q.pop_front();
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            for (int sign : {1, -1}) {
                Step s{static_cast<int>(e), sign};
                if (source(s) != x) continue;
                int y = target(s);
                if (seen[static_cast<std::size_t>(y)]) continue;
                seen[static_cast<std::size_t>(y)] = true;
                tree_[e] = true;
                tree_paths_[static_cast<std::size_t>(y)] = tree_paths_[static_cast<std::size_t>(x)];
                tree_paths_[static_cast<std::size_t>(y)].push_back(s);
                q.push_back(y);
            }
        }
    }
}

std::vector<Step> GraphOfGroups::tree_path(int from, int to) const {
    const auto& a = tree_path(from);
    const auto& b = tree_path(to);
    // Drop the common prefix of the two root paths.
    std::size_t common = 0;
    while (common < a.size() && common < b.size() && a[common] == b[common]) ++common;
    std::vector<Step> out = inverse_path({a.begin() + static_cast<std::ptrdiff_t>(common), a.end()});
    out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(common), b.end());
    return out;
}

int GraphOfGroups::source(const Step& s) const {
    const Edge& e = edges_[static_cast<std::size_t>(s.edge)];
    return s.sign > 0 ? e.origin : e.end;
}

int GraphOfGroups::target(const Step& s) const {
    const Edge& e = edges_[static_cast<std::size_t>(s.edge)];
    return s.sign > 0 ? e.end : e.origin;
}

int GraphOfGroups::departure_boundary(const Step& s) const {
    const Edge& e = edges_[static_cast<std::size_t>(s.edge)];
    return s.sign > 0 ? e.origin_boundary : e.end_boundary;
}

int GraphOfGroups::arrival_boundary(const Step& s) const {
    const Edge& e = edges_[static_cast<std::size_t>(s.edge)];
    return s.sign > 0 ? e.end_boundary : e.origin_boundary;
}

Mat2 GraphOfGroups::departure_matrix(const Step& s) const {
    return s.sign > 0 ? Mat2::identity() : edges_[static_cast<std::size_t>(s.edge)].gluing;
}

Mat2 GraphOfGroups::arrival_matrix(const Step& s) const {
    return s.sign > 0 ? edges_[static_cast<std::size_t>(s.edge)].gluing : Mat2::identity();
}

Word GraphOfGroups::step_word(const Step& s) const { return {Letter(stable_letter(s.edge), s.sign)}; }

ValidationReport validate_graph(const GraphOfGroups& G) { return G.report(); }

Presentation to_presentation(const GraphOfGroups& G) {
    G.require_valid();
    Presentation out;
    for (const Vertex& v : G.vertices()) {
        Presentation p = v.piece->presentation();
        out.generators.insert(out.generators.end(), p.generators.begin(), p.generators.end());
        out.relators.insert(out.relators.end(), p.relators.begin(), p.relators.end());
    }
    for (std::size_t i = 0; i < G.edges().size(); ++i) {
        const Edge& e = G.edges()[i];
        const GeneratorId t = G.stable_letter(static_cast<int>(i));
        out.generators.push_back(t);
        const PieceOracle& po = G.piece(e.origin);
        const PieceOracle& pe = G.piece(e.end);
        for (const Vec2& c : {Vec2{1, 0}, Vec2{0, 1}}) {
            // t phi+(c) t^-1 = phi-(c)
            Word plus = pe.boundary_word(e.end_boundary, e.gluing * c);
            Word minus = po.boundary_word(e.origin_boundary, c);
            Word r{Letter(t, 1)};
            r.insert(r.end(), plus.begin(), plus.end());
            r.emplace_back(t, -1);
            Word mi = gmc::inverse(minus);
            r.insert(r.end(), mi.begin(), mi.end());
            out.relators.push_back(r);
        }
        if (G.is_tree_edge(static_cast<int>(i))) out.relators.push_back({Letter(t, 1)});
    }
    return out;
}

std::string ConjugacyAnswer::verdict_name() const {
    switch (verdict) {
        case Verdict::Conjugate: return "true";
        case Verdict::NotConjugate: return "false";
        case Verdict::NotConjugateRadiusConditional: return "false-radius-conditional";
    }
    return "?";
}

}  // namespace gmc::graph
