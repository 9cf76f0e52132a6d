#pragma once

#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "conj/hyperbolic.hpp"
#include "conj/klein.hpp"
#include "conj/lattice.hpp"
#include "conj/seifert.hpp"
#include "conj/solution_sets.hpp"
#include "conj/words.hpp"

// Graphs of groups whose vertex groups are Seifert, Klein-bundle or
// hyperbolic pieces glued along Z^2 boundary subgroups.
namespace gmc::graph {

struct PieceConjugacy {
    std::optional<Word> witness;  // witness . v . witness^-1 == u
    bool exact = true;            // false: negative only up to a search radius
};

// The contract every vertex solver fulfils.
class PieceOracle {
public:
    virtual ~PieceOracle() = default;

    virtual std::string kind() const = 0;
    virtual Presentation presentation() const = 0;
    virtual const Alphabet& alphabet() const = 0;
    virtual int boundary_count() const = 0;
    virtual bool word_problem(const Word& w) const = 0;
    // Equal strings iff equal elements.
    virtual std::string key(const Word& w) const = 0;
    // A shorter word for the same element where a normal form exists.
    virtual Word simplify(const Word& w) const = 0;
    virtual Word boundary_word(int k, const Vec2& coords) const = 0;
    virtual std::optional<Vec2> boundary_membership(const Word& w, int k) const = 0;
    virtual ParallelismSet boundary_parallelism(const Word& w, int k) const = 0;
    virtual CosetSolutionSet two_cosets(const Word& u, const Word& v, int k1, int k2) const = 0;
    virtual PieceConjugacy conjugacy(const Word& u, const Word& v) const = 0;
    // Fiber slopes of boundary k in its basis; empty for hyperbolic pieces.
    virtual std::vector<Vec2> fiber_slopes(int k) const = 0;
    // w = rep . boundary_word(k, t) with rep depending only on the coset w T_k.
    // Empty when the piece has no computable transversal.
    virtual std::optional<std::pair<Word, Vec2>> coset_split(const Word& w, int k) const = 0;
    virtual std::string excluded_reason() const { return {}; }
    virtual std::vector<std::string> warnings() const { return {}; }
};

std::shared_ptr<PieceOracle> make_seifert(seifert::SeifertPiece piece);
std::shared_ptr<PieceOracle> make_klein(std::string space);
std::shared_ptr<PieceOracle> make_hyperbolic(hyperbolic::HyperbolicPiece piece);

struct Vertex {
    std::string id;
    std::shared_ptr<PieceOracle> piece;
};

// Stable letter t_e is the global generator named by the edge id. Edge
// coordinates are the origin boundary basis; the end side sees A * c.
struct Edge {
    std::string id;
    int origin = 0;
    int origin_boundary = 1;
    int end = 0;
    int end_boundary = 1;
    Mat2 gluing;
};

struct ValidationReport {
    std::vector<std::string> errors;
    std::vector<std::string> warnings;
    bool ok() const { return errors.empty(); }
};

// One step of a loop: edge traversed origin -> end (sign +1) or back.
struct Step {
    int edge = 0;
    int sign = 1;
    friend bool operator==(const Step&, const Step&) = default;
};

// mu_0 x_1 mu_1 ... x_n mu_n with mu_i a word of the vertex group at v_i.
struct Form {
    int base = 0;
    std::vector<Word> labels;  // n + 1 labels
    std::vector<Step> steps;

    std::size_t length() const { return steps.size(); }
};

enum class Joining {
    Strict,  // inconsistent vertex transitions are errors
    Tree     // join with maximal tree paths (tree letters are trivial)
};

class GraphOfGroups {
public:
    GraphOfGroups(std::vector<Vertex> vertices, std::vector<Edge> edges);

    const std::vector<Vertex>& vertices() const { return vertices_; }
    const std::vector<Edge>& edges() const { return edges_; }
    int vertex_index(const std::string& id) const;  // -1 if absent
    int edge_index(const std::string& id) const;
    const PieceOracle& piece(int v) const { return *vertices_[static_cast<std::size_t>(v)].piece; }
    GeneratorId stable_letter(int e) const { return GeneratorId("", edges_[static_cast<std::size_t>(e)].id); }
    Alphabet alphabet() const;

    const ValidationReport& report() const { return report_; }
    bool valid() const { return report_.ok(); }
    // Throws DomainError listing the validation errors.
    void require_valid() const;

    int root() const { return root_; }
    bool is_tree_edge(int e) const { return tree_[static_cast<std::size_t>(e)]; }
    // Tree path from the root to v.
    const std::vector<Step>& tree_path(int v) const { return tree_paths_[static_cast<std::size_t>(v)]; }
    std::vector<Step> tree_path(int from, int to) const;

    // Geometry of a step.
    int source(const Step& s) const;
    int target(const Step& s) const;
    int departure_boundary(const Step& s) const;
    int arrival_boundary(const Step& s) const;
    // Boundary basis change from edge coordinates on each side.
    Mat2 departure_matrix(const Step& s) const;
    Mat2 arrival_matrix(const Step& s) const;
    Word step_word(const Step& s) const;

private:
    void validate();
    void build_tree();

    std::vector<Vertex> vertices_;
    std::vector<Edge> edges_;
    ValidationReport report_;
    int root_ = 0;
    std::vector<bool> tree_;
    std::vector<std::vector<Step>> tree_paths_;
};

ValidationReport validate_graph(const GraphOfGroups& G);
Presentation to_presentation(const GraphOfGroups& G);

// Forms and reduction.
Form form_of_word(const Word& w, const GraphOfGroups& G, int base = -1, Joining joining = Joining::Strict);
Word label(const Form& f, const GraphOfGroups& G);
// Removes every pinch x mu x^-1 with mu in the edge subgroup.
Form reduce(const Form& f, const GraphOfGroups& G);

struct CyclicFormResult {
    Form form;
    Word conjugator;  // conjugator . label(form) . conjugator^-1 == label(input)
    std::size_t eliminations = 0;
};
CyclicFormResult cyclically_reduce(const Form& f, const GraphOfGroups& G);
bool is_cyclically_reduced(const Form& f, const GraphOfGroups& G);

bool gog_word_problem(const Word& w, const GraphOfGroups& G);
// Canonical string for the element of w, or empty when some piece on the
// way has no transversal.
std::optional<std::string> canonical_key(const Word& w, const GraphOfGroups& G);

struct ConjugacyAnswer {
    enum class Verdict { Conjugate, NotConjugate, NotConjugateRadiusConditional };
    Verdict verdict = Verdict::NotConjugate;
    Word witness;  // witness . v . witness^-1 == u
    // "a" length mismatch, "i" same vertex, "ii" edge path, "iii-c" .. "iii-g"
    std::string case_tag;
    std::vector<std::string> path;    // case ii
    std::optional<Vec2> edge_coords;  // case iii: the edge element carrying the conjugation
    std::size_t rotation = 0;
    std::size_t length_u = 0;
    std::size_t length_v = 0;

    bool conjugate() const { return verdict == Verdict::Conjugate; }
    std::string verdict_name() const;
};

ConjugacyAnswer decide_conjugacy(const Word& u, const Word& v, const GraphOfGroups& G);

}  // namespace gmc::graph
