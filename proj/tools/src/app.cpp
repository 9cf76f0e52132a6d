#include "conj_app/app.hpp"

#include <chrono>
#include <cstdlib>
#include <memory>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>
#include <spdlog/sinks/ostream_sink.h>
#include <spdlog/spdlog.h>

#include "conj/errors.hpp"
#include "conj/graph.hpp"
#include "conj/oracle.hpp"
#include "conj/sol.hpp"
#include "conj_app/manifest.hpp"

namespace gmc::app {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
    std::string file;
    std::string u, v;
    bool verify = false;
    std::size_t verify_radius = 4;
    bool json = false;
    std::string op;
    std::vector<std::string> rest;
};

std::shared_ptr<spdlog::logger> make_logger(std::ostream& err) {
    auto sink = std::make_shared<spdlog::sinks::ostream_sink_st>(err);
    auto log = std::make_shared<spdlog::logger>("conj", sink);
    log->set_pattern("[%l] %v");
    log->set_level(spdlog::level::warn);
    if (const char* env = std::getenv("CONJ_LOG")) {
        auto level = spdlog::level::from_str(env);
        // from_str maps unknown names to off
        if (level != spdlog::level::off || std::string(env) == "off") log->set_level(level);
    }
    return log;
}

std::string scalar_text(const Json& j) { return j.is_string() ? j.get<std::string>() : j.dump(); }

void emit_text(const Json& j, std::ostream& out, const std::string& prefix = "") {
    for (const auto& [k, v] : j.items()) {
        std::string key = prefix.empty() ? k : prefix + "." + k;
        if (v.is_object())
            emit_text(v, out, key);
        else
            out << key << ": " << scalar_text(v) << "\n";
    }
}

void emit(const Json& j, const Options& o, std::ostream& out) {
    if (o.json)
        out << j.dump(2) << "\n";
    else
        emit_text(j, out);
}

Json vec(const Vec2& v) { return Json::array({v.x, v.y}); }
Json mat(const Mat2& m) { return Json::array({Json::array({m.a, m.b}), Json::array({m.c, m.d})}); }

Word parse_in(const std::string& text, const Alphabet& alphabet) { return parse_word(text, alphabet); }

const graph::GraphOfGroups& require_graph(const Manifest& m) {
    if (!m.graph) throw DomainError("this command needs a graph manifest, not a sol block");
    m.graph->require_valid();
    return *m.graph;
}

oracle::GroupHandle graph_handle(const graph::GraphOfGroups& G) {
    oracle::GroupHandle H{G.alphabet(), [&G](const Word& w) { return graph::gog_word_problem(w, G); }, {}};
    if (graph::canonical_key(Word{}, G))
        H.key = [&G](const Word& w) { return *graph::canonical_key(w, G); };
    return H;
}

int cmd_validate(const Options& o, std::ostream& out, std::ostream& err) {
    Json j;
    int code = kOk;
    try {
        Manifest m = load_manifest(o.file);
        if (m.sol) {
            j["kind"] = m.sol->kind == SolBlock::Kind::TorusBundle ? "torus-bundle" : "double-klein";
            j["matrix"] = mat(m.sol->matrix);
            try {
                if (m.sol->kind == SolBlock::Kind::TorusBundle) {
                    sol::TorusBundleGroup G(m.sol->matrix);
                } else {
                    sol::DoubleKleinGroup G(m.sol->matrix);
                    j["derived_matrix"] = mat(G.derived_matrix());
                }
                j["valid"] = true;
                j["errors"] = Json::array();
            } catch (const DomainError& e) {
                j["valid"] = false;
                j["errors"] = Json::array({e.what()});
                code = kDomainError;
            }
        } else {
            const auto& G = *m.graph;
            const auto& r = G.report();
            j["kind"] = "graph";
            j["pieces"] = G.vertices().size();
            j["edges"] = G.edges().size();
            j["valid"] = r.ok();
            j["errors"] = r.errors;
            j["warnings"] = r.warnings;
            if (!r.ok()) code = kDomainError;
        }
    } catch (const DomainError& e) {
        j["valid"] = false;
        j["errors"] = Json::array({e.what()});
        code = kDomainError;
    }
    emit(j, o, out);
    if (code != kOk) err << "error: manifest is invalid\n";
    return code;
}

int decide_sol(const Manifest& m, const Options& o, std::ostream& out, spdlog::logger& log) {
    Json j;
    auto finish = [&](bool found, const Word& witness, const Json& cert, const oracle::GroupHandle& H,
                      const Word& u, const Word& v) {
        j["verdict"] = found ? "true" : "false";
        if (found) j["witness"] = format_word(witness);
        j["certificate"] = cert;
        if (o.verify) {
            if (found) {
                Word check = concat({&witness, &v, &static_cast<const Word&>(inverse(witness)), &static_cast<const Word&>(inverse(u))});
                if (!H.word_problem(check)) throw ContractViolation("verification failed: witness does not conjugate");
                j["verify"]["witness"] = "checked";
            } else {
                if (oracle::brute_conjugator(u, v, H, o.verify_radius))
                    throw ContractViolation("verification failed: brute force found a conjugator");
                j["verify"]["radius"] = o.verify_radius;
                j["verify"]["brute_force"] = "no conjugator found";
            }
        }
    };
    if (m.sol->kind == SolBlock::Kind::TorusBundle) {
        sol::TorusBundleGroup G(m.sol->matrix);
        Word u = parse_in(o.u, G.alphabet()), v = parse_in(o.v, G.alphabet());
        log.debug("torus bundle, monodromy {}", m.sol->matrix.str());
        // The solver conjugates its first argument into the second.
        auto w = sol::torus_bundle_conjugacy(G.normalize(v), G.normalize(u), G);
        Json cert;
        cert["case"] = "torus-bundle";
        cert["u"] = G.normalize(u).str();
        cert["v"] = G.normalize(v).str();
        oracle::GroupHandle H{G.alphabet(), [&G](const Word& x) { return G.normalize(x) == sol::TorusElement{}; },
                              [&G](const Word& x) { return G.normalize(x).str(); }};
        finish(w.has_value(), w ? G.to_word(*w) : Word{}, cert, H, u, v);
    } else {
        sol::DoubleKleinGroup G(m.sol->matrix);
        Word u = parse_in(o.u, G.alphabet()), v = parse_in(o.v, G.alphabet());
        auto w = sol::double_klein_conjugacy(G.normalize(v), G.normalize(u), G);
        Json cert;
        cert["case"] = "double-klein";
        cert["derived_matrix"] = mat(G.derived_matrix());
        cert["u"] = G.str(G.normalize(u));
        cert["v"] = G.str(G.normalize(v));
        oracle::GroupHandle H{G.alphabet(),
                              [&G](const Word& x) { return G.normalize(x) == sol::DoubleKleinElement{}; },
                              [&G](const Word& x) { return G.str(G.normalize(x)); }};
        finish(w.has_value(), w ? G.to_word(*w) : Word{}, cert, H, u, v);
    }
    emit(j, o, out);
    return kOk;
}

int cmd_decide(const Options& o, std::ostream& out, spdlog::logger& log) {
    Manifest m = load_manifest(o.file);
    if (m.sol) return decide_sol(m, o, out, log);
    const auto& G = require_graph(m);
    Word u = parse_in(o.u, G.alphabet()), v = parse_in(o.v, G.alphabet());
    auto t0 = std::chrono::steady_clock::now();
    auto ans = graph::decide_conjugacy(u, v, G);
    auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    log.info("decide_conjugacy took {:.3f} ms", ms);
    Json j;
    j["verdict"] = ans.verdict_name();
    if (ans.conjugate()) j["witness"] = format_word(ans.witness);
    Json cert;
    cert["case"] = ans.case_tag;
    cert["length_u"] = ans.length_u;
    cert["length_v"] = ans.length_v;
    cert["path"] = ans.path;
    cert["path_length"] = ans.path.size();
    cert["rotation"] = ans.rotation;
    cert["edge_coords"] = ans.edge_coords ? vec(*ans.edge_coords) : Json();
    j["certificate"] = cert;
    if (o.verify) {
        auto H = graph_handle(G);
        if (ans.conjugate()) {
            Word check = concat({&ans.witness, &v, &static_cast<const Word&>(inverse(ans.witness)),
                                 &static_cast<const Word&>(inverse(u))});
            if (!graph::gog_word_problem(check, G)) throw ContractViolation("verification failed: witness does not conjugate");
            j["verify"]["witness"] = "checked";
        } else {
            if (auto g = oracle::brute_conjugator(u, v, H, o.verify_radius))
                throw ContractViolation("verification failed: brute force found conjugator " + format_word(*g));
            j["verify"]["radius"] = o.verify_radius;
            j["verify"]["brute_force"] = "no conjugator found";
        }
    }
    emit(j, o, out);
    return kOk;
}

int parse_boundary(const std::string& s) {
    std::string digits = (!s.empty() && (s[0] == 'T' || s[0] == 't')) ? s.substr(1) : s;
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
        throw ParseError("bad boundary reference '" + s + "'");
    return std::stoi(digits);
}

int vertex_of(const graph::GraphOfGroups& G, const std::string& id) {
    int v = G.vertex_index(id);
    if (v < 0) throw DomainError("unknown vertex '" + id + "'");
    return v;
}

void check_boundary(const graph::PieceOracle& P, const std::string& id, int k) {
    if (k < 1 || k > P.boundary_count())
        throw DomainError("vertex " + id + " has no boundary T" + std::to_string(k));
}

Json coset_json(const CosetSolutionSet& s, const graph::PieceOracle& P) {
    Json j;
    j["kind"] = s.kind_name();
    j["exact"] = s.exact;
    if (s.is_empty()) return j;
    j["base"] = Json::array({vec(s.base_c), vec(s.base_c2)});
    j["base_words"] = Json::array({format_word(P.boundary_word(s.boundary1, s.base_c)),
                                   format_word(P.boundary_word(s.boundary2, s.base_c2))});
    Json gens = Json::array();
    for (const auto& [a, b] : s.generators) gens.push_back(Json::array({vec(a), vec(b)}));
    j["generators"] = gens;
    if (s.kind == CosetSolutionSet::Kind::HLine) j["epsilon"] = s.epsilon;
    return j;
}

int cmd_sub(const Options& o, std::ostream& out) {
    Manifest m = load_manifest(o.file);
    auto need = [&](std::size_t n) {
        if (o.rest.size() != n)
            throw ParseError("sub " + o.op + " expects " + std::to_string(n) + " argument(s), got " +
                             std::to_string(o.rest.size()));
    };
    Json j;
    if (o.op == "word") {
        need(1);
        bool trivial;
        if (m.sol && m.sol->kind == SolBlock::Kind::TorusBundle) {
            sol::TorusBundleGroup G(m.sol->matrix);
            trivial = G.normalize(parse_in(o.rest[0], G.alphabet())) == sol::TorusElement{};
        } else if (m.sol) {
            sol::DoubleKleinGroup G(m.sol->matrix);
            trivial = G.normalize(parse_in(o.rest[0], G.alphabet())) == sol::DoubleKleinElement{};
        } else {
            const auto& G = require_graph(m);
            trivial = graph::gog_word_problem(parse_in(o.rest[0], G.alphabet()), G);
        }
        j["result"] = trivial;
    } else if (o.op == "reduce") {
        need(1);
        const auto& G = require_graph(m);
        Word w = parse_in(o.rest[0], G.alphabet());
        auto r = graph::cyclically_reduce(graph::form_of_word(w, G, -1, graph::Joining::Tree), G);
        j["length"] = r.form.length();
        j["base"] = G.vertices()[static_cast<std::size_t>(r.form.base)].id;
        Json steps = Json::array(), labels = Json::array();
        for (const auto& s : r.form.steps) steps.push_back(G.edges()[static_cast<std::size_t>(s.edge)].id + (s.sign > 0 ? "" : "^-1"));
        for (const auto& l : r.form.labels) labels.push_back(format_word(l));
        j["steps"] = steps;
        j["labels"] = labels;
        j["word"] = format_word(graph::label(r.form, G));
        j["conjugator"] = format_word(r.conjugator);
        j["eliminations"] = r.eliminations;
    } else if (o.op == "parallel") {
        need(3);
        const auto& G = require_graph(m);
        int vi = vertex_of(G, o.rest[0]);
        const auto& P = G.piece(vi);
        int k = parse_boundary(o.rest[1]);
        check_boundary(P, o.rest[0], k);
        auto s = P.boundary_parallelism(parse_in(o.rest[2], P.alphabet()), k);
        Json set = Json::array();
        for (const auto& e : s.elements) {
            Json x;
            x["coords"] = vec(e.coords);
            x["element"] = format_word(P.boundary_word(k, e.coords));
            x["witness"] = format_word(e.witness);
            set.push_back(x);
        }
        j["boundary"] = "T" + std::to_string(k);
        j["set"] = set;
        j["exact"] = s.exact;
    } else if (o.op == "cosets") {
        need(5);
        const auto& G = require_graph(m);
        int vi = vertex_of(G, o.rest[0]);
        const auto& P = G.piece(vi);
        int k1 = parse_boundary(o.rest[1]), k2 = parse_boundary(o.rest[2]);
        check_boundary(P, o.rest[0], k1);
        check_boundary(P, o.rest[0], k2);
        auto s = P.two_cosets(parse_in(o.rest[3], P.alphabet()), parse_in(o.rest[4], P.alphabet()), k1, k2);
        j = coset_json(s, P);
    } else {
        throw ParseError("unknown sub command '" + o.op + "' (word, parallel, cosets, reduce)");
    }
    emit(j, o, out);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    auto log = make_logger(err);
    Options o;
    CLI::App app{"Conjugacy in graph manifold groups", "conj"};
    app.require_subcommand(1);
    auto* validate = app.add_subcommand("validate", "Validate a manifest");
    validate->add_option("file", o.file, "Manifest path")->required();
    validate->add_flag("--json", o.json, "Emit JSON");
    auto* decide = app.add_subcommand("decide", "Decide whether two words are conjugate");
    decide->add_option("file", o.file, "Manifest path")->required();
    decide->add_option("-u", o.u, "First word")->required();
    decide->add_option("-v", o.v, "Second word")->required();
    decide->add_flag("--verify", o.verify, "Re-check the answer independently");
    decide->add_option("--verify-radius", o.verify_radius, "Brute-force radius for negatives")->capture_default_str();
    decide->add_flag("--json", o.json, "Emit JSON");
    auto* sub = app.add_subcommand("sub", "Run a sub-solver: word | parallel | cosets | reduce");
    sub->add_option("file", o.file, "Manifest path")->required();
    sub->add_option("op", o.op, "word | parallel | cosets | reduce")->required();
    sub->add_option("args", o.rest, "Sub command arguments");
    sub->add_flag("--json", o.json, "Emit JSON");

    std::vector<std::string> rev(args.rbegin(), args.rend());
    try {
        app.parse(rev);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    }
    try {
        if (*validate) return cmd_validate(o, out, err);
        if (*decide) return cmd_decide(o, out, *log);
        return cmd_sub(o, out);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kParseError;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kDomainError;
    }
}

}  // namespace gmc::app
