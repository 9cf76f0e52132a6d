#include "conj_app/manifest.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include <yaml-cpp/yaml.h>

#include "conj/errors.hpp"
#include "conj/hyperbolic.hpp"
#include "conj/seifert.hpp"

namespace gmc::app {

namespace {

std::string where(const YAML::Node& n) {
    auto m = n.Mark();
    if (m.line < 0) return "";
    return " (line " + std::to_string(m.line + 1) + ")";
}

const YAML::Node require(const YAML::Node& parent, const std::string& key, const std::string& ctx) {
    if (!parent.IsMap()) throw ParseError(ctx + " must be a table" + where(parent));
    YAML::Node n = parent[key];
    if (!n) throw ParseError(ctx + ": missing key '" + key + "'" + where(parent));
    return n;
}

template <class T>
T scalar(const YAML::Node& n, const std::string& ctx) {
    if (!n.IsScalar()) throw ParseError(ctx + " must be a scalar" + where(n));
    try {
        return n.as<T>();
    } catch (const YAML::Exception&) {
        throw ParseError(ctx + ": bad value '" + n.Scalar() + "'" + where(n));
    }
}

template <class T>
T optional_scalar(const YAML::Node& parent, const std::string& key, T fallback, const std::string& ctx) {
    YAML::Node n = parent[key];
    if (!n) return fallback;
    return scalar<T>(n, ctx + "." + key);
}

void check_keys(const YAML::Node& n, const std::set<std::string>& allowed, const std::string& ctx) {
    for (const auto& kv : n) {
        std::string k = kv.first.as<std::string>();
        if (!allowed.count(k)) throw ParseError(ctx + ": unknown key '" + k + "'" + where(kv.first));
    }
}

Mat2 matrix(const YAML::Node& n, const std::string& ctx) {
    if (!n.IsSequence() || n.size() != 2) throw ParseError(ctx + " must be two rows" + where(n));
    long long e[4];
    for (std::size_t r = 0; r < 2; ++r) {
        if (!n[r].IsSequence() || n[r].size() != 2) throw ParseError(ctx + " rows must have two entries" + where(n[r]));
        for (std::size_t c = 0; c < 2; ++c) e[2 * r + c] = scalar<long long>(n[r][c], ctx);
    }
    return {e[0], e[1], e[2], e[3]};
}

std::vector<long long> int_list(const YAML::Node& n, const std::string& ctx) {
    if (n.IsScalar()) return {scalar<long long>(n, ctx)};
    if (!n.IsSequence()) throw ParseError(ctx + " must be an integer or a list of integers" + where(n));
    std::vector<long long> out;
    for (const auto& x : n) out.push_back(scalar<long long>(x, ctx));
    return out;
}

Word word(const YAML::Node& n, const std::string& space, const std::string& ctx) {
    std::string text = scalar<std::string>(n, ctx);
    try {
        return with_space(parse_word(text), space);
    } catch (const ParseError& e) {
        throw ParseError(ctx + ": " + e.what() + where(n));
    }
}

std::shared_ptr<graph::PieceOracle> seifert_piece(const YAML::Node& p, const std::string& id) {
    const std::string ctx = "piece " + id;
    check_keys(p, {"id", "kind", "base", "genus", "boundary", "b", "exceptional"}, ctx);
    seifert::Invariants inv;
    std::string base = optional_scalar<std::string>(p, "base", "orientable", ctx);
    if (base != "orientable" && base != "nonorientable")
        throw ParseError(ctx + ": base must be orientable or nonorientable");
    inv.orientable_base = base == "orientable";
    inv.genus = optional_scalar<int>(p, "genus", 0, ctx);
    inv.boundary = optional_scalar<int>(p, "boundary", 1, ctx);
    inv.b = optional_scalar<long long>(p, "b", 0, ctx);
    if (YAML::Node ex = p["exceptional"]) {
        if (!ex.IsSequence()) throw ParseError(ctx + ".exceptional must be a list of pairs" + where(ex));
        for (const auto& f : ex) {
            auto ab = int_list(f, ctx + ".exceptional");
            if (ab.size() != 2) throw ParseError(ctx + ".exceptional entries are [alpha, beta]" + where(f));
            inv.exceptional.emplace_back(ab[0], ab[1]);
        }
    }
    return graph::make_seifert(seifert::SeifertPiece(inv, id));
}

std::shared_ptr<graph::PieceOracle> hyperbolic_piece(const YAML::Node& p, const std::string& id) {
    const std::string ctx = "piece " + id;
    check_keys(p, {"id", "kind", "modulus", "projective", "generators", "relators", "cusps", "constants"}, ctx);
    poly::PolyRing ring(int_list(require(p, "modulus", ctx), ctx + ".modulus"));
    hyperbolic::MatrixRep rep{ring, {}, optional_scalar<bool>(p, "projective", true, ctx)};
    Presentation pres;
    YAML::Node gens = require(p, "generators", ctx);
    if (!gens.IsMap()) throw ParseError(ctx + ".generators must be a table" + where(gens));
    for (const auto& kv : gens) {
        std::string name = kv.first.as<std::string>();
        Word g = word(kv.first, id, ctx + ".generators");
        if (g.size() != 1 || g[0].sign != 1) throw ParseError(ctx + ": bad generator name '" + name + "'");
        const YAML::Node& m = kv.second;
        if (!m.IsSequence() || m.size() != 2) throw ParseError(ctx + ".generators." + name + " must be two rows");
        poly::Mat mat;
        for (std::size_t r = 0; r < 2; ++r) {
            if (!m[r].IsSequence() || m[r].size() != 2)
                throw ParseError(ctx + ".generators." + name + " rows must have two entries" + where(m[r]));
            for (std::size_t c = 0; c < 2; ++c) mat[2 * r + c] = ring.from_coeffs(int_list(m[r][c], ctx + ".generators"));
        }
        pres.generators.push_back(g[0].gen);
        rep.generators[g[0].gen] = mat;
    }
    if (YAML::Node rel = p["relators"]) {
        if (!rel.IsSequence()) throw ParseError(ctx + ".relators must be a list" + where(rel));
        for (const auto& r : rel) pres.relators.push_back(word(r, id, ctx + ".relators"));
    }
    std::vector<hyperbolic::BoundaryBasis> cusps;
    YAML::Node cs = require(p, "cusps", ctx);
    if (!cs.IsSequence()) throw ParseError(ctx + ".cusps must be a list" + where(cs));
    for (const auto& c : cs) {
        if (!c.IsSequence() || c.size() != 2) throw ParseError(ctx + ".cusps entries are [word, word]" + where(c));
        cusps.push_back({word(c[0], id, ctx + ".cusps"), word(c[1], id, ctx + ".cusps")});
    }
    hyperbolic::SearchConstants k;
    if (YAML::Node kn = p["constants"]) {
        check_keys(kn, {"k_num", "k_den", "c_bcp", "r_conj"}, ctx + ".constants");
        k.k_num = optional_scalar<long long>(kn, "k_num", k.k_num, ctx);
        k.k_den = optional_scalar<long long>(kn, "k_den", k.k_den, ctx);
        k.c_bcp = optional_scalar<long long>(kn, "c_bcp", k.c_bcp, ctx);
        k.r_conj = optional_scalar<std::size_t>(kn, "r_conj", k.r_conj, ctx);
    }
    return graph::make_hyperbolic(hyperbolic::HyperbolicPiece(pres, rep, cusps, k, id));
}

SolBlock sol_block(const YAML::Node& s) {
    check_keys(s, {"kind", "monodromy", "gluing"}, "sol");
    std::string kind = scalar<std::string>(require(s, "kind", "sol"), "sol.kind");
    SolBlock out;
    if (kind == "torus-bundle") {
        out.kind = SolBlock::Kind::TorusBundle;
        out.matrix = matrix(require(s, "monodromy", "sol"), "sol.monodromy");
    } else if (kind == "double-klein") {
        out.kind = SolBlock::Kind::DoubleKlein;
        out.matrix = matrix(require(s, "gluing", "sol"), "sol.gluing");
    } else {
        throw ParseError("sol.kind must be torus-bundle or double-klein" + where(s["kind"]));
    }
    return out;
}

}  // namespace

Manifest parse_manifest(const std::string& text) {
    YAML::Node root;
    try {
        root = YAML::Load(text);
    } catch (const YAML::Exception& e) {
        throw ParseError(std::string("malformed manifest: ") + e.what());
    }
    if (!root || root.IsNull()) throw ParseError("empty manifest");
    if (!root.IsMap()) throw ParseError("manifest must be a table");
    check_keys(root, {"format", "pieces", "edges", "sol"}, "manifest");
    Manifest m;
    m.format = scalar<int>(require(root, "format", "manifest"), "format");
    if (m.format != 1) throw ParseError("unsupported format version " + std::to_string(m.format));
    if (YAML::Node s = root["sol"]) {
        if (root["pieces"] || root["edges"]) throw ParseError("a manifest has either a sol block or pieces, not both");
        m.sol = sol_block(s);
        return m;
    }
    YAML::Node pieces = require(root, "pieces", "manifest");
    if (!pieces.IsSequence() || pieces.size() == 0) throw ParseError("pieces must be a non-empty list" + where(pieces));
    std::vector<graph::Vertex> vertices;
    for (const auto& p : pieces) {
        std::string id = scalar<std::string>(require(p, "id", "piece"), "piece.id");
        Word probe;
        try {
            probe = parse_word(id + ".x");
        } catch (const ParseError&) {
            throw ParseError("bad piece id '" + id + "'" + where(p));
        }
        if (probe.size() != 1 || probe[0].gen.space != id) throw ParseError("bad piece id '" + id + "'" + where(p));
        std::string kind = scalar<std::string>(require(p, "kind", "piece " + id), "piece.kind");
        if (kind == "seifert") {
            vertices.push_back({id, seifert_piece(p, id)});
        } else if (kind == "klein") {
            check_keys(p, {"id", "kind"}, "piece " + id);
            vertices.push_back({id, graph::make_klein(id)});
        } else if (kind == "hyperbolic") {
            vertices.push_back({id, hyperbolic_piece(p, id)});
        } else {
            throw ParseError("piece " + id + ": kind must be seifert, klein or hyperbolic" + where(p));
        }
    }
    std::vector<graph::Edge> edges;
    if (YAML::Node es = root["edges"]) {
        if (!es.IsSequence()) throw ParseError("edges must be a list" + where(es));
        for (const auto& e : es) {
            std::string id = scalar<std::string>(require(e, "id", "edge"), "edge.id");
            const std::string ctx = "edge " + id;
            check_keys(e, {"id", "from", "from_boundary", "to", "to_boundary", "gluing"}, ctx);
            auto vertex = [&](const char* key) {
                std::string v = scalar<std::string>(require(e, key, ctx), ctx + "." + key);
                for (std::size_t i = 0; i < vertices.size(); ++i)
                    if (vertices[i].id == v) return static_cast<int>(i);
                // Left to validation so the report names it.
                return -1;
            };
            graph::Edge edge;
            edge.id = id;
            edge.origin = vertex("from");
            edge.origin_boundary = optional_scalar<int>(e, "from_boundary", 1, ctx);
            edge.end = vertex("to");
            edge.end_boundary = optional_scalar<int>(e, "to_boundary", 1, ctx);
            edge.gluing = matrix(require(e, "gluing", ctx), ctx + ".gluing");
            edges.push_back(edge);
        }
    }
    m.graph.emplace(std::move(vertices), std::move(edges));
    return m;
}

Manifest load_manifest(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot read '" + path + "'");
    std::stringstream ss;
    ss << in.rdbuf();
    return parse_manifest(ss.str());
}

}  // namespace gmc::app
