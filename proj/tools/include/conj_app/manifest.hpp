#pragma once

#include <optional>
#include <string>

#include "conj/graph.hpp"
#include "conj/lattice.hpp"

// Manifest documents: a graph manifold given by its pieces and gluings, or
// one of the two SOL cases. The schema is described in samples/SCHEMA.md.
namespace gmc::app {

struct SolBlock {
    enum class Kind { TorusBundle, DoubleKlein };
    Kind kind = Kind::TorusBundle;
    Mat2 matrix;
};

struct Manifest {
    int format = 1;
    std::optional<graph::GraphOfGroups> graph;
    std::optional<SolBlock> sol;
};

// Structural problems throw ParseError; well-formed but mathematically
// invalid pieces throw DomainError. Graph-level invariants are left to
// GraphOfGroups::report().
Manifest parse_manifest(const std::string& text);
Manifest load_manifest(const std::string& path);

}  // namespace gmc::app
