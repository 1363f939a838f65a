#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "chordless/coloring.hpp"
#include "chordless/graph.hpp"

namespace chordless {

struct ProperReport {
    bool proper = true;
    std::optional<std::pair<Edge, Edge>> clash;  // two adjacent edges, same color
};

struct AcyclicReport {
    bool acyclic = true;
    std::vector<int> cycle;  // vertices of a bichromatic cycle when not
    int alpha = 0, beta = 0;
};

struct OracleReport {
    int aci = 0;
    EdgeColoring witness;
    std::uint64_t nodes_explored = 0;
};

struct ForestPartition {
    std::vector<std::vector<Edge>> classes;
    int count() const { return static_cast<int>(classes.size()); }
};

ProperReport verify_proper(const Graph& g, const EdgeColoring& c);

// Requires c proper (throws NotProper otherwise). True iff no two color
// classes together contain a cycle.
AcyclicReport verify_acyclic(const Graph& g, const EdgeColoring& c);

// Exhaustive backtracking search for the exact acyclic chromatic index.
// Guarded to small graphs; throws SearchSpaceTooLarge when m > max_edges and
// NoColoringWithinKMax when no palette up to k_max works.
OracleReport brute_force_aci(const Graph& g, int k_max = -1, int max_edges = 24);

// Pairs color classes (1,2),(3,4),... into ceil(k/2) linear forests.
ForestPartition extract_linear_forests(const Graph& g, const EdgeColoring& c);

bool verify_linear_forest(const Graph& g, const std::vector<Edge>& edges);

// Random connected chordless graph with about n_target vertices, grown from a
// small cycle by subdivisions and verified ear additions. Deterministic per seed.
Graph generate_chordless(int n_target, std::uint64_t seed);

}  // namespace chordless
