#pragma once

#include <optional>

#include "chordless/graph.hpp"

namespace chordless {

struct StructureReport {
    bool chordless = true;
    std::optional<Edge> chord_witness;
    bool two_sparse = true;
    std::optional<Edge> two_sparse_witness;  // edge with both endpoints of degree >= 3
    std::optional<std::vector<int>> degeneracy_order;
};

// An edge uv is a chord when u and v still lie on a common cycle after the
// edge is removed.
bool is_chord(const Graph& g, const Edge& e);

// Fills the chordless part of the report (witness = first chord in edge order).
StructureReport is_chordless(const Graph& g);

// Fills the 2-sparse part: every edge must touch a vertex of degree <= 2.
StructureReport is_two_sparse(const Graph& g);

// Elimination order where every vertex has at most 2 later neighbors,
// or nullopt when the graph is not 2-degenerate.
std::optional<std::vector<int>> degeneracy_order_2(const Graph& g);

// m <= 2n-3 for connected chordless graphs with n >= 2.
bool chordless_edge_bound_holds(const Graph& g);

}  // namespace chordless
