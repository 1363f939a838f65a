#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "chordless/errors.hpp"

namespace chordless {

// Undirected edge, stored with u < v so every edge has one canonical key.
struct Edge {
    int u;
    int v;

    Edge(int a, int b) : u(a < b ? a : b), v(a < b ? b : a) {
        if (a == b) throw SelfLoop("self loop at vertex " + std::to_string(a));
    }

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// A set of vertices, kept sorted ascending.
using VertexSet = std::vector<int>;

// Immutable simple undirected graph on vertices 0..n-1.
// Neighbor lists are sorted so every tie-break downstream is deterministic.
class Graph {
  public:
    Graph() = default;

    static Graph from_edge_list(int n, const std::vector<Edge>& edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[v];
    }

    int degree(int v) const {
        check_vertex(v);
        return static_cast<int>(adj_[v].size());
    }

    int max_degree() const;

    bool has_edge(int u, int v) const;

    // Index of an edge in edges() (sorted lexicographically), or -1.
    int edge_index(int u, int v) const;
    int edge_index(const Edge& e) const { return edge_index(e.u, e.v); }

    const std::vector<Edge>& edges() const { return edges_; }

    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw VertexOutOfRange("vertex " + std::to_string(v) + " out of range [0," +
                                   std::to_string(n_) + ")");
    }

  private:
    int n_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<Edge> edges_;  // sorted lexicographically
};

// Connected components as vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

// Articulation points (sorted) and biconnected components as an edge
// partition (Hopcroft-Tarjan). Requires g connected.
std::pair<std::vector<int>, std::vector<std::vector<Edge>>> cut_vertices_and_blocks(
    const Graph& g);

// Contracts e = (u,v) into a single vertex; parallel edges collapse.
// The mapping takes each old vertex to its new index.
std::pair<Graph, std::vector<int>> contract_edge(const Graph& g, const Edge& e);

Graph delete_edge(const Graph& g, const Edge& e);

// Removes S and incident edges, re-indexing the rest. mapping[old] is the
// new index, or -1 for deleted vertices.
std::pair<Graph, std::vector<int>> delete_vertices(const Graph& g, const VertexSet& s);

// Induced subgraph on S (sorted), with the same old->new mapping convention.
std::pair<Graph, std::vector<int>> induced_subgraph(const Graph& g, const VertexSet& s);

struct BipartiteResult {
    bool bipartite;
    std::vector<int> odd_cycle;  // vertex sequence of a witness odd cycle if not
};

BipartiteResult is_bipartite(const Graph& g);

// True iff two internally vertex-disjoint u-v paths exist (Menger, value-2
// question answered with a unit-capacity vertex-split flow).
bool two_disjoint_paths_exist(const Graph& g, int u, int v);

}  // namespace chordless
