#pragma once

// Test-side oracles, deliberately written against the naive definitions
// (exhaustive path / cycle enumeration) rather than the library's algorithms,
// so the two routes check each other.

#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "chordless/graph.hpp"
#include "chordless/verify.hpp"

namespace testor {

using chordless::Edge;
using chordless::Graph;

inline Graph make(int n, std::initializer_list<std::pair<int, int>> pairs) {
    std::vector<Edge> edges;
    for (auto [u, v] : pairs) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

inline Graph h7() {
    return make(7, {{0, 1}, {0, 3}, {0, 4}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {1, 5}, {1, 6}});
}

inline Graph cycle(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return Graph::from_edge_list(n, edges);
}

inline Graph path(int n) {
    std::vector<Edge> edges;
    for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return Graph::from_edge_list(n, edges);
}

inline Graph k4() {
    return make(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
}

inline Graph k23() {
    // sides {0,1} and {2,3,4}
    return make(5, {{0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}});
}

inline Graph k33() {
    std::vector<Edge> edges;
    for (int u = 0; u < 3; ++u)
        for (int v = 3; v < 6; ++v) edges.emplace_back(u, v);
    return Graph::from_edge_list(6, edges);
}

inline Graph two_triangles() {
    return make(5, {{0, 1}, {0, 2}, {1, 2}, {0, 3}, {0, 4}, {3, 4}});
}

// All simple u-v paths, as vertex sequences (exhaustive; small graphs only).
inline std::vector<std::vector<int>> all_simple_paths(const Graph& g, int u, int v) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur{u};
    std::vector<char> used(g.num_vertices(), 0);
    used[u] = 1;
    std::function<void(int)> dfs = [&](int at) {
        if (at == v) {
            out.push_back(cur);
            return;
        }
        for (int w : g.neighbors(at)) {
            if (used[w]) continue;
            used[w] = 1;
            cur.push_back(w);
            dfs(w);
            cur.pop_back();
            used[w] = 0;
        }
    };
    dfs(u);
    return out;
}

// Naive Menger check: some pair of u-v paths shares only its endpoints.
inline bool oracle_two_disjoint_paths(const Graph& g, int u, int v) {
    auto paths = all_simple_paths(g, u, v);
    for (std::size_t i = 0; i < paths.size(); ++i) {
        for (std::size_t j = i + 1; j < paths.size(); ++j) {
            std::set<int> inner(paths[i].begin() + 1, paths[i].end() - 1);
            bool disjoint = true;
            for (std::size_t t = 1; t + 1 < paths[j].size(); ++t)
                if (inner.count(paths[j][t])) disjoint = false;
            if (disjoint) return true;
        }
    }
    return false;
}

// Chord by definition: u and v on a common cycle of g minus the edge.
inline bool oracle_is_chord(const Graph& g, const Edge& e) {
    return oracle_two_disjoint_paths(chordless::delete_edge(g, e), e.u, e.v);
}

// Assign-and-check validity: color the edge and ask the independent verifier.
inline bool oracle_is_valid(const chordless::EdgeColoring& c, const Graph& g,
                            const Edge& e, int color) {
    int ei = g.edge_index(e);
    if (color < 1 || color > c.palette_size()) return false;
    chordless::EdgeColoring trial = c;
    trial.assign(ei, color);
    if (!chordless::verify_proper(g, trial).proper) return false;
    return chordless::verify_acyclic(g, trial).acyclic;
}

// All total acyclic proper colorings of g with palette k (tiny graphs only).
inline std::vector<chordless::EdgeColoring> all_acyclic_colorings(const Graph& g, int k) {
    std::vector<chordless::EdgeColoring> out;
    chordless::EdgeColoring c(g, k);
    std::function<void(int)> rec = [&](int ei) {
        if (ei == g.num_edges()) {
            out.push_back(c);
            return;
        }
        for (int col = 1; col <= k; ++col) {
            if (!oracle_is_valid(c, g, g.edges()[ei], col)) continue;
            c.assign(ei, col);
            rec(ei + 1);
            c.clear(ei);
        }
    };
    rec(0);
    return out;
}

}  // namespace testor
