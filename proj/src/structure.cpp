#include "chordless/structure.hpp"

#include <algorithm>

namespace chordless {

bool is_chord(const Graph& g, const Edge& e) {
    if (g.edge_index(e) < 0)
        throw EdgeNotPresent("edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                             ") not in graph");
    Graph without = delete_edge(g, e);
    return two_disjoint_paths_exist(without, e.u, e.v);
}

StructureReport is_chordless(const Graph& g) {
    StructureReport r;
    for (const Edge& e : g.edges()) {
        if (is_chord(g, e)) {
            r.chordless = false;
            r.chord_witness = e;
            break;
        }
    }
    return r;
}

StructureReport is_two_sparse(const Graph& g) {
    StructureReport r;
    for (const Edge& e : g.edges()) {
        if (g.degree(e.u) >= 3 && g.degree(e.v) >= 3) {
            r.two_sparse = false;
            r.two_sparse_witness = e;
            break;
        }
    }
    return r;
}

std::optional<std::vector<int>> degeneracy_order_2(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = g.degree(v);
    std::vector<char> removed(n, 0);
    std::vector<int> order;
    order.reserve(n);
    // Smallest-index vertex of degree <= 2 first; a heap keyed by index keeps
    // the output deterministic.
    std::vector<int> ready;
    for (int v = 0; v < n; ++v)
        if (deg[v] <= 2) ready.push_back(v);
    std::make_heap(ready.begin(), ready.end(), std::greater<>());
    while (!ready.empty()) {
        std::pop_heap(ready.begin(), ready.end(), std::greater<>());
        int v = ready.back();
        ready.pop_back();
        if (removed[v] || deg[v] > 2) continue;
        removed[v] = 1;
        order.push_back(v);
        for (int w : g.neighbors(v)) {
            if (removed[w]) continue;
            if (--deg[w] == 2) {
                ready.push_back(w);
                std::push_heap(ready.begin(), ready.end(), std::greater<>());
            }
        }
    }
    if (static_cast<int>(order.size()) != n) return std::nullopt;
    return order;
}

bool chordless_edge_bound_holds(const Graph& g) {
    int n = g.num_vertices();
    if (n < 2) throw PreconditionViolated("need n >= 2");
    if (connected_components(g).size() != 1)
        throw PreconditionViolated("graph must be connected");
    if (!is_chordless(g).chordless) throw PreconditionViolated("graph must be chordless");
    return g.num_edges() <= 2 * n - 3;
}

}  // namespace chordless
