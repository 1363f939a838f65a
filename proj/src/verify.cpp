#include "chordless/verify.hpp"

#include <algorithm>
#include <random>

#include "chordless/structure.hpp"

namespace chordless {

ProperReport verify_proper(const Graph& g, const EdgeColoring& c) {
    ProperReport r;
    for (int v = 0; v < g.num_vertices(); ++v) {
        std::vector<std::pair<int, int>> seen;  // (color, edge index)
        for (int w : g.neighbors(v)) {
            int ei = g.edge_index(v, w);
            if (!c.assigned(ei)) continue;
            for (auto [col, other] : seen) {
                if (col == c.color(ei)) {
                    r.proper = false;
                    r.clash = {g.edges()[other], g.edges()[ei]};
                    return r;
                }
            }
            seen.emplace_back(c.color(ei), ei);
        }
    }
    return r;
}

AcyclicReport verify_acyclic(const Graph& g, const EdgeColoring& c) {
    if (!verify_proper(g, c).proper) throw NotProper("coloring is not proper");
    AcyclicReport r;
    std::set<int> colors;
    for (int ei = 0; ei < g.num_edges(); ++ei)
        if (c.assigned(ei)) colors.insert(c.color(ei));
    for (int alpha : colors) {
        for (int beta : colors) {
            if (beta <= alpha) continue;
            // Properness caps every union-degree at 2, so each component of
            // the two classes' union is a path or a cycle; a forward walk
            // from any cycle vertex comes back to its start.
            auto union_next = [&](int cur, int prev) {
                for (int w : g.neighbors(cur)) {
                    if (w == prev) continue;
                    int ei = g.edge_index(cur, w);
                    if (!c.assigned(ei)) continue;
                    int col = c.color(ei);
                    if (col == alpha || col == beta) return w;
                }
                return -1;
            };
            std::vector<char> visited(g.num_vertices(), 0);
            for (int start = 0; start < g.num_vertices(); ++start) {
                if (visited[start]) continue;
                visited[start] = 1;
                std::vector<int> trail{start};
                int prev = -1, cur = start;
                while (true) {
                    int next = union_next(cur, prev);
                    if (next == -1) break;
                    if (next == start) {
                        r.acyclic = false;
                        r.cycle = trail;
                        r.alpha = alpha;
                        r.beta = beta;
                        return r;
                    }
                    visited[next] = 1;
                    trail.push_back(next);
                    prev = cur;
                    cur = next;
                }
            }
        }
    }
    return r;
}

namespace {

struct OracleState {
    const Graph* g;
    int k = 0;
    std::vector<int> color;  // by edge index, 0 unassigned
    std::uint64_t nodes = 0;

    bool proper_at(int v, int col) const {
        for (int w : g->neighbors(v)) {
            int ei = g->edge_index(v, w);
            if (color[ei] == col) return false;
        }
        return true;
    }

    // Does assigning `col` to edge `ei` = (u,v) close a bichromatic cycle?
    // Checked by walking from v toward u on the union of col and each color
    // present at both endpoints.
    bool closes_cycle(int ei, int col) const {
        const Edge& e = g->edges()[ei];
        for (int w0 : g->neighbors(e.u)) {
            int ei0 = g->edge_index(e.u, w0);
            int delta = color[ei0];
            if (delta == 0 || delta == col) continue;
            bool at_v = false;
            for (int wv : g->neighbors(e.v))
                if (color[g->edge_index(e.v, wv)] == delta) at_v = true;
            if (!at_v) continue;
            int prev = e.u, cur = e.v, want = delta;
            while (true) {
                int next = -1;
                for (int w : g->neighbors(cur)) {
                    if (w == prev) continue;
                    if (color[g->edge_index(cur, w)] == want) {
                        next = w;
                        break;
                    }
                }
                if (next == -1) break;
                if (next == e.u) return true;
                prev = cur;
                cur = next;
                want = (want == delta) ? col : delta;
            }
        }
        return false;
    }

    bool search(int ei, int max_used) {
        if (ei == g->num_edges()) return true;
        const Edge& e = g->edges()[ei];
        int cap = std::min(k, max_used + 1);
        for (int col = 1; col <= cap; ++col) {
            ++nodes;
            if (!proper_at(e.u, col) || !proper_at(e.v, col)) continue;
            if (closes_cycle(ei, col)) continue;
            color[ei] = col;
            if (search(ei + 1, std::max(max_used, col))) return true;
            color[ei] = 0;
        }
        return false;
    }
};

}  // namespace

OracleReport brute_force_aci(const Graph& g, int k_max, int max_edges) {
    int m = g.num_edges();
    if (m > max_edges)
        throw SearchSpaceTooLarge("graph has " + std::to_string(m) + " edges; limit " +
                                  std::to_string(max_edges));
    OracleReport rep;
    if (m == 0) {
        rep.witness = EdgeColoring(g, 0);
        return rep;
    }
    int delta = g.max_degree();
    bool regular = true;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) != delta) regular = false;
    int lb = delta + (regular && delta >= 2 ? 1 : 0);
    if (k_max < 0) k_max = delta + 2;
    std::uint64_t nodes = 0;
    for (int k = lb; k <= k_max; ++k) {
        OracleState st;
        st.g = &g;
        st.k = k;
        st.color.assign(m, 0);
        bool ok = st.search(0, 0);
        nodes += st.nodes;
        if (ok) {
            rep.aci = k;
            rep.nodes_explored = nodes;
            rep.witness = EdgeColoring(g, k);
            for (int ei = 0; ei < m; ++ei) rep.witness.assign(ei, st.color[ei]);
            return rep;
        }
    }
    throw NoColoringWithinKMax("no acyclic coloring with at most " + std::to_string(k_max) +
                               " colors");
}

bool verify_linear_forest(const Graph& g, const std::vector<Edge>& edges) {
    std::vector<int> deg(g.num_vertices(), 0);
    std::vector<int> parent(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v) parent[v] = v;
    auto find = [&](int v) {
        while (parent[v] != v) v = parent[v] = parent[parent[v]];
        return v;
    };
    for (const Edge& e : edges) {
        if (g.edge_index(e) < 0) throw EdgeNotPresent("forest edge not in graph");
        if (++deg[e.u] > 2 || ++deg[e.v] > 2) return false;
        int ru = find(e.u), rv = find(e.v);
        if (ru == rv) return false;  // cycle
        parent[ru] = rv;
    }
    return true;
}

ForestPartition extract_linear_forests(const Graph& g, const EdgeColoring& c) {
    if (!c.total()) throw Unassigned("coloring must be total");
    AcyclicReport a = verify_acyclic(g, c);  // throws NotProper when improper
    if (!a.acyclic) throw NotAcyclic("coloring has a bichromatic cycle");
    ForestPartition fp;
    int k = c.palette_size();
    for (int first = 1; first <= k; first += 2) {
        std::vector<Edge> cls;
        for (int ei = 0; ei < g.num_edges(); ++ei)
            if (c.color(ei) == first || c.color(ei) == first + 1)
                cls.push_back(g.edges()[ei]);
        if (!verify_linear_forest(g, cls))
            throw NotAcyclic("color pair does not induce a linear forest");
        fp.classes.push_back(std::move(cls));
    }
    return fp;
}

Graph generate_chordless(int n_target, std::uint64_t seed) {
    if (n_target < 3) throw PreconditionViolated("need n_target >= 3");
    std::mt19937_64 rng(seed);
    int base = std::min<int>(n_target, 4 + static_cast<int>(rng() % 2));
    std::vector<Edge> edges;
    for (int v = 0; v < base; ++v) edges.emplace_back(v, (v + 1) % base);
    int n = base;
    Graph g = Graph::from_edge_list(n, edges);
    // Ear additions need a full recheck, so they are only tried while the
    // graph is small; past that the growth is pure (always-safe) subdivision.
    const int ear_cap = 300;
    while (n < n_target) {
        bool try_ear = n <= ear_cap && n + 2 <= n_target && rng() % 3 == 2;
        if (try_ear) {
            bool added = false;
            for (int attempt = 0; attempt < 6 && !added; ++attempt) {
                int u = static_cast<int>(rng() % n);
                int v = static_cast<int>(rng() % n);
                if (u == v || g.has_edge(u, v)) continue;
                int inner = 1 + static_cast<int>(rng() % 2);  // ear length 2 or 3
                if (n + inner > n_target) inner = 1;
                std::vector<Edge> trial = edges;
                int prev = u;
                for (int i = 0; i < inner; ++i) {
                    trial.emplace_back(prev, n + i);
                    prev = n + i;
                }
                trial.emplace_back(prev, v);
                Graph cand = Graph::from_edge_list(n + inner, trial);
                if (is_chordless(cand).chordless) {
                    edges = std::move(trial);
                    n += inner;
                    g = std::move(cand);
                    added = true;
                }
            }
            if (added) continue;
        }
        // Subdivide a random edge; this always preserves chordlessness.
        int ei = static_cast<int>(rng() % edges.size());
        Edge e = edges[ei];
        edges[ei] = Edge(e.u, n);
        edges.emplace_back(e.v, n);
        ++n;
        g = Graph::from_edge_list(n, edges);
    }
    return g;
}

}  // namespace chordless
