#include "chordless/decomposition.hpp"

#include <algorithm>

#include "chordless/structure.hpp"

namespace chordless {

std::vector<VertexSet> components_off_pair(const Graph& g, int a, int b) {
    g.check_vertex(a);
    g.check_vertex(b);
    if (a == b) throw AdjacentPair("a and b must be distinct");
    if (g.has_edge(a, b)) throw AdjacentPair("a and b must be non-adjacent");
    auto [h, mapping] = delete_vertices(g, {a, b});
    std::vector<int> back(h.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v)
        if (mapping[v] != -1) back[mapping[v]] = v;
    std::vector<VertexSet> comps = connected_components(h);
    for (auto& c : comps)
        for (int& v : c) v = back[v];
    return comps;
}

Block make_block(const Graph& g, const VertexSet& x, int a, int b) {
    if (x.empty()) throw BadPartition("X must be non-empty");
    for (int v : x)
        if (v == a || v == b) throw BadPartition("X must not contain a or b");
    VertexSet verts = x;
    verts.push_back(a);
    verts.push_back(b);
    std::sort(verts.begin(), verts.end());
    auto [sub, mapping] = induced_subgraph(g, verts);
    int marker = sub.num_vertices();
    std::vector<Edge> edges = sub.edges();
    edges.emplace_back(mapping[a], marker);
    edges.emplace_back(mapping[b], marker);
    Block blk;
    blk.graph = Graph::from_edge_list(marker + 1, edges);
    blk.marker = marker;
    blk.a_img = mapping[a];
    blk.b_img = mapping[b];
    blk.back_map.assign(marker + 1, -1);
    for (int v : verts) blk.back_map[mapping[v]] = v;
    return blk;
}

namespace {

// True when the induced subgraph on `verts` is a path graph.
bool induced_is_path(const Graph& g, VertexSet verts) {
    auto [sub, mapping] = induced_subgraph(g, verts);
    (void)mapping;
    if (sub.num_edges() != sub.num_vertices() - 1) return false;
    if (connected_components(sub).size() != 1) return false;
    return sub.max_degree() <= 2;
}

bool side_has_path(const Graph& g, const VertexSet& side, int a, int b) {
    VertexSet verts = side;
    verts.push_back(a);
    verts.push_back(b);
    auto [sub, mapping] = induced_subgraph(g, verts);
    // BFS from a's image to b's image.
    std::vector<char> seen(sub.num_vertices(), 0);
    std::vector<int> queue{mapping[a]};
    seen[mapping[a]] = 1;
    std::size_t head = 0;
    while (head < queue.size()) {
        int v = queue[head++];
        if (v == mapping[b]) return true;
        for (int w : sub.neighbors(v))
            if (!seen[w]) {
                seen[w] = 1;
                queue.push_back(w);
            }
    }
    return false;
}

}  // namespace

bool is_proper_split(const Graph& g, const Split& s) {
    int n = g.num_vertices();
    if (s.a < 0 || s.a >= n || s.b < 0 || s.b >= n || s.a == s.b) return false;
    if (g.has_edge(s.a, s.b)) return false;
    if (s.x.empty() || s.y.empty()) return false;
    std::vector<int> role(n, 0);  // 1 = X, 2 = Y, 3 = cut pair
    role[s.a] = role[s.b] = 3;
    for (int v : s.x) {
        if (v < 0 || v >= n || role[v] != 0) return false;
        role[v] = 1;
    }
    for (int v : s.y) {
        if (v < 0 || v >= n || role[v] != 0) return false;
        role[v] = 2;
    }
    for (int v = 0; v < n; ++v)
        if (role[v] == 0) return false;  // not a partition of V
    for (const Edge& e : g.edges())
        if ((role[e.u] == 1 && role[e.v] == 2) || (role[e.u] == 2 && role[e.v] == 1))
            return false;
    if (!side_has_path(g, s.x, s.a, s.b) || !side_has_path(g, s.y, s.a, s.b)) return false;
    VertexSet xs = s.x, ys = s.y;
    xs.push_back(s.a);
    xs.push_back(s.b);
    ys.push_back(s.a);
    ys.push_back(s.b);
    if (induced_is_path(g, xs) || induced_is_path(g, ys)) return false;
    return true;
}

std::optional<int> is_k2t_block(const Block& blk) {
    const Graph& g = blk.graph;
    int t = g.num_vertices() - 2;
    if (t < 3) return std::nullopt;
    if (g.has_edge(blk.a_img, blk.b_img)) return std::nullopt;
    if (g.degree(blk.a_img) != t || g.degree(blk.b_img) != t) return std::nullopt;
    for (int v = 0; v < g.num_vertices(); ++v) {
        if (v == blk.a_img || v == blk.b_img) continue;
        if (g.degree(v) != 2) return std::nullopt;
        if (!g.has_edge(v, blk.a_img) || !g.has_edge(v, blk.b_img)) return std::nullopt;
    }
    return t;
}

ComponentClassification classify_components(const Graph& g, int a, int b) {
    ComponentClassification out;
    for (const VertexSet& comp : components_off_pair(g, a, b)) {
        Block blk = make_block(g, comp, a, b);
        if (!is_two_sparse(blk.graph).two_sparse) {
            out.rejected.push_back(comp);
            continue;
        }
        if (comp.size() == 1) {
            out.c1.push_back(comp);
            continue;
        }
        bool all_deg2 = true;
        for (int img : {blk.a_img, blk.b_img})
            for (int w : blk.graph.neighbors(img))
                if (blk.graph.degree(w) >= 3) all_deg2 = false;
        (all_deg2 ? out.c2 : out.c3).push_back(comp);
    }
    return out;
}

namespace {

int neighbors_in(const Graph& g, int v, const VertexSet& comp) {
    int count = 0;
    for (int w : g.neighbors(v))
        if (std::binary_search(comp.begin(), comp.end(), w)) ++count;
    return count;
}

int unique_neighbor_in(const Graph& g, int v, const VertexSet& comp) {
    for (int w : g.neighbors(v))
        if (std::binary_search(comp.begin(), comp.end(), w)) return w;
    throw InternalInvariantViolation("no neighbor in component");
}

VertexSet complement_of(const Graph& g, const VertexSet& x, int a, int b) {
    std::vector<char> in(g.num_vertices(), 0);
    for (int v : x) in[v] = 1;
    in[a] = in[b] = 1;
    VertexSet y;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (!in[v]) y.push_back(v);
    return y;
}

// Split postconditions checked on every candidate before accepting it.
bool qualifies(const Graph& g, const Split& s) {
    if (!is_proper_split(g, s)) return false;
    Block blk = make_block(g, s.x, s.a, s.b);
    if (!is_two_sparse(blk.graph).two_sparse) return false;
    if (is_k2t_block(blk)) return false;
    int da = blk.graph.degree(blk.a_img);
    int db = blk.graph.degree(blk.b_img);
    return da >= 3 && (db >= 3 || db == 2);
}

// Applies the per-pair case analysis; returns the candidate split, if any.
std::optional<Split> split_for_pair(const Graph& g, int a, int b) {
    ComponentClassification cls = classify_components(g, a, b);
    std::size_t c12 = cls.c1.size() + cls.c2.size();
    if (c12 >= 2 && !cls.c2.empty()) {
        std::vector<VertexSet> pool = cls.c1;
        pool.insert(pool.end(), cls.c2.begin(), cls.c2.end());
        std::sort(pool.begin(), pool.end(),
                  [](const VertexSet& l, const VertexSet& r) { return l[0] < r[0]; });
        auto in_c2 = [&](const VertexSet& c) {
            return std::find(cls.c2.begin(), cls.c2.end(), c) != cls.c2.end();
        };
        VertexSet first = pool[0], second = pool[1];
        if (!in_c2(first) && !in_c2(second)) {
            for (const VertexSet& c : pool)
                if (in_c2(c)) {
                    second = c;
                    break;
                }
        }
        VertexSet x = first;
        x.insert(x.end(), second.begin(), second.end());
        std::sort(x.begin(), x.end());
        Split s{a, b, x, complement_of(g, x, a, b)};
        if (qualifies(g, s)) return s;
        return std::nullopt;
    }
    if (c12 < 2 && !cls.c2.empty()) {
        const VertexSet& comp = cls.c2.front();
        int na = neighbors_in(g, a, comp);
        int nb = neighbors_in(g, b, comp);
        if (na >= 2 && nb >= 2) {
            Split s{a, b, comp, complement_of(g, comp, a, b)};
            if (qualifies(g, s)) return s;
            return std::nullopt;
        }
        if (na == 1 && nb == 1) return std::nullopt;  // discard the pair
        int big = na >= 2 ? a : b;   // keeps >= 2 neighbors; plays the a role
        int one = na >= 2 ? b : a;   // has the unique neighbor; plays the b role
        int bp = unique_neighbor_in(g, one, comp);
        VertexSet xprime;
        for (int v : comp)
            if (v != bp) xprime.push_back(v);
        Split shrunk{big, bp, xprime, complement_of(g, xprime, big, bp)};
        if (!is_k2t_block(make_block(g, xprime, big, bp))) {
            if (qualifies(g, shrunk)) return shrunk;
            return std::nullopt;
        }
        Split minimal{big, one, comp, complement_of(g, comp, big, one)};
        if (qualifies(g, minimal)) return minimal;
        return std::nullopt;
    }
    if (cls.c2.empty() && !cls.c3.empty()) {
        for (const VertexSet& comp : cls.c3) {
            int na = neighbors_in(g, a, comp);
            int nb = neighbors_in(g, b, comp);
            if (na == 1 && nb == 1) continue;
            int big = na >= 2 ? a : b;
            int one = na >= 2 ? b : a;
            int bpp = unique_neighbor_in(g, one, comp);
            VertexSet xshrunk;
            for (int v : comp)
                if (v != bpp) xshrunk.push_back(v);
            if (!is_k2t_block(make_block(g, xshrunk, big, bpp))) {
                Split s{big, bpp, xshrunk, complement_of(g, xshrunk, big, bpp)};
                if (qualifies(g, s)) return s;
                continue;
            }
            Split s{big, one, comp, complement_of(g, comp, big, one)};
            if (qualifies(g, s)) return s;
        }
    }
    return std::nullopt;
}

}  // namespace

Split find_special_split(const Graph& g) {
    int n = g.num_vertices();
    auto comps = connected_components(g);
    if (comps.size() != 1 || n < 3) throw PreconditionViolated("graph must be 2-connected");
    if (!cut_vertices_and_blocks(g).first.empty())
        throw PreconditionViolated("graph must be 2-connected (has a cut vertex)");
    if (is_two_sparse(g).two_sparse)
        throw PreconditionViolated("graph must not be 2-sparse");
    for (const Edge& e : g.edges())
        if (g.degree(e.u) == 2 && g.degree(e.v) == 2)
            throw PreconditionViolated("no edge may join two degree-2 vertices");

    for (int a = 0; a < n; ++a) {
        // {a,b} is a 2-cutset exactly when b is an articulation point of g - a.
        auto [h, mapping] = delete_vertices(g, {a});
        std::vector<int> back(h.num_vertices());
        for (int v = 0; v < n; ++v)
            if (mapping[v] != -1) back[mapping[v]] = v;
        auto arts = cut_vertices_and_blocks(h).first;
        std::vector<int> candidates;
        for (int bv : arts) candidates.push_back(back[bv]);
        std::sort(candidates.begin(), candidates.end());
        for (int b : candidates) {
            if (b <= a || g.has_edge(a, b)) continue;
            if (auto s = split_for_pair(g, a, b)) return *s;
        }
    }
    throw NoSplitFound("no qualifying split found; internal invariant violated");
}

}  // namespace chordless
