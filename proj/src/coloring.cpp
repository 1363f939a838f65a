#include "chordless/coloring.hpp"

#include <algorithm>
#include <cassert>

#include "chordless/structure.hpp"

namespace chordless {

int EdgeColoring::num_assigned() const {
    int n = 0;
    for (int c : color_)
        if (c != 0) ++n;
    return n;
}

bool EdgeColoring::total() const {
    for (int c : color_)
        if (c == 0) return false;
    return true;
}

void EdgeColoring::assign(int edge_index, int color) {
    if (color < 1 || color > k_)
        throw PreconditionViolated("color " + std::to_string(color) + " outside palette 1.." +
                                   std::to_string(k_));
    color_.at(edge_index) = color;
}

std::set<int> color_sets(const EdgeColoring& c, const Graph& g, int u) {
    g.check_vertex(u);
    std::set<int> out;
    for (int w : g.neighbors(u)) {
        int ei = g.edge_index(u, w);
        if (c.assigned(ei)) out.insert(c.color(ei));
    }
    return out;
}

std::set<int> f_ab(const EdgeColoring& c, const Graph& g, int a, int b) {
    int ei = g.edge_index(a, b);
    if (ei < 0) throw EdgeNotPresent("edge (" + std::to_string(a) + "," + std::to_string(b) +
                                     ") not in graph");
    std::set<int> out = color_sets(c, g, b);
    if (c.assigned(ei)) out.erase(c.color(ei));
    return out;
}

namespace {

// Neighbor of v across the edge colored `color`, or -1. Properness makes it
// unique; `skip` excludes the vertex we came from.
int colored_neighbor(const EdgeColoring& c, const Graph& g, int v, int color, int skip) {
    for (int w : g.neighbors(v)) {
        if (w == skip) continue;
        int ei = g.edge_index(v, w);
        if (c.assigned(ei) && c.color(ei) == color) return w;
    }
    return -1;
}

// Walks the alternating path from `start` beginning with a `first`-colored
// edge. Throws NotAcyclic when the walk returns to start (bichromatic cycle).
std::vector<int> walk_alternating(const EdgeColoring& c, const Graph& g, int start,
                                  int first, int second) {
    std::vector<int> verts{start};
    int prev = -1, cur = start, want = first;
    int guard = 2 * g.num_edges() + 2;
    while (guard-- > 0) {
        int next = colored_neighbor(c, g, cur, want, prev);
        if (next == -1) return verts;
        if (next == start) throw NotAcyclic("bichromatic cycle through vertex " +
                                            std::to_string(start));
        verts.push_back(next);
        prev = cur;
        cur = next;
        want = (want == first) ? second : first;
    }
    throw InternalInvariantViolation("alternating walk did not terminate");
}

// Is there a bichromatic cycle through the (assigned) edge with this index?
bool bichromatic_cycle_through(const EdgeColoring& c, const Graph& g, int edge_index) {
    if (!c.assigned(edge_index)) return false;
    const Edge& e = g.edges()[edge_index];
    int gamma = c.color(edge_index);
    std::set<int> fu = color_sets(c, g, e.u);
    std::set<int> fv = color_sets(c, g, e.v);
    for (int delta : fu) {
        if (delta == gamma || !fv.count(delta)) continue;
        // Walk from e.v away from e.u, alternating delta/gamma; reaching e.u
        // closes the cycle through this edge.
        int prev = e.u, cur = e.v, want = delta;
        int guard = 2 * g.num_edges() + 2;
        bool cycle = false;
        while (guard-- > 0) {
            int next = colored_neighbor(c, g, cur, want, prev);
            if (next == -1) break;
            if (next == e.u) {
                cycle = (want == delta);
                break;
            }
            prev = cur;
            cur = next;
            want = (want == delta) ? gamma : delta;
        }
        if (cycle) return true;
    }
    return false;
}

void assert_no_cycle_through(const EdgeColoring& c, const Graph& g, int edge_index,
                             const char* where) {
    if (bichromatic_cycle_through(c, g, edge_index))
        throw InternalInvariantViolation(std::string("bichromatic cycle created in ") + where);
}

}  // namespace

std::optional<BichromaticPath> maximal_bichromatic_path(const EdgeColoring& c,
                                                        const Graph& g, int start,
                                                        int alpha, int beta) {
    if (alpha == beta) throw PreconditionViolated("alpha and beta must differ");
    g.check_vertex(start);
    if (colored_neighbor(c, g, start, alpha, -1) == -1) return std::nullopt;
    BichromaticPath p;
    p.vertices = walk_alternating(c, g, start, alpha, beta);
    p.alpha = alpha;
    p.beta = beta;
    return p;
}

bool critical_path_exists(const EdgeColoring& c, const Graph& g, int alpha, int beta,
                          int a, int b) {
    if (g.edge_index(a, b) < 0)
        throw EdgeNotPresent("critical path needs a and b adjacent");
    auto p = maximal_bichromatic_path(c, g, a, alpha, beta);
    if (!p) return false;
    if (p->vertices.back() != b) return false;
    return p->length() % 2 == 1;  // odd edge count: first and last edges both alpha
}

std::vector<int> candidate_colors(const EdgeColoring& c, const Graph& g, const Edge& e) {
    int ei = g.edge_index(e);
    if (ei < 0) throw EdgeNotPresent("edge not in graph");
    if (c.assigned(ei)) throw EdgeAlreadyColored("edge already colored");
    std::set<int> forbidden = color_sets(c, g, e.u);
    std::set<int> fv = color_sets(c, g, e.v);
    forbidden.insert(fv.begin(), fv.end());
    std::vector<int> out;
    for (int col = 1; col <= c.palette_size(); ++col)
        if (!forbidden.count(col)) out.push_back(col);
    return out;
}

bool is_valid(const EdgeColoring& c, const Graph& g, const Edge& e, int color) {
    auto cands = candidate_colors(c, g, e);
    if (!std::binary_search(cands.begin(), cands.end(), color)) return false;
    std::set<int> fu = color_sets(c, g, e.u);
    std::set<int> fv = color_sets(c, g, e.v);
    for (int alpha : fu) {
        if (!fv.count(alpha)) continue;
        if (critical_path_exists(c, g, alpha, color, e.u, e.v)) return false;
    }
    return true;
}

void color_exchange(EdgeColoring& c, const Graph& g, int u, int i, int j) {
    int ei = g.edge_index(u, i);
    int ej = g.edge_index(u, j);
    if (ei < 0 || ej < 0) throw EdgeNotPresent("exchange edges must share vertex u");
    if (!c.assigned(ei) || !c.assigned(ej))
        throw Unassigned("exchange edges must both be colored");
    int ci = c.color(ei), cj = c.color(ej);
    c.assign(ei, cj);
    c.assign(ej, ci);
}

bool exchange_is_valid(const EdgeColoring& c, const Graph& g, int u, int i, int j) {
    EdgeColoring trial = c;
    color_exchange(trial, g, u, i, j);
    // Properness at the far endpoints (at u the swap preserves the color set).
    for (int endpoint : {i, j}) {
        std::set<int> seen;
        for (int w : g.neighbors(endpoint)) {
            int ei = g.edge_index(endpoint, w);
            if (!trial.assigned(ei)) continue;
            if (!seen.insert(trial.color(ei)).second) return false;
        }
    }
    return !bichromatic_cycle_through(trial, g, g.edge_index(u, i)) &&
           !bichromatic_cycle_through(trial, g, g.edge_index(u, j));
}

void extend_by_lemma4(EdgeColoring& c, const Graph& g, const BichromaticPath& path,
                      const Edge& pendant) {
    const auto& verts = path.vertices;
    if (verts.size() < 2) throw PreconditionViolated("path must have at least one edge");
    int v1 = verts.front();
    int s = pendant.u == v1 ? pendant.v : pendant.u;
    if (pendant.u != v1 && pendant.v != v1)
        throw PreconditionViolated("pendant edge must touch the path start");
    int pei = g.edge_index(pendant);
    if (pei < 0) throw EdgeNotPresent("pendant edge not in graph");
    if (c.assigned(pei)) throw EdgeAlreadyColored("pendant edge already colored");
    if (g.degree(v1) != 2 || g.degree(s) < 3)
        throw PreconditionViolated("need deg(v1)=2 and deg(s)>=3");
    if (g.neighbors(v1)[0] != std::min(verts[1], s) ||
        g.neighbors(v1)[1] != std::max(verts[1], s))
        throw PreconditionViolated("N(v1) must be {v2, s}");
    for (int v : verts)
        if (v == s) throw PreconditionViolated("s must not lie on the path");
    int alpha = path.alpha, beta = path.beta;
    for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
        int expect = (i % 2 == 0) ? alpha : beta;
        int ei = g.edge_index(verts[i], verts[i + 1]);
        if (ei < 0 || !c.assigned(ei) || c.color(ei) != expect)
            throw PreconditionViolated("path does not alternate alpha/beta in the coloring");
        if (i % 2 == 0 && g.degree(verts[i]) != 2)
            throw PreconditionViolated("odd-position path vertices must have degree 2");
    }

    // Direct assignment when some candidate is already valid.
    for (int col : candidate_colors(c, g, pendant)) {
        if (is_valid(c, g, pendant, col)) {
            c.assign(pei, col);
            return;
        }
    }

    // Exchange alpha and beta along the path.
    for (std::size_t i = 0; i + 1 < verts.size(); ++i) {
        int ei = g.edge_index(verts[i], verts[i + 1]);
        c.assign(ei, c.color(ei) == alpha ? beta : alpha);
    }

    // The only bichromatic cycle the exchange can create goes through the
    // far edge of the path; kill it by swapping the two far-end edges.
    std::size_t k = verts.size();
    int vk = verts[k - 1], vk1 = verts[k - 2];
    int far_ei = g.edge_index(vk1, vk);
    if (bichromatic_cycle_through(c, g, far_ei)) {
        if (k < 3) throw InternalInvariantViolation("cycle through the pendant-side edge");
        int vk2 = verts[k - 3];
        int sigma = c.color(far_ei);
        // Find the cycle's second color: the color at vk other than sigma.
        int gamma = 0;
        for (int w : g.neighbors(vk)) {
            int ei = g.edge_index(vk, w);
            if (w != vk1 && c.assigned(ei)) gamma = c.color(ei);
        }
        if (gamma == 0) throw InternalInvariantViolation("cycle without a far-end color");
        int r = colored_neighbor(c, g, vk1, gamma, -1);
        if (r == -1) throw InternalInvariantViolation("cycle repair edge missing");
        color_exchange(c, g, vk1, r, vk2);
        assert_no_cycle_through(c, g, g.edge_index(vk1, r), "lemma4 repair");
        assert_no_cycle_through(c, g, g.edge_index(vk1, vk2), "lemma4 repair");
        assert_no_cycle_through(c, g, far_ei, "lemma4 repair");
        (void)sigma;
    }

    std::set<int> fs = color_sets(c, g, s);
    if (!fs.count(alpha)) {
        if (!is_valid(c, g, pendant, alpha))
            throw InternalInvariantViolation("alpha not valid after lemma4 exchange");
        c.assign(pei, alpha);
        return;
    }
    for (int col : candidate_colors(c, g, pendant)) {
        if (is_valid(c, g, pendant, col)) {
            c.assign(pei, col);
            return;
        }
    }
    throw InternalInvariantViolation("no valid color after lemma4 exchange");
}

namespace {

int smallest_color_not_in(int k, const std::set<int>& avoid) {
    for (int col = 1; col <= k; ++col)
        if (!avoid.count(col)) return col;
    throw PaletteTooSmall("palette exhausted");
}

bool path_reaches(const BichromaticPath& p, int v) {
    return std::find(p.vertices.begin(), p.vertices.end(), v) != p.vertices.end();
}

}  // namespace

void color_two_sparse_edge(EdgeColoring& c, const Graph& g, const Edge& xy) {
    int ei = g.edge_index(xy);
    if (ei < 0) throw EdgeNotPresent("edge not in graph");
    if (c.assigned(ei)) throw EdgeAlreadyColored("edge already colored");
    int x = g.degree(xy.u) == 2 ? xy.u : xy.v;
    int y = x == xy.u ? xy.v : xy.u;
    if (g.degree(x) != 2) throw PreconditionViolated("one endpoint must have degree 2");
    int xprime = g.neighbors(x)[0] == y ? g.neighbors(x)[1] : g.neighbors(x)[0];
    int alpha_ei = g.edge_index(x, xprime);
    if (!c.assigned(alpha_ei))
        throw PreconditionViolated("all edges but xy must be colored");
    int alpha = c.color(alpha_ei);

    auto cands = candidate_colors(c, g, xy);
    for (int col : cands) {
        if (is_valid(c, g, xy, col)) {
            c.assign(ei, col);
            return;
        }
    }
    int beta;
    if (!cands.empty()) {
        int gamma = cands.front();  // every candidate is blocked by a critical path
        beta = smallest_color_not_in(c.palette_size(), {alpha, gamma});
    } else {
        beta = smallest_color_not_in(c.palette_size(), {alpha});
    }
    auto q = maximal_bichromatic_path(c, g, x, alpha, beta);
    if (!q) throw InternalInvariantViolation("x must have an alpha edge");
    extend_by_lemma4(c, g, *q, xy);
}

// Internal recursion over connected subgraphs; defined below.
static EdgeColoring color_component_impl(const Graph& g, int k);

namespace {

void assign_checked(EdgeColoring& c, const Graph& g, const Edge& e, int color,
                    const char* where) {
    if (!is_valid(c, g, e, color))
        throw InternalInvariantViolation(std::string("invalid final color in ") + where);
    c.assign(g.edge_index(e), color);
}

// Subcase Delta=3 of the split step: throw away the current coloring, color
// the small block G_{Y''}(p,b) recursively, and lay the six remaining edges
// down in the fixed bipartite pattern.
void rebuild_small_side(EdgeColoring& c, const Graph& g, const Split& split, int x, int y,
                        int v) {
    int a = split.a, b = split.b;
    if (split.x.size() != 3)
        throw InternalInvariantViolation("delta=3 rebuild expects |X| = 3");
    // p: the unique neighbor of a outside X.
    int p = -1;
    for (int w : g.neighbors(a))
        if (!std::binary_search(split.x.begin(), split.x.end(), w)) {
            if (p != -1) throw InternalInvariantViolation("a must have one neighbor in Y");
            p = w;
        }
    if (p == -1 || p == b || g.has_edge(p, b))
        throw InternalInvariantViolation("rebuild pair (p,b) must be non-adjacent");
    VertexSet y2;
    std::vector<char> excluded(g.num_vertices(), 0);
    for (int w : split.x) excluded[w] = 1;
    excluded[a] = excluded[b] = excluded[p] = 1;
    for (int w = 0; w < g.num_vertices(); ++w)
        if (!excluded[w]) y2.push_back(w);
    if (y2.empty()) throw InternalInvariantViolation("rebuild side must be non-empty");
    Block blk = make_block(g, y2, p, b);
    EdgeColoring inner = color_component_impl(blk.graph, c.palette_size());
    int alpha = inner.color(blk.graph.edge_index(blk.a_img, blk.marker));
    int beta = inner.color(blk.graph.edge_index(blk.b_img, blk.marker));
    int gamma = smallest_color_not_in(c.palette_size(), {alpha, beta});
    for (int ei = 0; ei < g.num_edges(); ++ei) c.clear(ei);
    for (int bi = 0; bi < blk.graph.num_edges(); ++bi) {
        const Edge& be = blk.graph.edges()[bi];
        if (be.u == blk.marker || be.v == blk.marker) continue;
        c.assign(g.edge_index(blk.back_map[be.u], blk.back_map[be.v]), inner.color(bi));
    }
    c.assign(g.edge_index(p, a), alpha);
    c.assign(g.edge_index(b, y), beta);
    c.assign(g.edge_index(a, v), beta);
    c.assign(g.edge_index(y, x), alpha);
    c.assign(g.edge_index(a, x), gamma);
    c.assign(g.edge_index(y, v), gamma);
    for (const Edge& e :
         {Edge(p, a), Edge(b, y), Edge(a, v), Edge(y, x), Edge(a, x), Edge(y, v)})
        assert_no_cycle_through(c, g, g.edge_index(e), "delta3 rebuild");
}

}  // namespace

void color_split_edge(EdgeColoring& c, const Graph& g, const Split& split,
                      const Edge& xa) {
    int ei = g.edge_index(xa);
    if (ei < 0) throw EdgeNotPresent("edge not in graph");
    if (c.assigned(ei)) throw EdgeAlreadyColored("edge already colored");
    int a = split.a;
    int x = xa.u == a ? xa.v : xa.u;
    if (xa.u != a && xa.v != a) throw PreconditionViolated("edge must touch split vertex a");
    if (g.degree(x) != 2) throw PreconditionViolated("x must have degree 2");
    int u = g.neighbors(x)[0] == a ? g.neighbors(x)[1] : g.neighbors(x)[0];
    int alpha_ei = g.edge_index(x, u);
    if (!c.assigned(alpha_ei))
        throw PreconditionViolated("all edges but xa must be colored");
    int alpha = c.color(alpha_ei);
    int b = split.b;

    auto cands = candidate_colors(c, g, xa);
    if (cands.empty()) {
        int beta = smallest_color_not_in(c.palette_size(), {alpha});
        int gamma = smallest_color_not_in(c.palette_size(), {alpha, beta});
        auto r = maximal_bichromatic_path(c, g, x, alpha, beta);
        if (!r) throw InternalInvariantViolation("x must have an alpha edge");
        if (path_reaches(*r, b)) {
            r = maximal_bichromatic_path(c, g, x, alpha, gamma);
            if (!r || path_reaches(*r, b))
                throw InternalInvariantViolation("both escape paths reach b");
        }
        extend_by_lemma4(c, g, *r, xa);
        return;
    }
    for (int col : cands) {
        if (is_valid(c, g, xa, col)) {
            c.assign(ei, col);
            return;
        }
    }
    int gamma = cands.front();  // blocked by an (alpha,gamma,xa)-critical path
    auto p = maximal_bichromatic_path(c, g, x, alpha, gamma);
    if (!p || p->vertices.back() != a)
        throw InternalInvariantViolation("expected critical path ending at a");
    int v = p->vertices[p->vertices.size() - 2];
    int beta = smallest_color_not_in(c.palette_size(), {alpha, gamma});
    auto q = maximal_bichromatic_path(c, g, x, alpha, beta);
    if (!q) throw InternalInvariantViolation("x must have an alpha edge");
    if (!path_reaches(*q, b)) {
        extend_by_lemma4(c, g, *q, xa);
        return;
    }
    if (p->vertices.size() < 3 || q->vertices.size() < 3)
        throw InternalInvariantViolation("paths through u must have length >= 2");
    int z = p->vertices[2];
    int w = q->vertices[2];
    if (w != b) {
        color_exchange(c, g, u, z, w);
        assert_no_cycle_through(c, g, g.edge_index(u, z), "split exchange");
        assert_no_cycle_through(c, g, g.edge_index(u, w), "split exchange");
        assign_checked(c, g, xa, gamma, "split exchange");
        return;
    }
    // w == b: u is the unique X-neighbor y of b.
    int y = u;
    if (c.palette_size() >= 4) {
        int eta = smallest_color_not_in(c.palette_size(), {alpha, beta, gamma});
        std::set<int> fy = color_sets(c, g, y);
        if (!fy.count(eta)) {
            c.assign(alpha_ei, eta);
        } else {
            int kv = colored_neighbor(c, g, y, eta, -1);
            color_exchange(c, g, y, x, kv);
            assert_no_cycle_through(c, g, g.edge_index(y, kv), "split eta exchange");
        }
        assert_no_cycle_through(c, g, alpha_ei, "split eta exchange");
        assign_checked(c, g, xa, gamma, "split eta exchange");
        return;
    }
    rebuild_small_side(c, g, split, x, y, z);
}

EdgeColoring merge_at_cut_vertex(const Graph& parent,
                                 const std::vector<ColoredBlock>& blocks, int x, int k) {
    parent.check_vertex(x);
    int total_deg = 0;
    for (const auto& blk : blocks) {
        int local = -1;
        for (std::size_t v = 0; v < blk.to_parent.size(); ++v)
            if (blk.to_parent[v] == x) local = static_cast<int>(v);
        if (local == -1) throw BadPartition("cut vertex missing from a block");
        total_deg += blk.graph.degree(local);
    }
    if (total_deg > k) throw PaletteTooSmall("cut vertex needs more colors than the palette");

    EdgeColoring out(parent, k);
    std::set<int> used_at_x;
    for (const auto& blk : blocks) {
        int local = -1;
        for (std::size_t v = 0; v < blk.to_parent.size(); ++v)
            if (blk.to_parent[v] == x) local = static_cast<int>(v);
        std::set<int> at_x;
        for (int w : blk.graph.neighbors(local)) {
            int ei = blk.graph.edge_index(local, w);
            if (blk.coloring.assigned(ei)) at_x.insert(blk.coloring.color(ei));
        }
        // Bijection on the palette sending this block's cut-vertex colors
        // away from the colors already taken at x.
        std::vector<int> perm(k + 1, 0);
        std::set<int> taken;
        for (int col : at_x) {
            int t = 1;
            while (used_at_x.count(t) || taken.count(t)) ++t;
            if (t > k) throw PaletteTooSmall("cannot permute colors at cut vertex");
            perm[col] = t;
            taken.insert(t);
        }
        for (int col = 1; col <= k; ++col) {
            if (perm[col] != 0) continue;
            int t = 1;
            while (taken.count(t)) ++t;
            perm[col] = t;
            taken.insert(t);
        }
        for (int ei = 0; ei < blk.graph.num_edges(); ++ei) {
            if (!blk.coloring.assigned(ei)) continue;
            const Edge& be = blk.graph.edges()[ei];
            Edge pe(blk.to_parent[be.u], blk.to_parent[be.v]);
            out.assign(parent.edge_index(pe), perm[blk.coloring.color(ei)]);
        }
        for (int col : at_x) used_at_x.insert(perm[col]);
    }
    return out;
}

namespace {

// Copies colors from a coloring of `sub` (same vertex ids, fewer edges).
void lift_same_vertices(const Graph& sub, const EdgeColoring& from, const Graph& g,
                        EdgeColoring& into) {
    for (int ei = 0; ei < sub.num_edges(); ++ei) {
        if (!from.assigned(ei)) continue;
        const Edge& e = sub.edges()[ei];
        into.assign(g.edge_index(e), from.color(ei));
    }
}

EdgeColoring color_path_or_cycle(const Graph& g, int k) {
    EdgeColoring c(g, k);
    int n = g.num_vertices();
    bool cycle = (g.num_edges() == n) && g.max_degree() == 2;
    int start = 0;
    if (!cycle) {
        for (int v = 0; v < n; ++v)
            if (g.degree(v) == 1) {
                start = v;
                break;
            }
        if (g.num_edges() == 0) return c;
    }
    int prev = -1, cur = start, step = 0;
    while (true) {
        int next = -1;
        for (int w : g.neighbors(cur))
            if (w != prev) {
                next = w;
                break;
            }
        if (next == -1) break;
        int ei = g.edge_index(cur, next);
        bool closing = cycle && next == start;
        c.assign(ei, closing ? 3 : 1 + (step % 2));
        if (closing) break;
        prev = cur;
        cur = next;
        ++step;
    }
    return c;
}

}  // namespace

static EdgeColoring color_component_impl(const Graph& g, int k) {
    if (g.num_edges() == 0) return EdgeColoring(g, k);
    if (g.max_degree() <= 2) return color_path_or_cycle(g, k);

    auto [cuts, block_edges] = cut_vertices_and_blocks(g);
    (void)block_edges;
    if (!cuts.empty()) {
        int x = cuts.front();
        auto [rest, rest_map] = delete_vertices(g, {x});
        std::vector<int> rest_back(rest.num_vertices());
        for (int v = 0; v < g.num_vertices(); ++v)
            if (rest_map[v] != -1) rest_back[rest_map[v]] = v;
        std::vector<ColoredBlock> colored;
        for (VertexSet comp : connected_components(rest)) {
            for (int& v : comp) v = rest_back[v];
            VertexSet verts = comp;
            verts.push_back(x);
            std::sort(verts.begin(), verts.end());
            auto [sub, map] = induced_subgraph(g, verts);
            std::vector<int> back(sub.num_vertices());
            for (int v : verts) back[map[v]] = v;
            ColoredBlock cb;
            cb.graph = sub;
            cb.coloring = color_component_impl(sub, k);
            cb.to_parent = back;
            colored.push_back(std::move(cb));
        }
        return merge_at_cut_vertex(g, colored, x, k);
    }

    // 2-connected with Delta >= 3 from here on. Runs of degree-2 vertices
    // between two branch vertices are contracted wholesale: each chain keeps
    // its smallest interior vertex, the core is colored recursively, and the
    // chain is re-expanded with a third color breaking any 2-color cycle.
    bool has_deg2_pair = false;
    for (const Edge& e : g.edges())
        if (g.degree(e.u) == 2 && g.degree(e.v) == 2) has_deg2_pair = true;
    if (has_deg2_pair) {
        struct Chain {
            int p, q;                  // anchor endpoints (deg >= 3), p < q side first
            std::vector<int> interior;  // ordered from p to q
        };
        std::vector<Chain> chains;
        std::vector<char> on_chain(g.num_vertices(), 0);
        for (int u = 0; u < g.num_vertices(); ++u) {
            if (g.degree(u) < 3) continue;
            for (int w : g.neighbors(u)) {
                if (g.degree(w) != 2 || on_chain[w]) continue;
                Chain ch;
                ch.p = u;
                int prev = u, cur = w;
                while (g.degree(cur) == 2) {
                    on_chain[cur] = 1;
                    ch.interior.push_back(cur);
                    int next = g.neighbors(cur)[0] == prev ? g.neighbors(cur)[1]
                                                          : g.neighbors(cur)[0];
                    prev = cur;
                    cur = next;
                }
                ch.q = cur;
                if (ch.q < ch.p) {
                    std::swap(ch.p, ch.q);
                    std::reverse(ch.interior.begin(), ch.interior.end());
                }
                chains.push_back(std::move(ch));
            }
        }
        VertexSet keep;
        for (int v = 0; v < g.num_vertices(); ++v)
            if (g.degree(v) >= 3) keep.push_back(v);
        for (const Chain& ch : chains)
            keep.push_back(*std::min_element(ch.interior.begin(), ch.interior.end()));
        std::sort(keep.begin(), keep.end());
        std::vector<int> to_h(g.num_vertices(), -1);
        for (std::size_t i = 0; i < keep.size(); ++i) to_h[keep[i]] = static_cast<int>(i);
        std::vector<Edge> hedges;
        for (const Edge& e : g.edges())
            if (g.degree(e.u) >= 3 && g.degree(e.v) >= 3)
                hedges.emplace_back(to_h[e.u], to_h[e.v]);
        for (const Chain& ch : chains) {
            int mid = *std::min_element(ch.interior.begin(), ch.interior.end());
            hedges.emplace_back(to_h[ch.p], to_h[mid]);
            hedges.emplace_back(to_h[mid], to_h[ch.q]);
        }
        Graph h = Graph::from_edge_list(static_cast<int>(keep.size()), hedges);
        EdgeColoring d = color_component_impl(h, k);
        EdgeColoring c(g, k);
        for (const Edge& e : g.edges())
            if (g.degree(e.u) >= 3 && g.degree(e.v) >= 3)
                c.assign(g.edge_index(e), d.color(h.edge_index(to_h[e.u], to_h[e.v])));
        for (const Chain& ch : chains) {
            int mid = *std::min_element(ch.interior.begin(), ch.interior.end());
            int alpha = d.color(h.edge_index(to_h[ch.p], to_h[mid]));
            int beta = d.color(h.edge_index(to_h[mid], to_h[ch.q]));
            std::vector<int> stops{ch.p};
            stops.insert(stops.end(), ch.interior.begin(), ch.interior.end());
            stops.push_back(ch.q);
            int edges_in_chain = static_cast<int>(stops.size()) - 1;
            int gamma = smallest_color_not_in(k, {alpha, beta});
            for (int i = 0; i < edges_in_chain; ++i) {
                int col;
                if (i == 0)
                    col = alpha;
                else if (i == edges_in_chain - 1)
                    col = beta;
                else
                    col = (i % 2 == 1) ? gamma : alpha;
                c.assign(g.edge_index(stops[i], stops[i + 1]), col);
            }
        }
        return c;
    }

    if (is_two_sparse(g).two_sparse) {
        Edge e = g.edges().front();
        Graph sub = delete_edge(g, e);
        EdgeColoring inner = color_component_impl(sub, k);
        EdgeColoring c(g, k);
        lift_same_vertices(sub, inner, g, c);
        color_two_sparse_edge(c, g, e);
        return c;
    }

    Split s = find_special_split(g);
    int x = -1;
    for (int w : g.neighbors(s.a)) {
        if (std::binary_search(s.x.begin(), s.x.end(), w) && !g.has_edge(w, s.b)) {
            x = w;
            break;
        }
    }
    if (x == -1 || g.degree(x) != 2)
        throw InternalInvariantViolation("split has no degree-2 neighbor of a off b");
    Edge e(x, s.a);
    Graph sub = delete_edge(g, e);
    EdgeColoring inner = color_component_impl(sub, k);
    EdgeColoring c(g, k);
    lift_same_vertices(sub, inner, g, c);
    color_split_edge(c, g, s, e);
    return c;
}

int optimal_palette(const Graph& g) {
    int k = 0;
    for (const VertexSet& comp : connected_components(g)) {
        auto [sub, mapping] = induced_subgraph(g, comp);
        (void)mapping;
        int delta = sub.max_degree();
        int need = delta;
        if (delta == 2 && sub.num_edges() == sub.num_vertices()) need = 3;  // cycle
        k = std::max(k, need);
    }
    return k;
}

EdgeColoring color_graph(const Graph& g) {
    StructureReport rep = is_chordless(g);
    if (!rep.chordless) throw NotChordless(rep.chord_witness->u, rep.chord_witness->v);
    int k = optimal_palette(g);
    EdgeColoring c(g, k);
    for (const VertexSet& comp : connected_components(g)) {
        auto [sub, mapping] = induced_subgraph(g, comp);
        std::vector<int> back(sub.num_vertices());
        for (int v : comp) back[mapping[v]] = v;
        EdgeColoring inner = color_component_impl(sub, k);
        for (int ei = 0; ei < sub.num_edges(); ++ei) {
            if (!inner.assigned(ei)) continue;
            const Edge& e = sub.edges()[ei];
            c.assign(g.edge_index(back[e.u], back[e.v]), inner.color(ei));
        }
    }
    return c;
}

}  // namespace chordless
