#pragma once

#include <optional>
#include <set>

#include "chordless/decomposition.hpp"
#include "chordless/graph.hpp"

namespace chordless {

// Partial proper acyclic edge coloring over a fixed graph's edge list.
// Colors are 1..k; 0 means unassigned. The coloring is only meaningful
// together with the graph whose edge indexing it was built from.
class EdgeColoring {
  public:
    EdgeColoring() = default;
    EdgeColoring(const Graph& g, int k) : k_(k), color_(g.num_edges(), 0) {}

    int palette_size() const { return k_; }
    int num_assigned() const;
    bool total() const;

    int color(int edge_index) const { return color_.at(edge_index); }
    bool assigned(int edge_index) const { return color_.at(edge_index) != 0; }

    void assign(int edge_index, int color);
    void clear(int edge_index) { color_.at(edge_index) = 0; }

    friend bool operator==(const EdgeColoring&, const EdgeColoring&) = default;

  private:
    int k_ = 0;
    std::vector<int> color_;
};

// F_u: colors on assigned edges incident to u.
std::set<int> color_sets(const EdgeColoring& c, const Graph& g, int u);

// F_{ab} = F_b minus the color of ab.
std::set<int> f_ab(const EdgeColoring& c, const Graph& g, int a, int b);

struct BichromaticPath {
    std::vector<int> vertices;  // from the start vertex outward
    int alpha;                  // color of the first edge
    int beta;
    int start_color() const { return alpha; }
    int length() const { return static_cast<int>(vertices.size()) - 1; }
};

// The maximal alternating path leaving `start` through its alpha-colored
// edge. Absent when start has no alpha edge. Throws NotAcyclic if the walk
// closes a bichromatic cycle (the coloring was not acyclic).
std::optional<BichromaticPath> maximal_bichromatic_path(const EdgeColoring& c,
                                                        const Graph& g, int start,
                                                        int alpha, int beta);

// True iff the (alpha,beta)-maximal path from a ends at b with an alpha edge.
bool critical_path_exists(const EdgeColoring& c, const Graph& g, int alpha, int beta,
                          int a, int b);

// Palette colors absent at both endpoints of the (uncolored) edge e.
std::vector<int> candidate_colors(const EdgeColoring& c, const Graph& g, const Edge& e);

// Candidate whose assignment creates no bichromatic cycle.
bool is_valid(const EdgeColoring& c, const Graph& g, const Edge& e, int color);

// Swaps the colors of edges ui and uj (both must be assigned).
void color_exchange(EdgeColoring& c, const Graph& g, int u, int i, int j);

// True when swapping colors of ui and uj keeps the coloring proper and
// creates no bichromatic cycle through either edge.
bool exchange_is_valid(const EdgeColoring& c, const Graph& g, int u, int i, int j);

// Colors the pendant edge (path.vertices.front(), s) by the bichromatic-path
// recoloring procedure: direct valid color if one exists, otherwise exchange
// the two path colors along the path, repair the single possible cycle at the
// far end, and finish with alpha or the smallest surviving candidate.
void extend_by_lemma4(EdgeColoring& c, const Graph& g, const BichromaticPath& path,
                      const Edge& pendant);

// One step of the 2-sparse coloring loop: colors edge xy (deg(x) = 2) given
// every other edge is already acyclically colored.
void color_two_sparse_edge(EdgeColoring& c, const Graph& g, const Edge& xy);

// One step of the split case: colors edge xa of the special split given every
// other edge is colored; may rebuild the coloring of the small block when the
// palette has only 3 colors.
void color_split_edge(EdgeColoring& c, const Graph& g, const Split& split,
                      const Edge& xa);

struct ColoredBlock {
    Graph graph;
    EdgeColoring coloring;
    std::vector<int> to_parent;  // block vertex -> parent vertex
};

// Permutes each block's palette so the edges at the shared cut vertex get
// pairwise distinct colors, then unions the colorings.
EdgeColoring merge_at_cut_vertex(const Graph& parent,
                                 const std::vector<ColoredBlock>& blocks, int x, int k);

// Total acyclic coloring of a chordless graph with a'(g) colors per
// component (max over components). Throws NotChordless otherwise.
EdgeColoring color_graph(const Graph& g);

// The palette color_graph will use: per component Delta, or 3 for cycles,
// maxed over components.
int optimal_palette(const Graph& g);

}  // namespace chordless
