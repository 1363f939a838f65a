#pragma once

#include <optional>

#include "chordless/graph.hpp"

namespace chordless {

// A split (X,Y,a,b) of a proper 2-cutset {a,b}.
struct Split {
    int a;
    int b;
    VertexSet x;
    VertexSet y;
};

// Block G_X(a,b): the induced graph on X u {a,b} plus a marker vertex of
// degree 2 adjacent to the images of a and b.
struct Block {
    Graph graph;
    int marker;
    int a_img;
    int b_img;
    std::vector<int> back_map;  // block vertex -> original vertex, -1 for marker
};

struct ComponentClassification {
    std::vector<VertexSet> c1;        // trivial (single-vertex) components
    std::vector<VertexSet> c2;        // non-trivial, all block-neighbors of a,b degree 2
    std::vector<VertexSet> c3;        // non-trivial, some block-neighbor of a or b degree >= 3
    std::vector<VertexSet> rejected;  // components whose block is not 2-sparse
};

// Connected components of g minus {a,b}; a,b must be distinct and non-adjacent.
std::vector<VertexSet> components_off_pair(const Graph& g, int a, int b);

Block make_block(const Graph& g, const VertexSet& x, int a, int b);

bool is_proper_split(const Graph& g, const Split& s);

// t >= 3 when the block is K_{2,t} with {a,b} as the degree-t side
// (the marker counts among the t middle vertices).
std::optional<int> is_k2t_block(const Block& blk);

ComponentClassification classify_components(const Graph& g, int a, int b);

// A split whose block G_X(a,b) is 2-sparse, not K_{2,t} (t >= 3), with
// deg(a) >= 3 in the block and deg(b) >= 3 or deg(b) = 2 with X minimal.
// Requires g 2-connected, not 2-sparse, and with no edge joining two
// degree-2 vertices. Pairs are scanned in lexicographic order so the result
// is deterministic.
Split find_special_split(const Graph& g);

}  // namespace chordless
