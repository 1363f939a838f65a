#pragma once

#include <iosfwd>
#include <string>

#include "chordless/coloring.hpp"
#include "chordless/graph.hpp"

namespace chordless {

// Graph text format: header `n m`, then m lines `u v` with 0 <= u < v < n.
Graph read_graph(std::istream& in);
Graph read_graph_file(const std::string& path);  // "-" reads standard input
void write_graph(std::ostream& out, const Graph& g);

// Coloring text format: header `k`, then one line `u v c` per edge, sorted
// by (u,v), with 1 <= c <= k. Every graph edge must appear exactly once.
EdgeColoring read_coloring(std::istream& in, const Graph& g);
EdgeColoring read_coloring_file(const std::string& path, const Graph& g);
void write_coloring(std::ostream& out, const Graph& g, const EdgeColoring& c);

}  // namespace chordless
