#include "chordless/io.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

namespace chordless {

namespace {

// Reads the next non-empty line; false at end of input.
bool next_line(std::istream& in, std::string& line) {
    while (std::getline(in, line)) {
        std::size_t pos = line.find_first_not_of(" \t\r");
        if (pos != std::string::npos) return true;
    }
    return false;
}

std::vector<long long> parse_ints(const std::string& line, std::size_t expect,
                                  const char* what) {
    std::istringstream ss(line);
    std::vector<long long> out;
    long long v;
    while (ss >> v) out.push_back(v);
    std::string rest;
    if (ss >> rest || out.size() != expect)
        throw ParseError(std::string("expected ") + what + ", got: " + line);
    return out;
}

}  // namespace

Graph read_graph(std::istream& in) {
    std::string line;
    if (!next_line(in, line)) throw ParseError("missing graph header");
    auto header = parse_ints(line, 2, "`n m` header");
    long long n = header[0], m = header[1];
    if (n < 0 || m < 0) throw ParseError("negative n or m");
    std::vector<Edge> edges;
    for (long long i = 0; i < m; ++i) {
        if (!next_line(in, line)) throw ParseError("fewer edge lines than m");
        auto uv = parse_ints(line, 2, "`u v` edge line");
        if (uv[0] < 0 || uv[1] <= uv[0] || uv[1] >= n)
            throw ParseError("edge out of range or not u < v: " + line);
        edges.emplace_back(static_cast<int>(uv[0]), static_cast<int>(uv[1]));
    }
    if (next_line(in, line)) throw ParseError("trailing content after edge list");
    try {
        return Graph::from_edge_list(static_cast<int>(n), edges);
    } catch (const DuplicateEdge& e) {
        throw ParseError(e.what());
    }
}

Graph read_graph_file(const std::string& path) {
    if (path == "-") return read_graph(std::cin);
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_graph(in);
}

void write_graph(std::ostream& out, const Graph& g) {
    out << g.num_vertices() << ' ' << g.num_edges() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

EdgeColoring read_coloring(std::istream& in, const Graph& g) {
    std::string line;
    if (!next_line(in, line)) throw ParseError("missing coloring header");
    auto header = parse_ints(line, 1, "`k` header");
    long long k = header[0];
    if (k < 0) throw ParseError("negative palette size");
    EdgeColoring c(g, static_cast<int>(k));
    int seen = 0;
    while (next_line(in, line)) {
        auto uvc = parse_ints(line, 3, "`u v c` line");
        Edge e(static_cast<int>(uvc[0]), static_cast<int>(uvc[1]));
        int ei = g.edge_index(e);
        if (ei < 0) throw EdgeMismatch("colored edge not in graph: " + line);
        if (c.assigned(ei)) throw EdgeMismatch("edge colored twice: " + line);
        if (uvc[2] < 1 || uvc[2] > k) throw ParseError("color out of range: " + line);
        c.assign(ei, static_cast<int>(uvc[2]));
        ++seen;
    }
    if (seen != g.num_edges()) throw EdgeMismatch("coloring does not cover every edge");
    return c;
}

EdgeColoring read_coloring_file(const std::string& path, const Graph& g) {
    if (path == "-") return read_coloring(std::cin, g);
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_coloring(in, g);
}

void write_coloring(std::ostream& out, const Graph& g, const EdgeColoring& c) {
    out << c.palette_size() << '\n';
    for (int ei = 0; ei < g.num_edges(); ++ei) {
        const Edge& e = g.edges()[ei];
        out << e.u << ' ' << e.v << ' ' << c.color(ei) << '\n';
    }
}

}  // namespace chordless
