#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "chordless/decomposition.hpp"
#include "chordless/io.hpp"
#include "chordless/structure.hpp"
#include "chordless/verify.hpp"

namespace py = pybind11;
using namespace chordless;

namespace {

std::vector<std::pair<int, int>> edge_pairs(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    for (const Edge& e : g.edges()) out.emplace_back(e.u, e.v);
    return out;
}

Graph graph_from_pairs(int n, const std::vector<std::pair<int, int>>& pairs) {
    std::vector<Edge> edges;
    for (auto [u, v] : pairs) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

py::dict coloring_to_dict(const Graph& g, const EdgeColoring& c) {
    py::dict d;
    for (int ei = 0; ei < g.num_edges(); ++ei)
        if (c.assigned(ei))
            d[py::make_tuple(g.edges()[ei].u, g.edges()[ei].v)] = c.color(ei);
    return d;
}

}  // namespace

PYBIND11_MODULE(_chordless, m) {
    m.doc() = "chordless-graph recognition and optimal acyclic edge coloring";

    auto base = py::register_exception<GraphError>(m, "GraphLibraryError");
    py::register_exception<NotChordless>(m, "NotChordlessError", base.ptr());

    py::class_<Graph>(m, "Graph")
        .def(py::init(&graph_from_pairs), py::arg("n"), py::arg("edges"))
        .def_property_readonly("n", &Graph::num_vertices)
        .def_property_readonly("m", &Graph::num_edges)
        .def("degree", &Graph::degree)
        .def("neighbors",
             [](const Graph& g, int v) { return g.neighbors(v); })
        .def("edges", &edge_pairs)
        .def("__repr__", [](const Graph& g) {
            std::ostringstream ss;
            ss << "Graph(n=" << g.num_vertices() << ", m=" << g.num_edges() << ")";
            return ss.str();
        });

    m.def("is_chordless", [](const Graph& g) -> py::tuple {
        StructureReport r = is_chordless(g);
        if (r.chordless) return py::make_tuple(true, py::none());
        return py::make_tuple(false,
                              py::make_tuple(r.chord_witness->u, r.chord_witness->v));
    });
    m.def("is_two_sparse", [](const Graph& g) -> py::tuple {
        StructureReport r = is_two_sparse(g);
        if (r.two_sparse) return py::make_tuple(true, py::none());
        return py::make_tuple(
            false, py::make_tuple(r.two_sparse_witness->u, r.two_sparse_witness->v));
    });
    m.def("optimal_palette", &optimal_palette);
    m.def("color_graph", [](const Graph& g) {
        EdgeColoring c = color_graph(g);
        return py::make_tuple(c.palette_size(), coloring_to_dict(g, c));
    });
    m.def("verify_coloring", [](const Graph& g, int k,
                                const std::map<std::pair<int, int>, int>& assignment) {
        EdgeColoring c(g, k);
        for (auto& [uv, col] : assignment) {
            int ei = g.edge_index(uv.first, uv.second);
            if (ei < 0) throw EdgeNotPresent("colored edge not in graph");
            c.assign(ei, col);
        }
        if (!verify_proper(g, c).proper) return false;
        return verify_acyclic(g, c).acyclic;
    });
    m.def("linear_forests", [](const Graph& g) {
        ForestPartition fp = extract_linear_forests(g, color_graph(g));
        std::vector<std::vector<std::pair<int, int>>> out;
        for (auto& cls : fp.classes) {
            std::vector<std::pair<int, int>> fs;
            for (const Edge& e : cls) fs.emplace_back(e.u, e.v);
            out.push_back(std::move(fs));
        }
        return out;
    });
    m.def("brute_force_aci",
          [](const Graph& g, int k_max, int max_edges) {
              OracleReport rep = brute_force_aci(g, k_max, max_edges);
              return py::make_tuple(rep.aci, coloring_to_dict(g, rep.witness),
                                    rep.nodes_explored);
          },
          py::arg("g"), py::arg("k_max") = -1, py::arg("max_edges") = 24);
    m.def("generate_chordless", &generate_chordless, py::arg("n_target"),
          py::arg("seed") = 0);
    m.def("find_special_split", [](const Graph& g) {
        Split s = find_special_split(g);
        return py::make_tuple(s.a, s.b, s.x, s.y);
    });
}
