#include <chrono>
#include <cmath>
#include <iostream>

#include "CLI11.hpp"
#include "chordless/decomposition.hpp"
#include "chordless/io.hpp"
#include "chordless/structure.hpp"
#include "chordless/verify.hpp"

namespace {

using namespace chordless;

constexpr int kExitNotChordless = 2;
constexpr int kExitParse = 64;
constexpr int kExitIo = 66;

int cmd_check(const std::string& path, bool machine) {
    Graph g = read_graph_file(path);
    StructureReport chordless_rep = is_chordless(g);
    StructureReport sparse_rep = is_two_sparse(g);
    if (machine) {
        std::cout << "chordless=" << (chordless_rep.chordless ? "yes" : "no");
        if (chordless_rep.chord_witness)
            std::cout << " witness=" << chordless_rep.chord_witness->u << ","
                      << chordless_rep.chord_witness->v;
        std::cout << '\n';
        std::cout << "two_sparse=" << (sparse_rep.two_sparse ? "yes" : "no");
        if (sparse_rep.two_sparse_witness)
            std::cout << " witness=" << sparse_rep.two_sparse_witness->u << ","
                      << sparse_rep.two_sparse_witness->v;
        std::cout << '\n';
    } else {
        std::cout << "chordless: " << (chordless_rep.chordless ? "yes" : "no");
        if (chordless_rep.chord_witness)
            std::cout << " (" << chordless_rep.chord_witness->u << ","
                      << chordless_rep.chord_witness->v << ")";
        std::cout << '\n';
        std::cout << "2-sparse: " << (sparse_rep.two_sparse ? "yes" : "no");
        if (sparse_rep.two_sparse_witness)
            std::cout << " (" << sparse_rep.two_sparse_witness->u << ","
                      << sparse_rep.two_sparse_witness->v << ")";
        std::cout << '\n';
    }
    return chordless_rep.chordless ? 0 : 1;
}

int cmd_color(const std::string& path) {
    Graph g = read_graph_file(path);
    EdgeColoring c = color_graph(g);
    write_coloring(std::cout, g, c);
    return 0;
}

int cmd_verify(const std::string& graph_path, const std::string& coloring_path) {
    Graph g = read_graph_file(graph_path);
    EdgeColoring c = read_coloring_file(coloring_path, g);
    ProperReport p = verify_proper(g, c);
    std::cout << "proper: " << (p.proper ? "yes" : "no");
    if (p.clash)
        std::cout << " (" << p.clash->first.u << "," << p.clash->first.v << ") ("
                  << p.clash->second.u << "," << p.clash->second.v << ")";
    std::cout << '\n';
    if (!p.proper) {
        std::cout << "acyclic: no\n";
        return 1;
    }
    AcyclicReport a = verify_acyclic(g, c);
    std::cout << "acyclic: " << (a.acyclic ? "yes" : "no");
    if (!a.acyclic) {
        std::cout << " (colors " << a.alpha << "," << a.beta << ":";
        for (int v : a.cycle) std::cout << ' ' << v;
        std::cout << ")";
    }
    std::cout << '\n';
    return a.acyclic ? 0 : 1;
}

int cmd_arboricity(const std::string& path) {
    Graph g = read_graph_file(path);
    EdgeColoring c = color_graph(g);
    ForestPartition fp = extract_linear_forests(g, c);
    for (int i = 0; i < fp.count(); ++i) {
        std::cout << "forest " << (i + 1) << ":";
        bool first = true;
        for (const Edge& e : fp.classes[i]) {
            std::cout << (first ? " " : ", ") << e.u << ' ' << e.v;
            first = false;
        }
        std::cout << '\n';
    }
    return 0;
}

int cmd_oracle(const std::string& path, int max_k, int max_edges) {
    Graph g = read_graph_file(path);
    OracleReport rep = brute_force_aci(g, max_k, max_edges);
    std::cout << "aci=" << rep.aci << '\n';
    write_coloring(std::cout, g, rep.witness);
    return 0;
}

int cmd_split(const std::string& path, bool slow_checks) {
    Graph g = read_graph_file(path);
    Split s = find_special_split(g);
    std::cout << s.a << ' ' << s.b << " |";
    for (int v : s.x) std::cout << ' ' << v;
    std::cout << " |";
    for (int v : s.y) std::cout << ' ' << v;
    std::cout << '\n';
    if (slow_checks) {
        // Minimality audit for the deg(b)=2 shape: no single component of
        // g - {a,b} gives a qualifying split with a strictly smaller X.
        Block blk = make_block(g, s.x, s.a, s.b);
        if (blk.graph.degree(blk.b_img) == 2) {
            for (const VertexSet& comp : components_off_pair(g, s.a, s.b)) {
                if (comp.size() >= s.x.size()) continue;
                Split cand{s.a, s.b, comp, {}};
                std::vector<char> in_x(g.num_vertices(), 0);
                for (int v : comp) in_x[v] = 1;
                in_x[s.a] = in_x[s.b] = 1;
                for (int v = 0; v < g.num_vertices(); ++v)
                    if (!in_x[v]) cand.y.push_back(v);
                Block cb = make_block(g, cand.x, cand.a, cand.b);
                if (is_proper_split(g, cand) && is_two_sparse(cb.graph).two_sparse &&
                    !is_k2t_block(cb) && cb.graph.degree(cb.a_img) >= 3 &&
                    cb.graph.degree(cb.b_img) == 2) {
                    std::cout << "minimality: violated\n";
                    return 1;
                }
            }
            std::cout << "minimality: ok\n";
        }
    }
    return 0;
}

int cmd_gen(int n, std::uint64_t seed) {
    write_graph(std::cout, generate_chordless(n, seed));
    return 0;
}

int cmd_bench(const std::vector<int>& sizes, std::uint64_t seed) {
    std::vector<double> log_n, log_t;
    for (int n : sizes) {
        Graph g = generate_chordless(n, seed);
        auto t0 = std::chrono::steady_clock::now();
        EdgeColoring c = color_graph(g);
        auto t1 = std::chrono::steady_clock::now();
        double secs = std::chrono::duration<double>(t1 - t0).count();
        bool ok = verify_proper(g, c).proper && verify_acyclic(g, c).acyclic &&
                  c.palette_size() == optimal_palette(g);
        std::cout << "n=" << n << " m=" << g.num_edges() << " seconds=" << secs
                  << " verified=" << (ok ? "yes" : "no") << '\n';
        log_n.push_back(std::log(static_cast<double>(n)));
        log_t.push_back(std::log(std::max(secs, 1e-9)));
    }
    if (sizes.size() >= 2) {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t i = 0; i < log_n.size(); ++i) {
            sx += log_n[i];
            sy += log_t[i];
            sxx += log_n[i] * log_n[i];
            sxy += log_n[i] * log_t[i];
        }
        double k = static_cast<double>(log_n.size());
        double slope = (k * sxy - sx * sy) / (k * sxx - sx * sx);
        std::cout << "exponent=" << slope << '\n';
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"chordless graph recognition, optimal acyclic edge coloring, and "
                 "linear-forest extraction"};
    app.require_subcommand(1);
    bool machine = false, slow_checks = false;
    app.add_flag("--machine", machine, "key=value output");
    app.add_flag("--slow-checks", slow_checks, "enable expensive audits");

    std::string path = "-", coloring_path;
    std::uint64_t seed = 0;
    int max_k = -1, max_edges = 24, gen_n = 10;
    std::vector<int> sizes;

    auto* check = app.add_subcommand("check", "chordless / 2-sparse recognition");
    check->add_option("path", path, "graph file, - for stdin");
    auto* color = app.add_subcommand("color", "optimal acyclic edge coloring");
    color->add_option("path", path, "graph file, - for stdin");
    auto* verify = app.add_subcommand("verify", "check a coloring for a graph");
    verify->add_option("graph", path, "graph file")->required();
    verify->add_option("coloring", coloring_path, "coloring file")->required();
    auto* arbo = app.add_subcommand("arboricity", "minimum linear-forest partition");
    arbo->add_option("path", path, "graph file, - for stdin");
    auto* oracle = app.add_subcommand("oracle", "exhaustive exact coloring search");
    oracle->add_option("path", path, "graph file, - for stdin");
    oracle->add_option("--max-k", max_k, "largest palette to try");
    oracle->add_option("--max-edges", max_edges, "search-size guard");
    auto* split = app.add_subcommand("split", "show the chosen 2-cutset split");
    split->add_option("path", path, "graph file, - for stdin");
    auto* gen = app.add_subcommand("gen", "generate a random chordless graph");
    gen->add_option("n", gen_n, "target vertex count")->required();
    gen->add_option("--seed", seed, "random seed");
    auto* bench = app.add_subcommand("bench", "time color_graph on generated graphs");
    bench->add_option("sizes", sizes, "ascending vertex counts")->required();
    bench->add_option("--seed", seed, "random seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (check->parsed()) return cmd_check(path, machine);
        if (color->parsed()) return cmd_color(path);
        if (verify->parsed()) return cmd_verify(path, coloring_path);
        if (arbo->parsed()) return cmd_arboricity(path);
        if (oracle->parsed()) return cmd_oracle(path, max_k, max_edges);
        if (split->parsed()) return cmd_split(path, slow_checks);
        if (gen->parsed()) return cmd_gen(gen_n, seed);
        if (bench->parsed()) return cmd_bench(sizes, seed);
    } catch (const NotChordless& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitNotChordless;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const EdgeMismatch& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitParse;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const GraphError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
