#include "chordless/coloring.hpp"

#include "chordless/structure.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chordless;

namespace {

EdgeColoring colored(const Graph& g, int k,
                     std::initializer_list<std::pair<std::pair<int, int>, int>> assign) {
    EdgeColoring c(g, k);
    for (auto& [uv, col] : assign) c.assign(g.edge_index(uv.first, uv.second), col);
    return c;
}

bool total_and_acyclic(const Graph& g, const EdgeColoring& c) {
    return c.total() && verify_proper(g, c).proper && verify_acyclic(g, c).acyclic;
}

}  // namespace

TEST_CASE("color_sets and f_ab") {
    Graph c4 = testor::cycle(4);
    EdgeColoring c = colored(c4, 3, {{{0, 1}, 1}, {{1, 2}, 2}, {{2, 3}, 1}, {{0, 3}, 3}});
    CHECK(color_sets(c, c4, 0) == std::set<int>{1, 3});
    CHECK(f_ab(c, c4, 0, 1) == std::set<int>{2});

    EdgeColoring empty(c4, 3);
    CHECK(color_sets(empty, c4, 2).empty());

    Graph h = testor::h7();
    EdgeColoring hc = color_graph(h);
    CHECK(color_sets(hc, h, 2).size() == 4);
    CHECK_THROWS_AS(f_ab(hc, h, 3, 4), EdgeNotPresent);
}

TEST_CASE("maximal_bichromatic_path") {
    Graph c4 = testor::cycle(4);
    EdgeColoring c = colored(c4, 3, {{{0, 1}, 1}, {{1, 2}, 2}, {{2, 3}, 1}, {{0, 3}, 3}});
    auto p = maximal_bichromatic_path(c, c4, 3, 1, 2);
    REQUIRE(p.has_value());
    CHECK(p->vertices == std::vector<int>{3, 2, 1, 0});
    CHECK(p->start_color() == 1);
    CHECK(p->length() == 3);

    CHECK(!maximal_bichromatic_path(c, c4, 3, 2, 1).has_value());  // no 2-edge at 3

    EdgeColoring bad = colored(c4, 2, {{{0, 1}, 1}, {{1, 2}, 2}, {{2, 3}, 1}, {{0, 3}, 2}});
    CHECK_THROWS_AS(maximal_bichromatic_path(bad, c4, 0, 1, 2), NotAcyclic);
}

TEST_CASE("critical_path_exists") {
    Graph c4 = testor::cycle(4);
    EdgeColoring c = colored(c4, 3, {{{0, 1}, 1}, {{1, 2}, 2}, {{2, 3}, 1}});
    CHECK(critical_path_exists(c, c4, 1, 2, 0, 3));
    CHECK(!critical_path_exists(c, c4, 3, 2, 0, 3));
    CHECK_THROWS_AS(critical_path_exists(c, c4, 1, 2, 0, 2), EdgeNotPresent);
}

TEST_CASE("candidate_colors and is_valid") {
    Graph star = testor::make(4, {{0, 1}, {0, 2}, {0, 3}});
    EdgeColoring sc = colored(star, 3, {{{0, 1}, 1}, {{0, 2}, 2}});
    CHECK(candidate_colors(sc, star, Edge(0, 3)) == std::vector<int>{3});

    Graph c4 = testor::cycle(4);
    EdgeColoring c = colored(c4, 3, {{{0, 1}, 1}, {{1, 2}, 2}, {{2, 3}, 1}});
    CHECK(candidate_colors(c, c4, Edge(0, 3)) == std::vector<int>{2, 3});
    CHECK(!is_valid(c, c4, Edge(0, 3), 2));  // closes the (1,2) cycle
    CHECK(is_valid(c, c4, Edge(0, 3), 3));
    CHECK_THROWS_AS(candidate_colors(c, c4, Edge(0, 1)), EdgeAlreadyColored);
}

TEST_CASE("is_valid agrees with assign-and-check oracle") {
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Graph g = generate_chordless(7, seed);
        EdgeColoring full = color_graph(g);
        for (int ei = 0; ei < g.num_edges(); ++ei) {
            EdgeColoring c = full;
            c.clear(ei);
            for (int col = 1; col <= c.palette_size(); ++col)
                CHECK(is_valid(c, g, g.edges()[ei], col) ==
                      testor::oracle_is_valid(c, g, g.edges()[ei], col));
        }
    }
}

TEST_CASE("color_exchange") {
    Graph star = testor::make(3, {{0, 1}, {0, 2}});
    EdgeColoring c = colored(star, 2, {{{0, 1}, 1}, {{0, 2}, 2}});
    color_exchange(c, star, 0, 1, 2);
    CHECK(c.color(star.edge_index(0, 1)) == 2);
    CHECK(c.color(star.edge_index(0, 2)) == 1);
    color_exchange(c, star, 0, 1, 2);  // involution
    CHECK(c.color(star.edge_index(0, 1)) == 1);

    CHECK(exchange_is_valid(c, star, 0, 1, 2));
    EdgeColoring partial = colored(star, 2, {{{0, 1}, 1}});
    CHECK_THROWS_AS(color_exchange(partial, star, 0, 1, 2), Unassigned);
}

TEST_CASE("extend_by_lemma4 direct branch") {
    // gadget: path 1-2-3 colored (1,2), pendant edge 1-0 with deg(0) >= 3
    Graph g = testor::make(6, {{0, 1}, {1, 2}, {2, 3}, {0, 4}, {0, 5}, {3, 4}});
    EdgeColoring c = colored(g, 3, {{{1, 2}, 1}, {{2, 3}, 2}, {{0, 4}, 1}, {{0, 5}, 3},
                                    {{3, 4}, 3}});
    BichromaticPath p{{1, 2, 3}, 1, 2};
    extend_by_lemma4(c, g, p, Edge(0, 1));
    CHECK(c.color(g.edge_index(0, 1)) == 2);  // the one remaining candidate is valid
    CHECK(verify_acyclic(g, c).acyclic);
}

TEST_CASE("extend_by_lemma4 rejects s on the path") {
    Graph g = testor::make(6, {{1, 2}, {2, 3}, {1, 3}, {3, 4}, {3, 5}});
    EdgeColoring c = colored(g, 3, {{{1, 2}, 1}, {{2, 3}, 2}, {{3, 4}, 1}, {{3, 5}, 3}});
    BichromaticPath p{{1, 2, 3}, 1, 2};
    CHECK_THROWS_AS(extend_by_lemma4(c, g, p, Edge(1, 3)), PreconditionViolated);
}

TEST_CASE("color_two_sparse_edge completes K23 minus an edge") {
    Graph g = testor::k23();
    for (const Edge& removed : g.edges()) {
        auto colorings = testor::all_acyclic_colorings(g, 3);
        REQUIRE(!colorings.empty());
        EdgeColoring c = colorings.front();
        c.clear(g.edge_index(removed));
        color_two_sparse_edge(c, g, removed);
        CHECK(total_and_acyclic(g, c));
    }
}

TEST_CASE("color_two_sparse_edge round trips on complete bipartite K2t") {
    int done = 0;
    for (int t = 3; t <= 8; ++t) {
        std::vector<Edge> es;
        for (int s = 0; s < t; ++s) {
            es.emplace_back(0, 2 + s);
            es.emplace_back(1, 2 + s);
        }
        Graph g = Graph::from_edge_list(2 + t, es);
        REQUIRE(is_two_sparse(g).two_sparse);
        EdgeColoring full = color_graph(g);
        CHECK(full.palette_size() == t);
        for (const Edge& e : g.edges()) {
            EdgeColoring c = full;
            c.clear(g.edge_index(e));
            color_two_sparse_edge(c, g, e);
            CHECK(total_and_acyclic(g, c));
            ++done;
        }
    }
    CHECK(done >= 50);
}

TEST_CASE("color_split_edge recompletes H7") {
    Graph h = testor::h7();
    Split s = find_special_split(h);
    Edge xa(2, 5);  // smallest degree-2 neighbor of a not adjacent to b
    EdgeColoring c = color_graph(h);
    c.clear(h.edge_index(xa));
    color_split_edge(c, h, s, xa);
    CHECK(total_and_acyclic(h, c));
    CHECK_THROWS_AS(color_split_edge(c, h, s, Edge(0, 1)), GraphError);
}

TEST_CASE("delta-3 rebuild produces the fixed six-edge pattern") {
    // Delta=3, chordless, not 2-sparse; the engine's split is a=7, b=0,
    // X={1,4,5} with x=4, y=1, v=5, p=6 and the small side {2,3}.
    Graph g = testor::make(8, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {1, 5}, {2, 6}, {3, 6},
                               {4, 7}, {5, 7}, {6, 7}});
    CHECK(is_chordless(g).chordless);
    CHECK(!is_two_sparse(g).two_sparse);
    Split s = find_special_split(g);
    CHECK(s.a == 7);
    CHECK(s.b == 0);
    CHECK(s.x == VertexSet{1, 4, 5});

    EdgeColoring out = color_graph(g);
    CHECK(out.palette_size() == 3);
    CHECK(total_and_acyclic(g, out));

    // Exercise the extension over every acyclic precoloring of g minus xa.
    Edge xa(4, 7);
    Graph rest = delete_edge(g, xa);
    bool pattern_seen = false;
    for (const EdgeColoring& rc : testor::all_acyclic_colorings(rest, 3)) {
        EdgeColoring c(g, 3);
        for (int ei = 0; ei < rest.num_edges(); ++ei)
            c.assign(g.edge_index(rest.edges()[ei]), rc.color(ei));
        color_split_edge(c, g, s, xa);
        CHECK(total_and_acyclic(g, c));
        // the rebuild lays down c(pa)=c(yx), c(by)=c(av), c(ax)=c(yv)
        if (c.color(g.edge_index(6, 7)) == c.color(g.edge_index(1, 4)) &&
            c.color(g.edge_index(0, 1)) == c.color(g.edge_index(5, 7)) &&
            c.color(g.edge_index(4, 7)) == c.color(g.edge_index(1, 5)))
            pattern_seen = true;
    }
    CHECK(pattern_seen);
}

TEST_CASE("color_graph palettes") {
    EdgeColoring c5 = color_graph(testor::cycle(5));
    CHECK(c5.palette_size() == 3);
    CHECK(total_and_acyclic(testor::cycle(5), c5));

    Graph k2 = testor::make(2, {{0, 1}});
    CHECK(color_graph(k2).palette_size() == 1);

    EdgeColoring k23c = color_graph(testor::k23());
    CHECK(k23c.palette_size() == 3);
    CHECK(total_and_acyclic(testor::k23(), k23c));

    EdgeColoring h7c = color_graph(testor::h7());
    CHECK(h7c.palette_size() == 4);
    CHECK(total_and_acyclic(testor::h7(), h7c));

    CHECK_THROWS_AS(color_graph(testor::k4()), NotChordless);
}

TEST_CASE("optimal_palette on mixed graphs") {
    // a path component plus a cycle component: palette 3
    Graph mixed = testor::make(7, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {5, 6}, {3, 6}});
    CHECK(optimal_palette(mixed) == 3);
    EdgeColoring c = color_graph(mixed);
    CHECK(total_and_acyclic(mixed, c));
    CHECK(optimal_palette(Graph::from_edge_list(3, {})) == 0);
}

TEST_CASE("merge_at_cut_vertex") {
    Graph tt = testor::two_triangles();
    EdgeColoring c = color_graph(tt);
    CHECK(c.palette_size() == 4);
    CHECK(total_and_acyclic(tt, c));
    CHECK(color_sets(c, tt, 0).size() == 4);

    Graph p3 = testor::path(3);
    EdgeColoring pc = color_graph(p3);
    CHECK(pc.palette_size() == 2);
    CHECK(color_sets(pc, p3, 1).size() == 2);
}

TEST_CASE("color_graph determinism") {
    for (std::uint64_t seed : {3ULL, 17ULL}) {
        Graph g = generate_chordless(20, seed);
        EdgeColoring a = color_graph(g);
        EdgeColoring b = color_graph(g);
        CHECK(a == b);
    }
}
