#include "chordless/decomposition.hpp"

#include "chordless/structure.hpp"
#include "doctest.h"
#include "oracles.hpp"

using namespace chordless;

TEST_CASE("components_off_pair") {
    auto comps = components_off_pair(testor::h7(), 0, 2);
    CHECK(comps == std::vector<VertexSet>{{1, 5, 6}, {3}, {4}});
    CHECK(components_off_pair(testor::cycle(4), 0, 2) ==
          std::vector<VertexSet>{{1}, {3}});
    CHECK(components_off_pair(testor::cycle(5), 0, 2) ==
          std::vector<VertexSet>{{1}, {3, 4}});
    CHECK_THROWS_AS(components_off_pair(testor::h7(), 0, 1), AdjacentPair);
    CHECK_THROWS_AS(components_off_pair(testor::h7(), 3, 3), AdjacentPair);
}

TEST_CASE("make_block") {
    Graph h = testor::h7();
    Block b1 = make_block(h, {3, 4}, 0, 2);
    CHECK(b1.graph.num_vertices() == 5);
    CHECK(b1.graph.num_edges() == 6);  // 4 original + 2 marker edges
    CHECK(b1.graph.degree(b1.marker) == 2);
    CHECK(is_bipartite(b1.graph).bipartite);
    CHECK(b1.graph.degree(b1.a_img) == 3);
    CHECK(b1.graph.degree(b1.b_img) == 3);

    Block b2 = make_block(h, {1, 5, 6}, 2, 0);
    CHECK(b2.graph.num_edges() == 7);  // 5 original + 2 marker edges
    CHECK(b2.graph.degree(b2.a_img) == 3);
    CHECK(b2.graph.degree(b2.b_img) == 2);

    Block b3 = make_block(testor::cycle(5), {1}, 0, 2);
    CHECK(b3.graph.num_vertices() == 4);
    CHECK(b3.graph.num_edges() == 4);  // the 4-cycle 0-1-2-w
    for (int v = 0; v < 4; ++v) CHECK(b3.graph.degree(v) == 2);

    CHECK_THROWS_AS(make_block(h, {}, 0, 2), BadPartition);
    CHECK_THROWS_AS(make_block(h, {0, 3}, 0, 2), BadPartition);
}

TEST_CASE("is_proper_split") {
    Graph h = testor::h7();
    CHECK(is_proper_split(h, Split{2, 0, {1, 5, 6}, {3, 4}}));
    CHECK(!is_proper_split(testor::cycle(5), Split{0, 2, {1}, {3, 4}}));
    CHECK(!is_proper_split(h, Split{0, 1, {5, 6}, {2, 3, 4}}));  // a adjacent b
    CHECK(!is_proper_split(h, Split{2, 0, {1, 5}, {3, 4, 6}}));  // X-Y edge
}

TEST_CASE("is_k2t_block") {
    Graph h = testor::h7();
    auto t = is_k2t_block(make_block(h, {3, 4}, 0, 2));
    REQUIRE(t.has_value());
    CHECK(*t == 3);
    CHECK(!is_k2t_block(make_block(h, {1, 5, 6}, 2, 0)).has_value());
    CHECK(!is_k2t_block(make_block(testor::cycle(5), {1}, 0, 2)).has_value());  // t=2
}

TEST_CASE("classify_components") {
    auto h_cls = classify_components(testor::h7(), 0, 2);
    CHECK(h_cls.c1 == std::vector<VertexSet>{{3}, {4}});
    CHECK(h_cls.c2.empty());
    CHECK(h_cls.c3 == std::vector<VertexSet>{{1, 5, 6}});
    CHECK(h_cls.rejected.empty());

    auto c5_cls = classify_components(testor::cycle(5), 0, 2);
    CHECK(c5_cls.c1 == std::vector<VertexSet>{{1}});
    CHECK(c5_cls.c2 == std::vector<VertexSet>{{3, 4}});
    CHECK(c5_cls.c3.empty());

    auto c4_cls = classify_components(testor::cycle(4), 0, 2);
    CHECK(c4_cls.c1 == std::vector<VertexSet>{{1}, {3}});
    CHECK(c4_cls.c2.empty());
    CHECK(c4_cls.c3.empty());
}

TEST_CASE("find_special_split on H7") {
    Split s = find_special_split(testor::h7());
    CHECK(s.a == 2);
    CHECK(s.b == 0);
    CHECK(s.x == VertexSet{1, 5, 6});
    CHECK(s.y == VertexSet{3, 4});

    // split postconditions
    CHECK(is_proper_split(testor::h7(), s));
    Block blk = make_block(testor::h7(), s.x, s.a, s.b);
    CHECK(is_two_sparse(blk.graph).two_sparse);
    CHECK(!is_k2t_block(blk).has_value());
    CHECK(blk.graph.degree(blk.a_img) >= 3);
}

TEST_CASE("find_special_split preconditions") {
    CHECK_THROWS_AS(find_special_split(testor::k23()), PreconditionViolated);  // 2-sparse
    CHECK_THROWS_AS(find_special_split(testor::two_triangles()),
                    PreconditionViolated);  // cut vertex
    CHECK_THROWS_AS(find_special_split(testor::path(4)), PreconditionViolated);
}
