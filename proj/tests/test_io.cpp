#include "chordless/io.hpp"

#include <sstream>

#include "doctest.h"
#include "oracles.hpp"

using namespace chordless;

namespace {

Graph parse(const std::string& text) {
    std::istringstream in(text);
    return read_graph(in);
}

}  // namespace

TEST_CASE("read_graph round trip") {
    Graph h = testor::h7();
    std::ostringstream out;
    write_graph(out, h);
    Graph back = parse(out.str());
    CHECK(back.num_vertices() == h.num_vertices());
    CHECK(back.edges() == h.edges());

    Graph empty = parse("3 0\n");
    CHECK(empty.num_vertices() == 3);
    CHECK(empty.num_edges() == 0);

    // blank lines are tolerated
    Graph c3 = parse("\n3 3\n\n0 1\n1 2\n\n0 2\n");
    CHECK(c3.num_edges() == 3);
}

TEST_CASE("read_graph rejects malformed input") {
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("3\n"), ParseError);           // header too short
    CHECK_THROWS_AS(parse("3 1 7\n0 1\n"), ParseError);  // header too long
    CHECK_THROWS_AS(parse("x y\n"), ParseError);
    CHECK_THROWS_AS(parse("3 2\n0 1\n"), ParseError);        // missing edge line
    CHECK_THROWS_AS(parse("3 1\n0 1 2\n"), ParseError);      // edge line too long
    CHECK_THROWS_AS(parse("3 1\n1 0\n"), ParseError);        // u >= v
    CHECK_THROWS_AS(parse("3 1\n1 1\n"), ParseError);        // self loop
    CHECK_THROWS_AS(parse("3 1\n0 3\n"), ParseError);        // vertex out of range
    CHECK_THROWS_AS(parse("-1 0\n"), ParseError);
    CHECK_THROWS_AS(parse("3 2\n0 1\n0 1\n"), ParseError);   // duplicate edge
    CHECK_THROWS_AS(parse("3 1\n0 1\n0 2\n"), ParseError);   // trailing content
}

TEST_CASE("read_graph_file") {
    CHECK_THROWS_AS(read_graph_file("/nonexistent/no-such-file"), IoError);
}

TEST_CASE("coloring round trip") {
    Graph h = testor::h7();
    EdgeColoring c = color_graph(h);
    std::ostringstream out;
    write_coloring(out, h, c);

    std::istringstream in(out.str());
    EdgeColoring back = read_coloring(in, h);
    CHECK(back == c);

    // output is sorted by (u,v) and starts with the palette size
    std::istringstream lines(out.str());
    std::string first;
    std::getline(lines, first);
    CHECK(first == "4");
}

TEST_CASE("read_coloring rejects malformed input") {
    Graph c4 = testor::cycle(4);
    auto parse_col = [&](const std::string& text) {
        std::istringstream in(text);
        return read_coloring(in, c4);
    };
    CHECK_THROWS_AS(parse_col(""), ParseError);
    CHECK_THROWS_AS(parse_col("abc\n"), ParseError);
    CHECK_THROWS_AS(parse_col("-1\n"), ParseError);  // negative palette
    // color out of range
    CHECK_THROWS_AS(parse_col("2\n0 1 3\n0 3 1\n1 2 2\n2 3 1\n"), ParseError);
    // edge not in the graph
    CHECK_THROWS_AS(parse_col("2\n0 2 1\n0 1 2\n0 3 1\n1 2 1\n"), EdgeMismatch);
    // duplicate edge line
    CHECK_THROWS_AS(parse_col("2\n0 1 1\n0 1 2\n0 3 1\n1 2 1\n"), EdgeMismatch);
    // not all edges covered
    CHECK_THROWS_AS(parse_col("2\n0 1 1\n0 3 2\n1 2 2\n"), EdgeMismatch);
    // well formed
    std::istringstream ok("3\n0 1 1\n0 3 2\n1 2 2\n2 3 1\n");
    EdgeColoring c = read_coloring(ok, c4);
    CHECK(c.total());
    CHECK(c.palette_size() == 3);
}
