#include <doctest.h>

#include <stdexcept>

#include "triorient/graph.hpp"

using namespace triorient;

TEST_CASE("edges canonicalize to u < v and sort") {
    graph g(4, {{3, 1}, {0, 2}, {2, 1}});
    REQUIRE(g.edge_count() == 3);
    CHECK(g.edge(0) == Edge{0, 2});
    CHECK(g.edge(1) == Edge{1, 2});
    CHECK(g.edge(2) == Edge{1, 3});
    CHECK(g.adjacent(1, 3));
    CHECK(g.adjacent(3, 1));
    CHECK_FALSE(g.adjacent(0, 3));
    CHECK_FALSE(g.adjacent(2, 2));
    CHECK(g.edge_index(2, 0) == 0);
    CHECK_FALSE(g.edge_index(0, 3).has_value());
    CHECK(g.degree(2) == 2);
    CHECK(g.max_degree() == 2);
}

TEST_CASE("constructor rejects bad edges") {
    CHECK_THROWS_AS(graph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(graph(3, {{0, 3}}), std::invalid_argument);
    CHECK_THROWS_AS(graph(3, {{-1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("orientation arcs follow flip flags") {
    graph g(3, {{0, 1}, {1, 2}});
    orientation o(g, {0, 1});
    CHECK(o.arc(0) == std::pair{0, 1});
    CHECK(o.arc(1) == std::pair{2, 1});
    CHECK(o.directed_as(0, 1));
    CHECK_FALSE(o.directed_as(1, 0));
    CHECK(o.directed_as(2, 1));
    CHECK_THROWS_AS(o.directed_as(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(orientation(g, {0}), std::invalid_argument);
    CHECK_THROWS_AS(orientation(g, {0, 2}), std::invalid_argument);
}

TEST_CASE("parse_graph accepts comments and blank lines") {
    graph g = parse_graph("# a triangle\n\n3 3\n0 1\n  # middle comment\n1 2\n0 2\n");
    CHECK(g.vertex_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.adjacent(0, 2));
}

TEST_CASE("parse_graph reports physical line numbers") {
    CHECK_THROWS_WITH(parse_graph("x y\n"), "line 1: malformed header, expected \"n m\"");
    CHECK_THROWS_WITH(parse_graph("3 -1\n"), "line 1: negative count in header");
    CHECK_THROWS_WITH(parse_graph(""), "empty input, expected \"n m\" header");
    CHECK_THROWS_WITH(parse_graph("# c\n3 2\n0 1\n2 2\n"), "line 4: loop edge 2");
    CHECK_THROWS_WITH(parse_graph("3 2\n0 1\n0 5\n"), "line 3: vertex out of range [0, 3)");
    CHECK_THROWS_WITH(parse_graph("3 2\n0 1\n2 1\n"), "line 3: edge endpoints must satisfy u < v");
    CHECK_THROWS_WITH(parse_graph("3 1\n0 1\n1 2\n"), "line 3: more than 1 edges");
    CHECK_THROWS_WITH(parse_graph("3 3\n0 1\n1 2\n"), "expected 3 edges, found 2");
    CHECK_THROWS_WITH(parse_graph("3 2\n0 1\nquux\n"), "line 3: malformed edge line");
    CHECK_THROWS_WITH(parse_graph("3 3\n0 1\n\n1 2\n0 1\n"), "line 5: duplicate edge 0 1");
}

TEST_CASE("write_graph round-trips") {
    graph g(4, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
    std::string text = write_graph(g);
    CHECK(text == "4 4\n0 1\n0 3\n1 2\n2 3\n");
    graph back = parse_graph(text);
    CHECK(back.vertex_count() == 4);
    CHECK(std::equal(back.edges().begin(), back.edges().end(), g.edges().begin()));
}

TEST_CASE("orientation text round-trips against its base") {
    graph g(3, {{0, 1}, {1, 2}, {0, 2}});
    orientation o(g, {1, 0, 1});
    std::string text = write_orientation(o);
    CHECK(text == "3 3\n1 0\n0 2\n2 1\n");
    orientation back = parse_orientation(text, g);
    for (int e = 0; e < 3; ++e) CHECK(back.arc(e) == o.arc(e));

    CHECK_THROWS_WITH(parse_orientation("3 2\n0 1\n1 2\n", g),
                      "line 1: header does not match base graph (3 3)");
    CHECK_THROWS_WITH(parse_orientation("3 3\n0 1\n1 0\n1 2\n", g),
                      "line 3: edge oriented twice: 1 0");
    CHECK_THROWS_WITH(parse_orientation("3 3\n0 1\n1 2\n0 2\n2 1\n", g), "line 5: more than 3 arcs");
    graph path(3, {{0, 1}, {1, 2}});
    CHECK_THROWS_WITH(parse_orientation("3 2\n0 1\n0 2\n", path),
                      "line 3: not an edge of the base graph: 0 2");
}

TEST_CASE("connected components sorted by smallest vertex") {
    graph g(6, {{4, 5}, {0, 2}, {2, 3}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 3);
    CHECK(comps[0] == std::vector{0, 2, 3});
    CHECK(comps[1] == std::vector{1});
    CHECK(comps[2] == std::vector{4, 5});
}

TEST_CASE("triangle counts") {
    CHECK(count_triangles(graph(3, {})) == 0);
    CHECK(count_triangles(graph(3, {{0, 1}, {1, 2}, {0, 2}})) == 1);
    // K4 has 4 triangles, the 5-wheel 5, K5 10.
    CHECK(count_triangles(graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == 4);
    graph w5(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}, {0, 5}, {1, 5}, {2, 5}, {3, 5}, {4, 5}});
    CHECK(count_triangles(w5) == 5);
    graph k5(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK(count_triangles(k5) == 10);
}
