#include <doctest.h>

#include <stdexcept>

#include "testutil.hpp"
#include "triorient/families.hpp"
#include "triorient/obstruction.hpp"
#include "triorient/patterns.hpp"

using namespace triorient;

TEST_CASE("color recursion and predecessors from a bare k sequence") {
    // Worked 7-vertex instance: k = (0, 2, 2, 4, 5) for i = 2..6.
    walk_labels w;
    w.n = 6;
    w.k = {-1, -1, 0, 2, 2, 4, 5};
    colors_and_predecessors(w);
    CHECK(w.c == std::vector{0, 1, 1, 0, 0, 1, 0});
    CHECK(w.p0 == std::vector{-1, -1, 0, 0, 3, 4, 4});
    CHECK(w.p1 == std::vector{-1, -1, 1, 2, 2, 2, 5});

    // E_6 = {01, 20, 21, 30, 32, 43, 42, 54, 52, 64, 65}
    std::vector<Edge> edges{{0, 1}};
    for (int i = 2; i <= 6; ++i) {
        edges.push_back({w.p0[i], i});
        edges.push_back({w.p1[i], i});
    }
    graph d(7, edges);
    graph expected(7, {{0, 1},
                       {0, 2},
                       {1, 2},
                       {0, 3},
                       {2, 3},
                       {3, 4},
                       {2, 4},
                       {4, 5},
                       {2, 5},
                       {4, 6},
                       {5, 6}});
    REQUIRE(d.edge_count() == 11);
    CHECK(std::equal(d.edges().begin(), d.edges().end(), expected.edges().begin()));
    CHECK(count_triangles(d) == 5); // |P| + |Q| - 2 = 4 + 3 - 2
}

TEST_CASE("walk labels of a concrete contradicting path on K4") {
    graph k4 = gen_complete(4);
    std::vector<std::pair<int, int>> path{{0, 1}, {1, 2}, {3, 1}, {1, 0}};
    walk_labels w = compute_walk_labels(path, k4);
    REQUIRE(w.n == 4);
    CHECK(w.fplus == std::vector{-1, 1, 2, 3, 0});
    CHECK(w.fminus == std::vector{-1, 0, 1, 1, 1});
    CHECK(w.k == std::vector{-1, -1, 1, 1, 1});
    CHECK(w.c == std::vector{0, 1, 0, 0, 0});
    CHECK(w.p0 == std::vector{-1, -1, 0, 2, 3});
    CHECK(w.p1 == std::vector{-1, -1, 1, 1, 1});
}

TEST_CASE("building the obstruction from the K4 walk") {
    graph k4 = gen_complete(4);
    walk_labels w = compute_walk_labels({{0, 1}, {1, 2}, {3, 1}, {1, 0}}, k4);
    obstruction ob = build_obstruction(w, k4);

    CHECK(ob.kind == obstruction_kind::odd_donut);
    CHECK(ob.tjoin.vertex_count() == 5);
    CHECK(ob.tjoin.edge_count() == 7);
    CHECK(count_triangles(ob.tjoin) == 3);
    CHECK(ob.phi == std::vector{0, 1, 2, 3, 0});
    // phi(4) = phi(0), so 4 glues to 0 and k(4)=1 glues to 1 (trivially)
    CHECK(ob.identify[0] == std::array{4, 0});
    CHECK(ob.identify[1] == std::array{1, 1});
    // the quotient of this fan is K4 itself
    CHECK(ob.host.vertex_count() == 4);
    CHECK(ob.host.edge_count() == 6);
    CHECK(testutil::isomorphic(ob.host, k4));
    CHECK(verify_homomorphism(ob.host_map, ob.host, k4));
}

TEST_CASE("path validation rejects malformed walks") {
    graph k4 = gen_complete(4);
    // too short
    CHECK_THROWS_AS(compute_walk_labels({{0, 1}, {1, 0}}, k4), std::invalid_argument);
    // endpoints not reversals
    CHECK_THROWS_AS(compute_walk_labels({{0, 1}, {1, 2}, {3, 1}, {1, 3}}, k4),
                    std::invalid_argument);
    // not an oriented edge of the graph
    graph c5 = gen_cycle(5);
    CHECK_THROWS_AS(compute_walk_labels({{0, 2}, {2, 1}, {1, 0}}, c5), std::invalid_argument);
    // consecutive arcs must meet head-to-tail or tail-to-head
    CHECK_THROWS_AS(compute_walk_labels({{0, 1}, {2, 1}, {1, 2}, {1, 0}}, k4),
                    std::invalid_argument);
    // consecutive arcs must span a triangle
    graph c4 = gen_cycle(4);
    CHECK_THROWS_AS(compute_walk_labels({{0, 1}, {1, 2}, {2, 3}, {1, 0}}, c4),
                    std::invalid_argument);
}

TEST_CASE("homomorphism verification") {
    graph c6 = gen_cycle(6);
    graph k2(2, {{0, 1}});
    CHECK(verify_homomorphism({0, 1, 0, 1, 0, 1}, c6, k2));
    CHECK_FALSE(verify_homomorphism({0, 1, 0, 1, 0, 0}, c6, k2));

    graph k3 = gen_complete(3);
    CHECK(verify_homomorphism({0, 1, 2}, k3, k3));
    CHECK_FALSE(verify_homomorphism({0, 0, 1}, k3, k3));

    CHECK_THROWS_AS(verify_homomorphism({0, 1}, k3, k3), std::invalid_argument);
    CHECK_THROWS_AS(verify_homomorphism({0, 1, 5}, k3, k3), std::invalid_argument);
}

TEST_CASE("triangle-free graphs extract as orientations") {
    auto grotzsch = extract_t3_obstruction(gen_grotzsch());
    REQUIRE(std::holds_alternative<orientation>(grotzsch));
    CHECK_FALSE(has_violation(std::get<orientation>(grotzsch), {pattern::T3}));

    auto tree = extract_t3_obstruction(gen_star(5));
    CHECK(std::holds_alternative<orientation>(tree));
}

TEST_CASE("K4 and the 5-wheel extract verified obstructions") {
    for (const graph& g : {gen_complete(4), gen_wheel(5)}) {
        auto result = extract_t3_obstruction(g);
        REQUIRE(std::holds_alternative<obstruction>(result));
        const obstruction& ob = std::get<obstruction>(result);
        CHECK(verify_homomorphism(ob.host_map, ob.host, g));
        long long triangles = count_triangles(ob.tjoin);
        if (ob.kind == obstruction_kind::odd_donut)
            CHECK(triangles % 2 == 1);
        else
            CHECK(triangles % 2 == 0);
        // obstructions are themselves T3 no-instances
        CHECK_FALSE(brute_force_orientable(ob.host, {pattern::T3}).has_value());
    }
}

TEST_CASE("walks that are not homomorphic to the host are rejected") {
    graph k4 = gen_complete(4);
    walk_labels w = compute_walk_labels({{0, 1}, {1, 2}, {3, 1}, {1, 0}}, k4);
    w.fplus[2] = 0; // vertex 2's image now collides along a t-join edge
    CHECK_THROWS_AS(build_obstruction(w, k4), std::logic_error);
}
