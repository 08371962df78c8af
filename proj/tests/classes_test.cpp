#include <doctest.h>

#include <random>
#include <string>

#include "testutil.hpp"
#include "triorient/classes.hpp"
#include "triorient/families.hpp"

using namespace triorient;

namespace {

const atlas_row& row_for(const atlas_report& r, const std::string& set_name) {
    for (const atlas_row& row : r.rows)
        if (row.set.to_string() == set_name) return row;
    REQUIRE(false);
    return r.rows.front(); // unreachable
}

bool no_mismatch(const atlas_report& r) {
    for (const atlas_row& row : r.rows)
        if (row.agree && !*row.agree) return false;
    return true;
}

} // namespace

TEST_CASE("class profile of the 5-cycle") {
    class_profile p = compute_class_profile(gen_cycle(5));
    CHECK(p.unicyclic_per_component);
    CHECK(p.triangle_free);
    CHECK_FALSE(p.bipartite);
    CHECK(p.max_degree_le_2);
    CHECK_FALSE(p.star_or_triangle_components);
    CHECK(p.k4_free);
    CHECK(p.locally_bipartite);
    CHECK_FALSE(p.complete_components);
    CHECK_FALSE(p.complete_multipartite);
}

TEST_CASE("class profile of K4") {
    class_profile p = compute_class_profile(gen_complete(4));
    CHECK_FALSE(p.unicyclic_per_component);
    CHECK_FALSE(p.triangle_free);
    CHECK_FALSE(p.k4_free);
    CHECK_FALSE(p.locally_bipartite);
    CHECK(p.complete_components);
    CHECK(p.complete_multipartite);
}

TEST_CASE("class profile of the 5-wheel") {
    class_profile p = compute_class_profile(gen_wheel(5));
    CHECK(p.k4_free); // the rim is triangle-free
    CHECK_FALSE(p.locally_bipartite); // the hub sees an odd cycle
    CHECK_FALSE(p.unicyclic_per_component);
    CHECK_FALSE(p.complete_multipartite);
}

TEST_CASE("class profile of stars, paths and unions of triangles") {
    class_profile star = compute_class_profile(gen_star(4));
    CHECK(star.star_or_triangle_components);
    CHECK(star.unicyclic_per_component);
    CHECK(star.bipartite);
    CHECK_FALSE(star.max_degree_le_2);
    CHECK(star.complete_multipartite); // K_{1,4} is complete bipartite
    CHECK_FALSE(star.complete_components);

    class_profile path = compute_class_profile(gen_path(4));
    CHECK_FALSE(path.star_or_triangle_components); // two branch vertices
    CHECK(path.unicyclic_per_component);

    graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    class_profile tt = compute_class_profile(two_triangles);
    CHECK(tt.star_or_triangle_components);
    CHECK(tt.complete_components);
    CHECK(tt.unicyclic_per_component);
    CHECK_FALSE(tt.complete_multipartite); // an edge plus a far vertex

    class_profile isolated = compute_class_profile(graph(3, {}));
    CHECK(isolated.star_or_triangle_components);
    CHECK(isolated.complete_components);
    CHECK(isolated.complete_multipartite);
}

TEST_CASE("atlas of the 5-cycle") {
    atlas_report r = atlas(gen_cycle(5));
    REQUIRE(r.rows.size() == 26);
    CHECK(no_mismatch(r));

    CHECK(row_for(r, "B1").orientable == std::optional(true));
    CHECK(row_for(r, "T3").orientable == std::optional(true));

    const atlas_row& unicyclic = row_for(r, "B1,T3");
    CHECK(unicyclic.method == atlas_method::constraint);
    CHECK(unicyclic.orientable == std::optional(true));
    CHECK(unicyclic.predicate == std::optional(true));
    CHECK(unicyclic.agree == std::optional(true));

    // every orientation of an induced path hits one of B1, B2, B3
    CHECK(row_for(r, "B1,B2,B3").orientable == std::optional(false));

    const atlas_row& lone = row_for(r, "K1K2");
    CHECK(lone.method == atlas_method::exhaustive);
    CHECK(lone.orientable == std::optional(false));
    CHECK(lone.predicate == std::optional(false));

    CHECK(row_for(r, "C3").orientable == std::optional(true));
    CHECK(row_for(r, "T3,C3").orientable == std::optional(true));
    CHECK(row_for(r, "B3,T3,C3").orientable == std::optional(false)); // odd cycle
    CHECK(row_for(r, "B1,T3,C3").orientable == std::optional(true));
    CHECK_FALSE(row_for(r, "B1,C3").predicate.has_value());
    CHECK_FALSE(row_for(r, "B1,C3").agree.has_value());
}

TEST_CASE("atlas rows agree with their structural families on fixed graphs") {
    for (const graph& g : {gen_complete(4), gen_wheel(5), gen_star(4), gen_path(5),
                           gen_complete_multipartite({2, 2}),
                           graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}})}) {
        atlas_report r = atlas(g);
        REQUIRE(r.rows.size() == 26);
        CHECK(no_mismatch(r));
    }
}

TEST_CASE("atlas rows agree on random graphs") {
    std::mt19937 rng(4242);
    for (int trial = 0; trial < 20; ++trial) {
        graph g = testutil::random_graph(6, 0.4, rng);
        CAPTURE(write_graph(g));
        CHECK(no_mismatch(atlas(g)));
    }
}

TEST_CASE("exhaustive rows are skipped over the edge cap") {
    atlas_report r = atlas(gen_wheel(5), 5);
    for (const atlas_row& row : r.rows) {
        if (row.method == atlas_method::exhaustive) {
            CHECK_FALSE(row.orientable.has_value());
            CHECK_FALSE(row.agree.has_value());
        } else {
            CHECK(row.orientable.has_value());
        }
    }
}

TEST_CASE("atlas of a single vertex") {
    atlas_report r = atlas(graph(1, {}));
    CHECK(no_mismatch(r));
    for (const atlas_row& row : r.rows) CHECK(row.orientable == std::optional(true));
}

TEST_CASE("atlas text table") {
    std::string table = format_atlas(atlas(gen_cycle(5)));
    CHECK(table.find("profile: unicyclic_per_component=yes") == 0);
    CHECK(table.find("B1,T3") != std::string::npos);
    CHECK(table.find("unicyclic per component") != std::string::npos);
    CHECK(table.find("MISMATCH") == std::string::npos);
    size_t lines = 0;
    for (char ch : table) lines += (ch == '\n');
    CHECK(lines == 31); // 2 profile lines, a blank, header, rule, 26 rows
}
