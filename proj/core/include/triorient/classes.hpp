#pragma once

#include <optional>
#include <string>
#include <vector>

#include "triorient/graph.hpp"
#include "triorient/patterns.hpp"

namespace triorient {

// Structural graph-class predicates, each recomputable from the graph alone.
// Orientation properties are component-wise, so the component-sensitive
// predicates quantify over connected components.
struct class_profile {
    bool unicyclic_per_component;    // every component has |E| <= |V|
    bool triangle_free;
    bool bipartite;
    bool max_degree_le_2;
    bool star_or_triangle_components; // every component a star K_{1,k} or a K3
    bool k4_free;
    bool locally_bipartite;           // every open neighborhood induces a bipartite graph
    bool complete_components;
    bool complete_multipartite;       // no induced "edge + vertex seeing neither end"
};

class_profile compute_class_profile(const graph& g);

enum class atlas_method { constraint, exhaustive };

// One forbidden set's decision next to the graph family it characterizes.
// orientable is empty when the exhaustive search was skipped (edge cap);
// predicate is empty when the family has no structural test here
// (circular-arc, comparability, nested-interval and the open rows).
struct atlas_row {
    forbidden_set set;
    atlas_method method;
    std::optional<bool> orientable;
    std::string family;
    std::optional<bool> predicate;
    std::optional<bool> agree;
};

struct atlas_report {
    class_profile profile;
    std::vector<atlas_row> rows;
};

// Decisions for all 15 nonempty simple sets via the constraint digraph and
// for 11 sets involving C3 or K1K2 via exhaustive search (those rows are
// skipped when g has more than oracle_cap edges), each with the structural
// predicate and an agreement flag where a predicate exists.
atlas_report atlas(const graph& g, int oracle_cap = 20);

// Fixed-width text table, one row per forbidden set.
std::string format_atlas(const atlas_report& r);

} // namespace triorient
