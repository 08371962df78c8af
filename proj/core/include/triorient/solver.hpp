#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <variant>
#include <vector>

#include "triorient/constraint.hpp"
#include "triorient/graph.hpp"
#include "triorient/patterns.hpp"

namespace triorient {

struct yes_certificate {
    orientation oriented; // verified f-free before being returned
};

// Witness of infeasibility: a constraint path that forces edge {u,v} to be
// oriented both ways.  path holds oriented pairs, starting at (edge.u, edge.v)
// and ending at (edge.v, edge.u); consecutive entries are constraint arcs and
// all entries lie in one strong component.
struct no_certificate {
    Edge edge;
    std::vector<std::pair<int, int>> path;
};

using certificate = std::variant<yes_certificate, no_certificate>;

inline bool is_yes(const certificate& c) { return std::holds_alternative<yes_certificate>(c); }

// Strongly connected components in reverse topological order: if any arc
// leads from component A to component B, then B is listed before A.
// Component vertex lists are sorted ascending.
std::vector<std::vector<int>> strong_components_reverse_topological(
    std::span<const std::vector<int>> adjacency);
std::vector<std::vector<int>> strong_components_reverse_topological(const constraint_digraph& d);

// One pass of the marking algorithm: walk components in reverse topological
// order; an unmarked component equal to its own dual stops the pass, otherwise
// it is marked true and its dual false.  True-marked vertices induce the
// returned orientation in solve().
struct component_marking {
    std::vector<std::vector<int>> components;
    std::vector<int> component_of;       // constraint vertex -> component index
    std::vector<std::int8_t> mark;       // per component: -1 unset, 0 false, 1 true
    std::optional<int> self_dual;        // first self-dual component, if any
};
component_marking mark_components(const constraint_digraph& d);

// Shortest constraint path from (e.u, e.v) to (e.v, e.u).  Throws
// std::invalid_argument unless both lie in the same strong component.
std::vector<std::pair<int, int>> extract_contradicting_path(const constraint_digraph& d, Edge e);

// Decides whether g has an orientation avoiding every pattern in f
// (f must be simple).  Both certificate kinds are re-verified before
// they are returned.
certificate solve(const graph& g, forbidden_set f);

} // namespace triorient
