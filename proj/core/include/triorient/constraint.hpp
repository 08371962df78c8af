#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "triorient/graph.hpp"
#include "triorient/patterns.hpp"

namespace triorient {

// Implication digraph over edge orientations.  Every edge {u,v} of the base
// graph contributes two vertices: "oriented u->v" and "oriented v->u"; the
// vertex for edge index e is 2e when oriented from its smaller endpoint and
// 2e+1 otherwise, so dual(v) == (v ^ 1).
//
// An arc (x,y) -> (z,w) means: orienting edge xy as x->y forces orienting
// edge zw as z->w.  For each two-edge configuration x-y-z (center y) and each
// forbidden pattern, the two arcs of the clause "not both" are emitted:
//   B1 (arcs into y):      (x,y)->(y,z)  and  (z,y)->(y,x)     [xz not an edge]
//   B2 (arcs out of y):    (y,x)->(z,y)  and  (y,z)->(x,y)     [xz not an edge]
//   B3 (path through y):   both clauses {x->y,y->z} and {z->y,y->x}
//   T3 (inside a triangle) the B1- and B2-shaped clauses at every corner;
//                          a triangle therefore contributes 12 arcs.
// The construction emits each arc exactly once and is skew-symmetric:
// (u,v) is an arc iff (dual(v), dual(u)) is.  With f = {T3} the arc set is
// additionally symmetric, so the digraph can be read as an undirected graph.
class constraint_digraph {
public:
    // f must be simple (a subset of {B1, B2, B3, T3}).
    constraint_digraph(graph g, forbidden_set f);

    int order() const { return 2 * base_.edge_count(); }
    std::size_t arc_count() const { return arc_count_; }

    static int dual(int v) { return v ^ 1; }

    // Vertex id as an oriented pair (from, to).
    std::pair<int, int> pair_of(int v) const;

    // Id of the vertex "edge {from,to} oriented from->to"; throws if no edge.
    int vertex_id(int from, int to) const;

    std::span<const int> out_neighbors(int v) const {
        return out_[static_cast<std::size_t>(v)];
    }
    bool has_arc(int from_id, int to_id) const;

    const graph& base() const { return base_; }
    forbidden_set forbidden() const { return forbidden_; }

    // One line "x,y -> z,w" per arc, sorted by (source id, target id).
    std::string dump() const;

private:
    graph base_;
    forbidden_set forbidden_;
    std::vector<std::vector<int>> out_;
    std::size_t arc_count_ = 0;
};

constraint_digraph build_constraint_digraph(const graph& g, forbidden_set f);

} // namespace triorient
