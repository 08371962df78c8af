#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace triorient {

// Undirected edge, stored with u < v.
struct Edge {
    int u = 0;
    int v = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
    friend auto operator<=>(const Edge&, const Edge&) = default;
};

// Simple undirected graph on vertices 0..n-1.
// Invariants: edges are loop-free, duplicate-free, stored with u < v and
// sorted lexicographically; adjacency lists are sorted.
class graph {
public:
    graph() = default;

    // Edges may arrive in any order and endpoint order; they are canonicalized.
    // Throws std::invalid_argument on loops, duplicates or out-of-range endpoints.
    graph(int n, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }

    std::span<const Edge> edges() const { return edges_; }
    const Edge& edge(int e) const { return edges_[static_cast<std::size_t>(e)]; }

    std::span<const int> neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    int degree(int v) const { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }
    int max_degree() const;

    bool adjacent(int u, int v) const;

    // Index of edge {u,v} in the sorted edge list, or nullopt if absent.
    std::optional<int> edge_index(int u, int v) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
};

// Orientation of every edge of a base graph.  flip[e] == 0 orients edge e
// from its smaller endpoint to its larger one, flip[e] == 1 the other way.
class orientation {
public:
    orientation(graph base, std::vector<std::uint8_t> flip);

    const graph& base() const { return base_; }

    // Arc of edge e as (from, to).
    std::pair<int, int> arc(int e) const;

    // True iff {from,to} is an edge oriented from -> to.  Throws if not an edge.
    bool directed_as(int from, int to) const;

    std::uint8_t flip(int e) const { return flip_[static_cast<std::size_t>(e)]; }

private:
    graph base_;
    std::vector<std::uint8_t> flip_;
};

// Edge-list text format:
//   first non-comment line "n m", then m lines "u v" with 0 <= u < v < n.
// Lines whose first non-space character is '#' and blank lines are skipped.
// Errors are reported with 1-based physical line numbers.
graph parse_graph(const std::string& text);
std::string write_graph(const graph& g);

// Orientation text format: same header, then m lines "u v" meaning arc u -> v.
// Every base edge must appear exactly once.
orientation parse_orientation(const std::string& text, const graph& base);
std::string write_orientation(const orientation& o);

// Vertex sets of connected components, each sorted, ordered by smallest vertex.
std::vector<std::vector<int>> connected_components(const graph& g);

long long count_triangles(const graph& g);

} // namespace triorient
