#pragma once

#include <array>
#include <utility>
#include <variant>
#include <vector>

#include "triorient/graph.hpp"

namespace triorient {

// Labels along a contradicting path a_1..a_n (arcs of g; entry i of the
// certificate path).  All arc-indexed vectors are 1-based with slot 0 unused;
// k, p0, p1 are defined for i >= 2 only (slots 0 and 1 hold -1).
//
//   fminus[i]: endpoint of a_i shared with a_{i-1}  (for i=1: not shared with a_2)
//   fplus[i]:  the other endpoint of a_i            (for i=1: shared with a_2)
//   k[i] = max { j < i : fplus[j] == fminus[i] }
//   c[0]=0, c[1]=1, c[i] = c[k[i]] + 1 (mod 2)
//   p0[i] / p1[i]: largest j < i with c[j] == 0 / 1
struct walk_labels {
    int n = 0;
    std::vector<int> tails, heads; // 1..n
    std::vector<int> fplus, fminus;
    std::vector<int> k;
    std::vector<int> c; // 0..n
    std::vector<int> p0, p1;
};

// Fills c, p0, p1 from a k map (slots 2..n); exposed separately so the color
// recursion can be exercised on a bare k sequence.
void colors_and_predecessors(walk_labels& labels);

// Validates the path structurally against g (each entry an oriented edge,
// consecutive arcs share exactly one endpoint head-to-tail or tail-to-head
// and span a triangle, first and last entries are reversals of each other,
// n >= 3) and computes every label.  Throws std::invalid_argument on a
// malformed path.
walk_labels compute_walk_labels(const std::vector<std::pair<int, int>>& path, const graph& g);

enum class obstruction_kind { odd_donut, even_mobius_donut };
const char* to_string(obstruction_kind k);

// An obstruction to T3-free orientability: host = tjoin / identify is an odd
// donut or even Mobius donut, and host_map is a verified homomorphism into
// the graph it was extracted from.  phi is the pre-quotient map on tjoin;
// identify lists the two merged pairs {larger index, smaller index}.
struct obstruction {
    obstruction_kind kind;
    graph tjoin;
    std::array<std::array<int, 2>, 2> identify;
    std::vector<int> phi;
    graph host;
    std::vector<int> host_map; // host vertex -> g vertex
};

// True iff map sends every edge of `from` to an edge of `to`.
// Throws std::invalid_argument if map is not total on from's vertices or
// has values outside to's range.
bool verify_homomorphism(const std::vector<int>& map, const graph& from, const graph& to);

// The full construction: t-join D on {0..n} from the predecessor maps,
// phi(0) = fminus[1], phi(i) = fplus[i], identification of n with 0 and k(n)
// with 1 when phi(n) == phi(0) (crosswise otherwise), kind from the color of
// n versus its identification target, cross-checked against the triangle
// parity of D.  Every internal inconsistency throws std::logic_error.
obstruction build_obstruction(const walk_labels& labels, const graph& g);

// Decides T3-free orientability; on No, runs the pipeline above on the
// shortest contradicting path of the smallest violating edge.
std::variant<orientation, obstruction> extract_t3_obstruction(const graph& g);

} // namespace triorient
