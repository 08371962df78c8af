#pragma once

#include <string>
#include <vector>

#include "triorient/graph.hpp"

namespace triorient {

// Two paths P (p vertices) and Q (q vertices) on parallel lines, the cycle
// closed by edges x1y1 and xp yq, interior triangulated by chords with one
// end in each path.  merge encodes the triangulation: bit '0' advances the
// P frontier, '1' the Q frontier, each step adding one chord; exactly p-1
// zeros and q-1 ones, so length p+q-2 (the final step adds the closing
// edge xp yq itself).
struct tjoin_spec {
    int p = 1;
    int q = 3;
    std::string merge = "11";

    // Throws std::invalid_argument unless p,q >= 1, p+q >= 4 and merge has
    // the composition above.
    void validate() const;
};

struct donut_spec {
    tjoin_spec tjoin;
    bool mobius = false;
};

// Vertices 0..p-1 are P in order, p..p+q-1 are Q in order.
// Triangle count is p+q-2; edge count is 2(p+q)-3.
graph gen_tjoin(const tjoin_spec& spec);

// Quotient of the t-join: straight (x1~xp, y1~yq) for a donut, crosswise
// (x1~yq, y1~xp) for a Mobius donut.  Identified vertices relabel to the
// smallest class member, edges are deduplicated.  A spec whose quotient
// would carry a loop (p = q = 2 straight; an end vertex adjacent to all of
// the opposite path crosswise) throws std::invalid_argument.
graph gen_donut(const donut_spec& spec);

graph gen_path(int n);
graph gen_cycle(int n);
graph gen_star(int leaves);
graph gen_complete(int n);
graph gen_complete_multipartite(const std::vector<int>& part_sizes);
// Rim cycle 0..k-1 plus hub k adjacent to the whole rim.
graph gen_wheel(int k);
// Triangle 0,1,2 with a pendant triangle on each edge: 3 adj {0,1},
// 4 adj {1,2}, 5 adj {2,0}.  6 vertices, 9 edges.
graph gen_hajos();
// Original vertices 0..n-1, shadow of v at v+n adjacent to v's original
// neighbors, apex 2n adjacent to every shadow.
graph mycielskian(const graph& g);
// mycielskian(C5): 11 vertices, 20 edges, triangle-free, not 3-colorable.
graph gen_grotzsch();

// Dispatch by name: path/cycle/star/complete/wheel take one size argument,
// complete_multipartite takes the part sizes, hajos/grotzsch take none.
// Throws std::invalid_argument on unknown names or bad argument counts.
graph gen_standard(const std::string& name, const std::vector<int>& args);

} // namespace triorient
