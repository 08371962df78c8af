#include "triorient/constraint.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace triorient {

constraint_digraph::constraint_digraph(graph g, forbidden_set f)
    : base_(std::move(g)), forbidden_(f) {
    if (!f.is_simple())
        throw std::invalid_argument(
            "constraint digraph requires a simple forbidden set (subset of B1,B2,B3,T3)");

    out_.assign(static_cast<std::size_t>(order()), {});
    auto arc = [&](int from, int to) {
        out_[static_cast<std::size_t>(from)].push_back(to);
        ++arc_count_;
    };
    auto id = [&](int from, int to) {
        int e = *base_.edge_index(from, to);
        return 2 * e + (from < to ? 0 : 1);
    };

    bool b1 = f.contains(pattern::B1);
    bool b2 = f.contains(pattern::B2);
    bool b3 = f.contains(pattern::B3);
    bool t3 = f.contains(pattern::T3);

    for (int y = 0; y < base_.vertex_count(); ++y) {
        auto nb = base_.neighbors(y);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int x = nb[i], z = nb[j];
                bool triangle = base_.adjacent(x, z);
                if (!triangle) {
                    if (b1) { // not both x->y and z->y
                        arc(id(x, y), id(y, z));
                        arc(id(z, y), id(y, x));
                    }
                    if (b2) { // not both y->x and y->z
                        arc(id(y, x), id(z, y));
                        arc(id(y, z), id(x, y));
                    }
                    if (b3) { // neither x->y->z nor z->y->x
                        arc(id(x, y), id(z, y));
                        arc(id(y, z), id(y, x));
                        arc(id(z, y), id(x, y));
                        arc(id(y, x), id(y, z));
                    }
                } else if (t3) {
                    // two converging or two diverging arcs at a triangle corner
                    // force a transitive triangle whichever way the third edge goes
                    arc(id(x, y), id(y, z));
                    arc(id(z, y), id(y, x));
                    arc(id(y, x), id(z, y));
                    arc(id(y, z), id(x, y));
                }
            }
        }
    }
    for (auto& list : out_) std::sort(list.begin(), list.end());
}

std::pair<int, int> constraint_digraph::pair_of(int v) const {
    const Edge& e = base_.edge(v / 2);
    return (v & 1) ? std::pair{e.v, e.u} : std::pair{e.u, e.v};
}

int constraint_digraph::vertex_id(int from, int to) const {
    auto e = base_.edge_index(from, to);
    if (!e)
        throw std::invalid_argument("not an edge: " + std::to_string(from) + " " +
                                    std::to_string(to));
    return 2 * *e + (from < to ? 0 : 1);
}

bool constraint_digraph::has_arc(int from_id, int to_id) const {
    auto list = out_neighbors(from_id);
    return std::binary_search(list.begin(), list.end(), to_id);
}

std::string constraint_digraph::dump() const {
    std::ostringstream out;
    for (int v = 0; v < order(); ++v) {
        auto [a, b] = pair_of(v);
        for (int w : out_neighbors(v)) {
            auto [c, d] = pair_of(w);
            out << a << ',' << b << " -> " << c << ',' << d << '\n';
        }
    }
    return out.str();
}

constraint_digraph build_constraint_digraph(const graph& g, forbidden_set f) {
    return constraint_digraph(g, f);
}

} // namespace triorient
