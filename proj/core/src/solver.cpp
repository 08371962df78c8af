#include "triorient/solver.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace triorient {

namespace {

// Iterative Tarjan.  Emission order of components is reverse topological.
struct tarjan_state {
    std::span<const std::vector<int>> adj;
    std::vector<int> index, lowlink;
    std::vector<std::uint8_t> on_stack;
    std::vector<int> stack;
    std::vector<std::vector<int>> components;
    int next_index = 0;

    explicit tarjan_state(std::span<const std::vector<int>> a)
        : adj(a),
          index(a.size(), -1),
          lowlink(a.size(), 0),
          on_stack(a.size(), 0) {}

    void run_from(int root) {
        struct frame {
            int v;
            std::size_t i; // next out-neighbor position
        };
        std::vector<frame> frames;
        frames.push_back({root, 0});
        index[root] = lowlink[root] = next_index++;
        stack.push_back(root);
        on_stack[root] = 1;

        while (!frames.empty()) {
            frame& f = frames.back();
            if (f.i < adj[f.v].size()) {
                int w = adj[f.v][f.i++];
                if (index[w] < 0) {
                    index[w] = lowlink[w] = next_index++;
                    stack.push_back(w);
                    on_stack[w] = 1;
                    frames.push_back({w, 0});
                } else if (on_stack[w]) {
                    lowlink[f.v] = std::min(lowlink[f.v], index[w]);
                }
            } else {
                int v = f.v;
                frames.pop_back();
                if (!frames.empty())
                    lowlink[frames.back().v] = std::min(lowlink[frames.back().v], lowlink[v]);
                if (lowlink[v] == index[v]) {
                    std::vector<int> comp;
                    for (;;) {
                        int w = stack.back();
                        stack.pop_back();
                        on_stack[w] = 0;
                        comp.push_back(w);
                        if (w == v) break;
                    }
                    std::sort(comp.begin(), comp.end());
                    components.push_back(std::move(comp));
                }
            }
        }
    }
};

} // namespace

std::vector<std::vector<int>> strong_components_reverse_topological(
    std::span<const std::vector<int>> adjacency) {
    tarjan_state st(adjacency);
    for (int v = 0; v < static_cast<int>(adjacency.size()); ++v)
        if (st.index[v] < 0) st.run_from(v);
    return std::move(st.components);
}

std::vector<std::vector<int>> strong_components_reverse_topological(const constraint_digraph& d) {
    std::vector<std::vector<int>> adj(d.order());
    for (int v = 0; v < d.order(); ++v) {
        auto out = d.out_neighbors(v);
        adj[v].assign(out.begin(), out.end());
    }
    return strong_components_reverse_topological(adj);
}

component_marking mark_components(const constraint_digraph& d) {
    component_marking r;
    r.components = strong_components_reverse_topological(d);
    r.component_of.assign(d.order(), -1);
    for (int c = 0; c < static_cast<int>(r.components.size()); ++c)
        for (int v : r.components[c]) r.component_of[v] = c;
    r.mark.assign(r.components.size(), -1);

    for (int c = 0; c < static_cast<int>(r.components.size()); ++c) {
        if (r.mark[c] != -1) continue;
        int v0 = r.components[c].front();
        int cd = r.component_of[constraint_digraph::dual(v0)];
        if (cd == c) {
            r.self_dual = c;
            return r;
        }
        r.mark[c] = 1;
        r.mark[cd] = 0;
    }
    return r;
}

std::vector<std::pair<int, int>> extract_contradicting_path(const constraint_digraph& d, Edge e) {
    int start = d.vertex_id(e.u, e.v);
    int goal = constraint_digraph::dual(start);

    std::vector<int> prev(d.order(), -2);
    prev[start] = -1;
    std::deque<int> queue{start};
    while (!queue.empty() && prev[goal] == -2) {
        int v = queue.front();
        queue.pop_front();
        for (int w : d.out_neighbors(v)) {
            if (prev[w] != -2) continue;
            prev[w] = v;
            queue.push_back(w);
        }
    }
    if (prev[goal] == -2)
        throw std::invalid_argument("no constraint path from (" + std::to_string(e.u) + "," +
                                    std::to_string(e.v) + ") to its reversal");

    std::vector<int> ids;
    for (int v = goal; v != -1; v = prev[v]) ids.push_back(v);
    std::reverse(ids.begin(), ids.end());

    std::vector<std::pair<int, int>> path;
    path.reserve(ids.size());
    for (int v : ids) path.push_back(d.pair_of(v));
    return path;
}

namespace {

void verify_no_certificate(const constraint_digraph& d, const no_certificate& cert) {
    const auto& p = cert.path;
    if (p.size() < 2) throw std::logic_error("contradiction path too short");
    if (p.front() != std::pair<int, int>{cert.edge.u, cert.edge.v} ||
        p.back() != std::pair<int, int>{cert.edge.v, cert.edge.u})
        throw std::logic_error("contradiction path endpoints do not match the edge");
    for (std::size_t i = 0; i + 1 < p.size(); ++i)
        if (!d.has_arc(d.vertex_id(p[i].first, p[i].second),
                       d.vertex_id(p[i + 1].first, p[i + 1].second)))
            throw std::logic_error("contradiction path uses a missing constraint arc");
}

} // namespace

certificate solve(const graph& g, forbidden_set f) {
    if (!f.is_simple())
        throw std::invalid_argument("solve requires a simple forbidden set (subsets of B1,B2,B3,T3)");

    constraint_digraph d(g, f);
    component_marking m = mark_components(d);

    if (m.self_dual) {
        // Lexicographically smallest edge whose two constraint vertices were
        // merged; its component is strongly connected, so the witness path
        // exists and extract_contradicting_path stays inside it.
        int bad = -1;
        for (int e = 0; e < g.edge_count(); ++e) {
            if (m.component_of[2 * e] == m.component_of[2 * e + 1]) {
                bad = e;
                break;
            }
        }
        if (bad < 0) throw std::logic_error("self-dual component without a merged edge pair");
        no_certificate cert{g.edge(bad), extract_contradicting_path(d, g.edge(bad))};
        verify_no_certificate(d, cert);
        return cert;
    }

    std::vector<std::uint8_t> flip(g.edge_count(), 0);
    for (int e = 0; e < g.edge_count(); ++e) {
        if (m.mark[m.component_of[2 * e]] == 1)
            continue; // keep min -> max
        if (m.mark[m.component_of[2 * e + 1]] != 1)
            throw std::logic_error("edge with neither direction marked true");
        flip[e] = 1;
    }
    orientation o(g, std::move(flip));
    if (has_violation(o, f))
        throw std::logic_error("marking produced an orientation with a forbidden pattern");
    return yes_certificate{std::move(o)};
}

} // namespace triorient
