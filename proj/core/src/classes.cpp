#include "triorient/classes.hpp"

#include <algorithm>
#include <deque>
#include <iomanip>
#include <sstream>

#include "triorient/solver.hpp"

namespace triorient {

namespace {

bool two_colorable(int n, const std::vector<std::vector<int>>& adj) {
    std::vector<int> color(n, -1);
    for (int s = 0; s < n; ++s) {
        if (color[s] != -1) continue;
        color[s] = 0;
        std::deque<int> queue{s};
        while (!queue.empty()) {
            int v = queue.front();
            queue.pop_front();
            for (int w : adj[v]) {
                if (color[w] == -1) {
                    color[w] = 1 - color[v];
                    queue.push_back(w);
                } else if (color[w] == color[v]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_bipartite(const graph& g) {
    std::vector<std::vector<int>> adj(g.vertex_count());
    for (const Edge& e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return two_colorable(g.vertex_count(), adj);
}

bool is_locally_bipartite(const graph& g) {
    for (int v = 0; v < g.vertex_count(); ++v) {
        auto nbrs = g.neighbors(v);
        int k = static_cast<int>(nbrs.size());
        std::vector<std::vector<int>> adj(k);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (g.adjacent(nbrs[i], nbrs[j])) {
                    adj[i].push_back(j);
                    adj[j].push_back(i);
                }
        if (!two_colorable(k, adj)) return false;
    }
    return true;
}

bool is_k4_free(const graph& g) {
    for (const Edge& e : g.edges()) {
        std::vector<int> common;
        std::set_intersection(g.neighbors(e.u).begin(), g.neighbors(e.u).end(),
                              g.neighbors(e.v).begin(), g.neighbors(e.v).end(),
                              std::back_inserter(common));
        for (std::size_t i = 0; i < common.size(); ++i)
            for (std::size_t j = i + 1; j < common.size(); ++j)
                if (g.adjacent(common[i], common[j])) return false;
    }
    return true;
}

bool is_complete_multipartite(const graph& g) {
    for (const Edge& e : g.edges())
        for (int w = 0; w < g.vertex_count(); ++w)
            if (w != e.u && w != e.v && !g.adjacent(w, e.u) && !g.adjacent(w, e.v)) return false;
    return true;
}

} // namespace

class_profile compute_class_profile(const graph& g) {
    class_profile p{};

    auto comps = connected_components(g);
    std::vector<int> comp_of(g.vertex_count(), -1);
    for (int c = 0; c < static_cast<int>(comps.size()); ++c)
        for (int v : comps[c]) comp_of[v] = c;
    std::vector<long long> comp_edges(comps.size(), 0);
    for (const Edge& e : g.edges()) ++comp_edges[comp_of[e.u]];

    p.unicyclic_per_component = true;
    p.complete_components = true;
    p.star_or_triangle_components = true;
    for (int c = 0; c < static_cast<int>(comps.size()); ++c) {
        long long nv = static_cast<long long>(comps[c].size()), ne = comp_edges[c];
        if (ne > nv) p.unicyclic_per_component = false;
        if (ne != nv * (nv - 1) / 2) p.complete_components = false;

        bool star = ne == nv - 1;
        if (star && nv > 2) {
            int hubs = 0;
            for (int v : comps[c]) hubs += (g.degree(v) >= 2);
            star = hubs <= 1;
        }
        bool triangle = nv == 3 && ne == 3;
        if (!star && !triangle) p.star_or_triangle_components = false;
    }

    p.triangle_free = count_triangles(g) == 0;
    p.bipartite = is_bipartite(g);
    p.max_degree_le_2 = g.max_degree() <= 2;
    p.k4_free = is_k4_free(g);
    p.locally_bipartite = is_locally_bipartite(g);
    p.complete_multipartite = is_complete_multipartite(g);
    return p;
}

namespace {

using P = pattern;

// A family name and, where one exists, the structural predicate to compare
// against the decision.
struct row_plan {
    forbidden_set set;
    const char* family;
    std::optional<bool> (*predicate)(const class_profile&);
};

std::optional<bool> no_predicate(const class_profile&) { return std::nullopt; }

std::vector<row_plan> constraint_rows() {
    return {
        {{P::B1}, "1-perfectly orientable", no_predicate},
        {{P::B2}, "1-perfectly orientable", no_predicate},
        {{P::B3}, "comparability", no_predicate},
        {{P::T3}, "odd-donut / even-Mobius-donut hom.-free", no_predicate},
        {{P::B1, P::B2}, "proper circular-arc", no_predicate},
        {{P::B1, P::B3}, "nested interval", no_predicate},
        {{P::B1, P::T3}, "unicyclic per component",
         [](const class_profile& c) { return std::optional(c.unicyclic_per_component); }},
        {{P::B2, P::B3}, "nested interval", no_predicate},
        {{P::B2, P::T3}, "unicyclic per component",
         [](const class_profile& c) { return std::optional(c.unicyclic_per_component); }},
        {{P::B3, P::T3}, "3-colourable comparability", no_predicate},
        {{P::B1, P::B2, P::B3}, "complete per component",
         [](const class_profile& c) { return std::optional(c.complete_components); }},
        {{P::B1, P::B2, P::T3}, "maximum degree <= 2",
         [](const class_profile& c) { return std::optional(c.max_degree_le_2); }},
        {{P::B1, P::B3, P::T3}, "stars and triangles",
         [](const class_profile& c) { return std::optional(c.star_or_triangle_components); }},
        {{P::B2, P::B3, P::T3}, "stars and triangles",
         [](const class_profile& c) { return std::optional(c.star_or_triangle_components); }},
        {{P::B1, P::B2, P::B3, P::T3}, "K1, K2 and K3 components",
         [](const class_profile& c) {
             return std::optional(c.star_or_triangle_components && c.complete_components);
         }},
    };
}

std::vector<row_plan> exhaustive_rows() {
    return {
        {{P::C3}, "all graphs", [](const class_profile&) { return std::optional(true); }},
        {{P::K1K2}, "complete multipartite",
         [](const class_profile& c) { return std::optional(c.complete_multipartite); }},
        {{P::B1, P::C3}, "transitive-perfectly orientable", no_predicate},
        {{P::B2, P::C3}, "transitive-perfectly orientable", no_predicate},
        {{P::B3, P::C3}, "comparability", no_predicate},
        {{P::T3, P::C3}, "triangle-free",
         [](const class_profile& c) { return std::optional(c.triangle_free); }},
        {{P::B1, P::B2, P::C3}, "proper Helly circular-arc", no_predicate},
        {{P::B1, P::T3, P::C3}, "triangle-free unicyclic",
         [](const class_profile& c) {
             return std::optional(c.triangle_free && c.unicyclic_per_component);
         }},
        {{P::B2, P::T3, P::C3}, "triangle-free unicyclic",
         [](const class_profile& c) {
             return std::optional(c.triangle_free && c.unicyclic_per_component);
         }},
        {{P::B3, P::T3, P::C3}, "bipartite",
         [](const class_profile& c) { return std::optional(c.bipartite); }},
        {{P::B1, P::B2, P::B3, P::C3}, "complete per component",
         [](const class_profile& c) { return std::optional(c.complete_components); }},
    };
}

atlas_row make_row(const row_plan& plan, atlas_method method, std::optional<bool> orientable,
                   const class_profile& profile) {
    atlas_row row;
    row.set = plan.set;
    row.method = method;
    row.orientable = orientable;
    row.family = plan.family;
    row.predicate = plan.predicate(profile);
    if (row.orientable && row.predicate) row.agree = (*row.orientable == *row.predicate);
    return row;
}

} // namespace

atlas_report atlas(const graph& g, int oracle_cap) {
    atlas_report report;
    report.profile = compute_class_profile(g);

    for (const row_plan& plan : constraint_rows()) {
        bool yes = is_yes(solve(g, plan.set));
        report.rows.push_back(make_row(plan, atlas_method::constraint, yes, report.profile));
    }
    for (const row_plan& plan : exhaustive_rows()) {
        std::optional<bool> yes;
        if (g.edge_count() <= oracle_cap)
            yes = brute_force_orientable(g, plan.set, oracle_cap).has_value();
        report.rows.push_back(make_row(plan, atlas_method::exhaustive, yes, report.profile));
    }
    return report;
}

std::string format_atlas(const atlas_report& r) {
    auto tri = [](std::optional<bool> v, const char* yes, const char* no) {
        return v ? (*v ? yes : no) : "-";
    };

    std::ostringstream out;
    const class_profile& p = r.profile;
    out << "profile: unicyclic_per_component=" << (p.unicyclic_per_component ? "yes" : "no")
        << " triangle_free=" << (p.triangle_free ? "yes" : "no")
        << " bipartite=" << (p.bipartite ? "yes" : "no")
        << " max_degree_le_2=" << (p.max_degree_le_2 ? "yes" : "no")
        << " star_or_triangle=" << (p.star_or_triangle_components ? "yes" : "no") << "\n"
        << "         k4_free=" << (p.k4_free ? "yes" : "no")
        << " locally_bipartite=" << (p.locally_bipartite ? "yes" : "no")
        << " complete_components=" << (p.complete_components ? "yes" : "no")
        << " complete_multipartite=" << (p.complete_multipartite ? "yes" : "no") << "\n\n";

    out << std::left << std::setw(16) << "forbidden" << std::setw(12) << "method" << std::setw(12)
        << "orientable" << std::setw(42) << "family" << std::setw(11) << "predicate"
        << "agree\n";
    out << std::string(16 + 12 + 12 + 42 + 11 + 5, '-') << "\n";
    for (const atlas_row& row : r.rows) {
        out << std::left << std::setw(16) << row.set.to_string() << std::setw(12)
            << (row.method == atlas_method::constraint ? "constraint" : "exhaustive")
            << std::setw(12) << tri(row.orientable, "yes", "no") << std::setw(42) << row.family
            << std::setw(11) << tri(row.predicate, "yes", "no") << tri(row.agree, "ok", "MISMATCH")
            << "\n";
    }
    return out.str();
}

} // namespace triorient
