#include "triorient/json_io.hpp"

#include <json.hpp>

namespace triorient {

namespace {

using json = nlohmann::ordered_json;

json edge_array(std::span<const Edge> edges) {
    json arr = json::array();
    for (const Edge& e : edges) arr.push_back({e.u, e.v});
    return arr;
}

} // namespace

std::string certificate_to_json(const certificate& c) {
    json doc;
    if (const auto* yes = std::get_if<yes_certificate>(&c)) {
        doc["answer"] = "yes";
        json arcs = json::array();
        const orientation& o = yes->oriented;
        for (int e = 0; e < o.base().edge_count(); ++e) {
            auto [from, to] = o.arc(e);
            arcs.push_back({from, to});
        }
        doc["orientation"] = arcs;
    } else {
        const auto& no = std::get<no_certificate>(c);
        doc["answer"] = "no";
        doc["edge"] = {no.edge.u, no.edge.v};
        json path = json::array();
        for (auto [from, to] : no.path) path.push_back({from, to});
        doc["path"] = path;
    }
    return doc.dump();
}

std::string obstruction_to_json(const obstruction& o) {
    json doc;
    doc["kind"] = to_string(o.kind);
    doc["tjoin"] = {{"n", o.tjoin.vertex_count()}, {"edges", edge_array(o.tjoin.edges())}};
    doc["identify"] = {{o.identify[0][0], o.identify[0][1]}, {o.identify[1][0], o.identify[1][1]}};
    doc["phi"] = o.phi;
    return doc.dump();
}

std::string atlas_to_json(const atlas_report& r) {
    json doc;
    const class_profile& p = r.profile;
    doc["profile"] = {{"unicyclic_per_component", p.unicyclic_per_component},
                      {"triangle_free", p.triangle_free},
                      {"bipartite", p.bipartite},
                      {"max_degree_le_2", p.max_degree_le_2},
                      {"star_or_triangle_components", p.star_or_triangle_components},
                      {"k4_free", p.k4_free},
                      {"locally_bipartite", p.locally_bipartite},
                      {"complete_components", p.complete_components},
                      {"complete_multipartite", p.complete_multipartite}};
    json rows = json::array();
    for (const atlas_row& row : r.rows) {
        json j;
        j["forbidden"] = row.set.to_string();
        j["method"] = row.method == atlas_method::constraint ? "constraint" : "exhaustive";
        j["orientable"] = row.orientable ? json(*row.orientable) : json(nullptr);
        j["family"] = row.family;
        j["predicate"] = row.predicate ? json(*row.predicate) : json(nullptr);
        j["agree"] = row.agree ? json(*row.agree) : json(nullptr);
        rows.push_back(std::move(j));
    }
    doc["rows"] = rows;
    return doc.dump();
}

} // namespace triorient
