#include "triorient/patterns.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace triorient {

namespace {

constexpr std::array<pattern, 6> all_patterns = {pattern::B1, pattern::B2, pattern::B3,
                                                 pattern::T3, pattern::C3, pattern::K1K2};

// One two-edge configuration x - y - z with center y and x < z.
// e_xz < 0 marks an induced path (xz not an edge), otherwise a triangle.
struct incident_pair {
    int x, y, z;
    int e_xy, e_zy, e_xz;
    std::uint8_t bit_xy; // flip value of e_xy meaning "arc x -> y"
    std::uint8_t bit_zy; // flip value of e_zy meaning "arc z -> y"
};

std::vector<incident_pair> incident_pairs(const graph& g) {
    std::vector<incident_pair> out;
    for (int y = 0; y < g.vertex_count(); ++y) {
        auto nb = g.neighbors(y);
        for (std::size_t i = 0; i < nb.size(); ++i) {
            for (std::size_t j = i + 1; j < nb.size(); ++j) {
                int x = nb[i], z = nb[j];
                incident_pair c;
                c.x = x;
                c.y = y;
                c.z = z;
                c.e_xy = *g.edge_index(x, y);
                c.e_zy = *g.edge_index(z, y);
                auto exz = g.edge_index(x, z);
                c.e_xz = exz ? *exz : -1;
                c.bit_xy = static_cast<std::uint8_t>(x < y ? 0 : 1);
                c.bit_zy = static_cast<std::uint8_t>(z < y ? 0 : 1);
                out.push_back(c);
            }
        }
    }
    return out;
}

// Classification of one configuration under a concrete orientation.
// For paths:      both arcs into y give B1, both out B2, otherwise B3.
// For triangles:  the two cyclic orientations give C3, the six others T3.
pattern classify(const incident_pair& c, const std::vector<std::uint8_t>& flip) {
    bool x_to_y = flip[static_cast<std::size_t>(c.e_xy)] == c.bit_xy;
    bool z_to_y = flip[static_cast<std::size_t>(c.e_zy)] == c.bit_zy;
    if (c.e_xz < 0) {
        if (x_to_y && z_to_y) return pattern::B1;
        if (!x_to_y && !z_to_y) return pattern::B2;
        return pattern::B3;
    }
    bool x_to_z = flip[static_cast<std::size_t>(c.e_xz)] == 0; // x < z by construction
    bool cyclic = (x_to_y && !z_to_y && !x_to_z) || (!x_to_y && z_to_y && x_to_z);
    return cyclic ? pattern::C3 : pattern::T3;
}

std::vector<std::uint8_t> flips_of(const orientation& o) {
    std::vector<std::uint8_t> flip(static_cast<std::size_t>(o.base().edge_count()));
    for (int e = 0; e < o.base().edge_count(); ++e) flip[static_cast<std::size_t>(e)] = o.flip(e);
    return flip;
}

// Triples {u, v, w} with uv an edge and w adjacent to neither endpoint.
// These induce K1K2 under every orientation of the graph.
void lone_arc_triples(const graph& g, std::vector<std::array<int, 3>>& out) {
    for (const Edge& e : g.edges()) {
        for (int w = 0; w < g.vertex_count(); ++w) {
            if (w == e.u || w == e.v) continue;
            if (g.adjacent(w, e.u) || g.adjacent(w, e.v)) continue;
            std::array<int, 3> t{e.u, e.v, w};
            std::sort(t.begin(), t.end());
            out.push_back(t);
        }
    }
}

} // namespace

std::string to_string(pattern p) {
    switch (p) {
    case pattern::B1: return "B1";
    case pattern::B2: return "B2";
    case pattern::B3: return "B3";
    case pattern::T3: return "T3";
    case pattern::C3: return "C3";
    case pattern::K1K2: return "K1K2";
    }
    return "?";
}

std::optional<pattern> pattern_from_string(const std::string& name) {
    for (pattern p : all_patterns)
        if (name == to_string(p)) return p;
    return std::nullopt;
}

forbidden_set forbidden_set::parse(const std::string& names) {
    forbidden_set out;
    std::size_t begin = 0;
    while (begin <= names.size()) {
        std::size_t end = names.find(',', begin);
        if (end == std::string::npos) end = names.size();
        std::string token = names.substr(begin, end - begin);
        while (!token.empty() && (token.front() == ' ' || token.front() == '\t')) token.erase(0, 1);
        while (!token.empty() && (token.back() == ' ' || token.back() == '\t')) token.pop_back();
        if (!token.empty()) {
            auto p = pattern_from_string(token);
            if (!p)
                throw std::invalid_argument("unknown pattern \"" + token +
                                            "\"; expected B1, B2, B3, T3, C3 or K1K2");
            out.insert(*p);
        }
        if (end == names.size()) break;
        begin = end + 1;
    }
    return out;
}

std::string forbidden_set::to_string() const {
    std::string out;
    for (pattern p : all_patterns) {
        if (!contains(p)) continue;
        if (!out.empty()) out += ',';
        out += triorient::to_string(p);
    }
    return out;
}

std::vector<forbidden_set> forbidden_set::all_simple_nonempty() {
    constexpr std::array<pattern, 4> simple = {pattern::B1, pattern::B2, pattern::B3, pattern::T3};
    std::vector<forbidden_set> out;
    for (int size = 1; size <= 4; ++size) {
        std::vector<int> idx(static_cast<std::size_t>(size));
        for (int i = 0; i < size; ++i) idx[static_cast<std::size_t>(i)] = i;
        while (true) {
            forbidden_set f;
            for (int i : idx) f.insert(simple[static_cast<std::size_t>(i)]);
            out.push_back(f);
            int i = size - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == 4 - size + i) --i;
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
            for (int j = i + 1; j < size; ++j)
                idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
        }
    }
    return out;
}

std::optional<pattern> induced_pattern(const orientation& o, std::array<int, 3> triple) {
    const graph& g = o.base();
    for (int v : triple)
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("triple vertex out of range: " + std::to_string(v));
    if (triple[0] == triple[1] || triple[0] == triple[2] || triple[1] == triple[2])
        throw std::invalid_argument("triple vertices must be distinct");

    int a = triple[0], b = triple[1], c = triple[2];
    bool ab = g.adjacent(a, b), bc = g.adjacent(b, c), ac = g.adjacent(a, c);
    int edges = int(ab) + int(bc) + int(ac);
    if (edges == 0) return std::nullopt;
    if (edges == 1) return pattern::K1K2;
    if (edges == 3) {
        bool cyc = (o.directed_as(a, b) && o.directed_as(b, c) && o.directed_as(c, a)) ||
                   (o.directed_as(b, a) && o.directed_as(c, b) && o.directed_as(a, c));
        return cyc ? pattern::C3 : pattern::T3;
    }
    // exactly two edges: find the center
    int center, x, z;
    if (!ab) { center = c; x = a; z = b; }
    else if (!bc) { center = a; x = b; z = c; }
    else { center = b; x = a; z = c; }
    bool in_x = o.directed_as(x, center);
    bool in_z = o.directed_as(z, center);
    if (in_x && in_z) return pattern::B1;
    if (!in_x && !in_z) return pattern::B2;
    return pattern::B3;
}

std::vector<violation> violations(const orientation& o, forbidden_set f) {
    const graph& g = o.base();
    std::vector<violation> out;
    if (f.empty() || g.vertex_count() < 3) return out;

    auto flip = flips_of(o);
    for (const incident_pair& c : incident_pairs(g)) {
        // every triangle appears once per center; keep only the smallest center
        if (c.e_xz >= 0 && c.y > c.x) continue;
        pattern p = classify(c, flip);
        if (!f.contains(p)) continue;
        std::array<int, 3> t{c.x, c.y, c.z};
        std::sort(t.begin(), t.end());
        out.push_back({t, p});
    }
    if (f.contains(pattern::K1K2)) {
        std::vector<std::array<int, 3>> lone;
        lone_arc_triples(g, lone);
        for (const auto& t : lone) out.push_back({t, pattern::K1K2});
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool has_violation(const orientation& o, forbidden_set f) {
    const graph& g = o.base();
    if (f.empty() || g.vertex_count() < 3) return false;
    auto flip = flips_of(o);
    for (const incident_pair& c : incident_pairs(g))
        if (f.contains(classify(c, flip))) return true;
    if (f.contains(pattern::K1K2)) {
        std::vector<std::array<int, 3>> lone;
        lone_arc_triples(g, lone);
        if (!lone.empty()) return true;
    }
    return false;
}

std::optional<orientation> brute_force_orientable(const graph& g, forbidden_set f,
                                                  int max_edges) {
    int m = g.edge_count();
    if (m > max_edges)
        throw std::invalid_argument("brute force limited to " + std::to_string(max_edges) +
                                    " edges, graph has " + std::to_string(m));

    if (f.contains(pattern::K1K2)) {
        std::vector<std::array<int, 3>> lone;
        lone_arc_triples(g, lone);
        if (!lone.empty()) return std::nullopt; // present under every orientation
    }

    auto pairs = incident_pairs(g);
    std::vector<std::uint8_t> flip(static_cast<std::size_t>(m), 0);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        for (int e = 0; e < m; ++e)
            flip[static_cast<std::size_t>(e)] = static_cast<std::uint8_t>((mask >> e) & 1u);
        bool ok = true;
        for (const incident_pair& c : pairs) {
            if (f.contains(classify(c, flip))) {
                ok = false;
                break;
            }
        }
        if (ok) return orientation(g, flip);
    }
    return std::nullopt;
}

} // namespace triorient
