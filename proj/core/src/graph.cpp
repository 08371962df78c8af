#include "triorient/graph.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <stdexcept>

namespace triorient {

namespace {

std::string pos(int line) { return "line " + std::to_string(line) + ": "; }

bool blank_or_comment(const std::string& line) {
    for (char ch : line) {
        if (ch == '#') return true;
        if (ch != ' ' && ch != '\t' && ch != '\r') return false;
    }
    return true;
}

// Parses exactly two ints separated by whitespace; nullopt on anything else.
std::optional<std::pair<int, int>> parse_int_pair(const std::string& line) {
    std::istringstream in(line);
    long long a, b;
    if (!(in >> a >> b)) return std::nullopt;
    std::string rest;
    if (in >> rest) return std::nullopt;
    if (a < INT32_MIN || a > INT32_MAX || b < INT32_MIN || b > INT32_MAX) return std::nullopt;
    return std::pair<int, int>{static_cast<int>(a), static_cast<int>(b)};
}

} // namespace

graph::graph(int n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    if (n_ < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (Edge& e : edges_) {
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u == e.v)
            throw std::invalid_argument("loop edge " + std::to_string(e.u));
        if (e.u < 0 || e.v >= n_)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) +
                                        " " + std::to_string(e.v));
    }
    std::sort(edges_.begin(), edges_.end());
    if (std::adjacent_find(edges_.begin(), edges_.end()) != edges_.end())
        throw std::invalid_argument("duplicate edge");
    adj_.assign(static_cast<std::size_t>(n_), {});
    for (const Edge& e : edges_) {
        adj_[static_cast<std::size_t>(e.u)].push_back(e.v);
        adj_[static_cast<std::size_t>(e.v)].push_back(e.u);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());
}

int graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

bool graph::adjacent(int u, int v) const {
    if (u < 0 || u >= n_ || v < 0 || v >= n_ || u == v) return false;
    const auto& list = adj_[static_cast<std::size_t>(u)];
    return std::binary_search(list.begin(), list.end(), v);
}

std::optional<int> graph::edge_index(int u, int v) const {
    if (u > v) std::swap(u, v);
    Edge probe{u, v};
    auto it = std::lower_bound(edges_.begin(), edges_.end(), probe);
    if (it == edges_.end() || *it != probe) return std::nullopt;
    return static_cast<int>(it - edges_.begin());
}

orientation::orientation(graph base, std::vector<std::uint8_t> flip)
    : base_(std::move(base)), flip_(std::move(flip)) {
    if (flip_.size() != static_cast<std::size_t>(base_.edge_count()))
        throw std::invalid_argument("orientation size does not match edge count");
    for (std::uint8_t f : flip_)
        if (f > 1) throw std::invalid_argument("orientation flags must be 0 or 1");
}

std::pair<int, int> orientation::arc(int e) const {
    const Edge& ed = base_.edge(e);
    return flip_[static_cast<std::size_t>(e)] ? std::pair{ed.v, ed.u} : std::pair{ed.u, ed.v};
}

bool orientation::directed_as(int from, int to) const {
    auto e = base_.edge_index(from, to);
    if (!e) throw std::invalid_argument("not an edge: " + std::to_string(from) + " " +
                                        std::to_string(to));
    auto [f, t] = arc(*e);
    return f == from && t == to;
}

graph parse_graph(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1, m = -1;

    while (std::getline(in, line)) {
        ++line_no;
        if (blank_or_comment(line)) continue;
        auto header = parse_int_pair(line);
        if (!header) throw std::runtime_error(pos(line_no) + "malformed header, expected \"n m\"");
        n = header->first;
        m = header->second;
        if (n < 0 || m < 0) throw std::runtime_error(pos(line_no) + "negative count in header");
        break;
    }
    if (n < 0) throw std::runtime_error("empty input, expected \"n m\" header");

    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    while (std::getline(in, line)) {
        ++line_no;
        if (blank_or_comment(line)) continue;
        if (static_cast<int>(edges.size()) == m)
            throw std::runtime_error(pos(line_no) + "more than " + std::to_string(m) + " edges");
        auto pair = parse_int_pair(line);
        if (!pair) throw std::runtime_error(pos(line_no) + "malformed edge line");
        auto [u, v] = *pair;
        if (u == v) throw std::runtime_error(pos(line_no) + "loop edge " + std::to_string(u));
        if (u < 0 || v >= n || v < 0 || u >= n)
            throw std::runtime_error(pos(line_no) + "vertex out of range [0, " + std::to_string(n) +
                                     ")");
        if (u > v) throw std::runtime_error(pos(line_no) + "edge endpoints must satisfy u < v");
        Edge e{u, v};
        edges.push_back(e);
    }
    if (static_cast<int>(edges.size()) != m)
        throw std::runtime_error("expected " + std::to_string(m) + " edges, found " +
                                 std::to_string(edges.size()));

    std::vector<Edge> sorted = edges;
    std::sort(sorted.begin(), sorted.end());
    auto dup = std::adjacent_find(sorted.begin(), sorted.end());
    if (dup != sorted.end()) {
        // recover the line number of the second occurrence for the report
        int seen = 0;
        std::istringstream again(text);
        int ln = 0;
        while (std::getline(again, line)) {
            ++ln;
            if (blank_or_comment(line)) continue;
            auto pair = parse_int_pair(line);
            if (pair && pair->first == dup->u && pair->second == dup->v && ++seen == 2)
                throw std::runtime_error(pos(ln) + "duplicate edge " + std::to_string(dup->u) +
                                         " " + std::to_string(dup->v));
        }
        throw std::runtime_error("duplicate edge");
    }
    return graph(n, std::move(edges));
}

std::string write_graph(const graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
    return out.str();
}

orientation parse_orientation(const std::string& text, const graph& base) {
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    int n = -1, m = -1;

    while (std::getline(in, line)) {
        ++line_no;
        if (blank_or_comment(line)) continue;
        auto header = parse_int_pair(line);
        if (!header) throw std::runtime_error(pos(line_no) + "malformed header, expected \"n m\"");
        n = header->first;
        m = header->second;
        break;
    }
    if (n < 0) throw std::runtime_error("empty input, expected \"n m\" header");
    if (n != base.vertex_count() || m != base.edge_count())
        throw std::runtime_error(pos(line_no) + "header does not match base graph (" +
                                 std::to_string(base.vertex_count()) + " " +
                                 std::to_string(base.edge_count()) + ")");

    std::vector<std::uint8_t> flip(static_cast<std::size_t>(base.edge_count()), 0);
    std::vector<bool> seen(static_cast<std::size_t>(base.edge_count()), false);
    int arcs = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (blank_or_comment(line)) continue;
        if (arcs == m)
            throw std::runtime_error(pos(line_no) + "more than " + std::to_string(m) + " arcs");
        auto pair = parse_int_pair(line);
        if (!pair) throw std::runtime_error(pos(line_no) + "malformed arc line");
        auto [from, to] = *pair;
        if (from == to) throw std::runtime_error(pos(line_no) + "loop arc " + std::to_string(from));
        auto e = base.edge_index(from, to);
        if (!e)
            throw std::runtime_error(pos(line_no) + "not an edge of the base graph: " +
                                     std::to_string(from) + " " + std::to_string(to));
        if (seen[static_cast<std::size_t>(*e)])
            throw std::runtime_error(pos(line_no) + "edge oriented twice: " + std::to_string(from) +
                                     " " + std::to_string(to));
        seen[static_cast<std::size_t>(*e)] = true;
        flip[static_cast<std::size_t>(*e)] = static_cast<std::uint8_t>(from > to);
        ++arcs;
    }
    if (arcs != m)
        throw std::runtime_error("expected " + std::to_string(m) + " arcs, found " +
                                 std::to_string(arcs));
    return orientation(base, std::move(flip));
}

std::string write_orientation(const orientation& o) {
    std::ostringstream out;
    out << o.base().vertex_count() << ' ' << o.base().edge_count() << '\n';
    for (int e = 0; e < o.base().edge_count(); ++e) {
        auto [from, to] = o.arc(e);
        out << from << ' ' << to << '\n';
    }
    return out.str();
}

std::vector<std::vector<int>> connected_components(const graph& g) {
    int n = g.vertex_count();
    std::vector<int> comp(static_cast<std::size_t>(n), -1);
    std::vector<std::vector<int>> out;
    std::vector<int> queue;
    for (int s = 0; s < n; ++s) {
        if (comp[static_cast<std::size_t>(s)] >= 0) continue;
        int id = static_cast<int>(out.size());
        out.push_back({});
        comp[static_cast<std::size_t>(s)] = id;
        queue.assign(1, s);
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            out[static_cast<std::size_t>(id)].push_back(v);
            for (int w : g.neighbors(v)) {
                if (comp[static_cast<std::size_t>(w)] < 0) {
                    comp[static_cast<std::size_t>(w)] = id;
                    queue.push_back(w);
                }
            }
        }
        std::sort(out[static_cast<std::size_t>(id)].begin(), out[static_cast<std::size_t>(id)].end());
    }
    return out;
}

long long count_triangles(const graph& g) {
    // Each triangle is counted once per edge, so three times in total.
    long long total = 0;
    for (const Edge& e : g.edges()) {
        auto a = g.neighbors(e.u);
        auto b = g.neighbors(e.v);
        std::size_t i = 0, j = 0;
        while (i < a.size() && j < b.size()) {
            if (a[i] < b[j])
                ++i;
            else if (a[i] > b[j])
                ++j;
            else {
                ++total;
                ++i;
                ++j;
            }
        }
    }
    return total / 3;
}

} // namespace triorient
