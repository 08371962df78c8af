#include "triorient/obstruction.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>

#include "triorient/solver.hpp"

namespace triorient {

const char* to_string(obstruction_kind k) {
    return k == obstruction_kind::odd_donut ? "odd_donut" : "even_mobius_donut";
}

void colors_and_predecessors(walk_labels& labels) {
    int n = labels.n;
    labels.c.assign(n + 1, -1);
    labels.c[0] = 0;
    labels.c[1] = 1;
    for (int i = 2; i <= n; ++i) labels.c[i] = (labels.c[labels.k[i]] + 1) % 2;

    labels.p0.assign(n + 1, -1);
    labels.p1.assign(n + 1, -1);
    for (int i = 2; i <= n; ++i) {
        for (int j = i - 1; j >= 0; --j) {
            if (labels.c[j] == 0) {
                labels.p0[i] = j;
                break;
            }
        }
        for (int j = i - 1; j >= 0; --j) {
            if (labels.c[j] == 1) {
                labels.p1[i] = j;
                break;
            }
        }
        if (labels.p0[i] < 0 || labels.p1[i] < 0)
            throw std::logic_error("walk vertex " + std::to_string(i) + " lacks a predecessor color");
    }
}

walk_labels compute_walk_labels(const std::vector<std::pair<int, int>>& path, const graph& g) {
    int n = static_cast<int>(path.size());
    if (n < 3) throw std::invalid_argument("contradicting path needs at least 3 arcs");

    walk_labels labels;
    labels.n = n;
    labels.tails.assign(n + 1, -1);
    labels.heads.assign(n + 1, -1);
    for (int i = 1; i <= n; ++i) {
        auto [t, h] = path[i - 1];
        if (!g.adjacent(t, h))
            throw std::invalid_argument("path entry " + std::to_string(i - 1) +
                                        " is not an oriented edge of the graph");
        labels.tails[i] = t;
        labels.heads[i] = h;
    }
    if (labels.tails[1] != labels.heads[n] || labels.heads[1] != labels.tails[n])
        throw std::invalid_argument("path endpoints are not reversals of one another");

    for (int i = 1; i < n; ++i) {
        int t = labels.tails[i], h = labels.heads[i];
        int tn = labels.tails[i + 1], hn = labels.heads[i + 1];
        bool tail_to_head = (t == hn), head_to_tail = (h == tn);
        if (tail_to_head == head_to_tail)
            throw std::invalid_argument("path step " + std::to_string(i - 1) +
                                        " is not a constraint arc");
        int shared = tail_to_head ? t : h;
        int other_old = tail_to_head ? h : t;
        int other_new = tail_to_head ? tn : hn;
        if (other_old == other_new || other_old == shared || other_new == shared ||
            !g.adjacent(other_old, other_new))
            throw std::invalid_argument("path step " + std::to_string(i - 1) +
                                        " does not span a triangle");
    }

    labels.fplus.assign(n + 1, -1);
    labels.fminus.assign(n + 1, -1);
    // a_1: fplus is the endpoint shared with a_2.
    {
        int t = labels.tails[1], h = labels.heads[1];
        bool t_shared = (t == labels.tails[2] || t == labels.heads[2]);
        labels.fplus[1] = t_shared ? t : h;
        labels.fminus[1] = t_shared ? h : t;
    }
    for (int i = 2; i <= n; ++i) {
        // fminus is the endpoint shared with a_{i-1}, fplus the new vertex.
        if (labels.tails[i] == labels.heads[i - 1]) {
            labels.fminus[i] = labels.tails[i];
            labels.fplus[i] = labels.heads[i];
        } else {
            labels.fminus[i] = labels.heads[i];
            labels.fplus[i] = labels.tails[i];
        }
    }

    labels.k.assign(n + 1, -1);
    for (int i = 2; i <= n; ++i) {
        for (int j = i - 1; j >= 1; --j) {
            if (labels.fplus[j] == labels.fminus[i]) {
                labels.k[i] = j;
                break;
            }
        }
        if (labels.k[i] < 0)
            throw std::logic_error("no earlier arc reaches the shared endpoint of arc " +
                                   std::to_string(i));
    }

    colors_and_predecessors(labels);
    return labels;
}

bool verify_homomorphism(const std::vector<int>& map, const graph& from, const graph& to) {
    if (static_cast<int>(map.size()) != from.vertex_count())
        throw std::invalid_argument("vertex map size does not match the source graph");
    for (int v : map)
        if (v < 0 || v >= to.vertex_count())
            throw std::invalid_argument("vertex map value out of range");
    for (const Edge& e : from.edges())
        if (map[e.u] == map[e.v] || !to.adjacent(map[e.u], map[e.v])) return false;
    return true;
}

obstruction build_obstruction(const walk_labels& labels, const graph& g) {
    int n = labels.n;
    if (n < 3) throw std::invalid_argument("walk labels describe fewer than 3 arcs");

    // D on {0..n}: edge 01 plus, for each i >= 2, edges to both predecessors.
    std::vector<Edge> dedges;
    dedges.push_back({0, 1});
    for (int i = 2; i <= n; ++i) {
        dedges.push_back({labels.p0[i], i});
        dedges.push_back({labels.p1[i], i});
    }
    graph tjoin(n + 1, dedges);

    std::vector<int> phi(n + 1);
    phi[0] = labels.fminus[1];
    for (int i = 1; i <= n; ++i) phi[i] = labels.fplus[i];
    if (!verify_homomorphism(phi, tjoin, g))
        throw std::logic_error("walk map is not a homomorphism of the t-join");

    // Identify n with 0 and k(n) with 1 when phi agrees that way, else crosswise.
    int kn = labels.k[n];
    int target;
    if (phi[n] == phi[0] && phi[kn] == phi[1])
        target = 0;
    else if (phi[n] == phi[1] && phi[kn] == phi[0])
        target = 1;
    else
        throw std::logic_error("identified pairs disagree with the walk map");

    obstruction result;
    result.identify = {{{n, target}, {kn, 1 - target}}};
    result.phi = phi;

    // n closes the color-target path straight (donut) or crosswise (Mobius).
    result.kind = (labels.c[n] == target) ? obstruction_kind::odd_donut
                                          : obstruction_kind::even_mobius_donut;
    long long triangles = count_triangles(tjoin);
    if (triangles != n - 1)
        throw std::logic_error("t-join triangle count " + std::to_string(triangles) +
                               " != " + std::to_string(n - 1));
    bool odd = (triangles % 2) == 1;
    if (odd != (result.kind == obstruction_kind::odd_donut))
        throw std::logic_error("identification branch contradicts t-join triangle parity");

    // Quotient, relabeling both merged vertices to the smaller index.
    std::vector<int> rep(n + 1);
    for (int v = 0; v <= n; ++v) rep[v] = v;
    rep[n] = target;
    rep[kn] = 1 - target; // identity when k(n) == 1 - target (the wheel case)

    std::vector<int> compact(n + 1, -1);
    int next = 0;
    for (int v = 0; v <= n; ++v)
        if (rep[v] == v) compact[v] = next++;

    std::set<Edge> qedges;
    for (const Edge& e : tjoin.edges()) {
        int a = compact[rep[e.u]], b = compact[rep[e.v]];
        if (a == b)
            throw std::logic_error("identification creates a loop at t-join vertex " +
                                   std::to_string(e.u));
        qedges.insert({std::min(a, b), std::max(a, b)});
    }
    result.host = graph(next, std::vector<Edge>(qedges.begin(), qedges.end()));

    result.host_map.assign(next, -1);
    for (int v = 0; v <= n; ++v)
        if (rep[v] == v) result.host_map[compact[v]] = phi[v];
    if (!verify_homomorphism(result.host_map, result.host, g))
        throw std::logic_error("quotient map is not a homomorphism");

    result.tjoin = std::move(tjoin);
    return result;
}

std::variant<orientation, obstruction> extract_t3_obstruction(const graph& g) {
    certificate cert = solve(g, forbidden_set{pattern::T3});
    if (auto* yes = std::get_if<yes_certificate>(&cert)) return std::move(yes->oriented);
    const auto& no = std::get<no_certificate>(cert);
    walk_labels labels = compute_walk_labels(no.path, g);
    return build_obstruction(labels, g);
}

} // namespace triorient
