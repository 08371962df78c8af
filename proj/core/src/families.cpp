#include "triorient/families.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

namespace triorient {

void tjoin_spec::validate() const {
    if (p < 1 || q < 1 || p + q < 4)
        throw std::invalid_argument("t-join needs p,q >= 1 and p+q >= 4");
    if (static_cast<int>(merge.size()) != p + q - 2)
        throw std::invalid_argument("merge sequence must have length p+q-2");
    int zeros = 0;
    for (char b : merge) {
        if (b != '0' && b != '1') throw std::invalid_argument("merge sequence must be over {0,1}");
        zeros += (b == '0');
    }
    if (zeros != p - 1)
        throw std::invalid_argument("merge sequence needs exactly p-1 zeros and q-1 ones");
}

graph gen_tjoin(const tjoin_spec& spec) {
    spec.validate();
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < spec.p; ++i) edges.push_back({i, i + 1});
    for (int i = 0; i + 1 < spec.q; ++i) edges.push_back({spec.p + i, spec.p + i + 1});
    int fp = 0, fq = spec.p; // frontier vertices on P and Q
    edges.push_back({fp, fq});
    for (char b : spec.merge) {
        if (b == '0')
            ++fp;
        else
            ++fq;
        edges.push_back({std::min(fp, fq), std::max(fp, fq)});
    }
    return graph(spec.p + spec.q, std::move(edges));
}

graph gen_donut(const donut_spec& spec) {
    graph t = gen_tjoin(spec.tjoin);
    int p = spec.tjoin.p, q = spec.tjoin.q;
    int x1 = 0, xp = p - 1, y1 = p, yq = p + q - 1;

    // Union of the two identified pairs; classes relabel to their minimum.
    std::vector<int> rep(t.vertex_count());
    std::iota(rep.begin(), rep.end(), 0);
    auto find = [&](int v) {
        while (rep[v] != v) v = rep[v] = rep[rep[v]];
        return v;
    };
    auto unite = [&](int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) rep[std::max(a, b)] = std::min(a, b);
    };
    if (spec.mobius) {
        unite(x1, yq);
        unite(y1, xp);
    } else {
        unite(x1, xp);
        unite(y1, yq);
    }

    std::vector<int> compact(t.vertex_count(), -1);
    int next = 0;
    for (int v = 0; v < t.vertex_count(); ++v)
        if (find(v) == v) compact[v] = next++;

    std::set<Edge> edges;
    for (const Edge& e : t.edges()) {
        int a = compact[find(e.u)], b = compact[find(e.v)];
        if (a == b)
            throw std::invalid_argument("degenerate donut spec: identification creates a loop");
        edges.insert({std::min(a, b), std::max(a, b)});
    }
    return graph(next, std::vector<Edge>(edges.begin(), edges.end()));
}

graph gen_path(int n) {
    if (n < 1) throw std::invalid_argument("path needs at least 1 vertex");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    return graph(n, std::move(edges));
}

graph gen_cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, n - 1});
    return graph(n, std::move(edges));
}

graph gen_star(int leaves) {
    if (leaves < 0) throw std::invalid_argument("star needs a nonnegative leaf count");
    std::vector<Edge> edges;
    for (int i = 1; i <= leaves; ++i) edges.push_back({0, i});
    return graph(leaves + 1, std::move(edges));
}

graph gen_complete(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs at least 1 vertex");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return graph(n, std::move(edges));
}

graph gen_complete_multipartite(const std::vector<int>& part_sizes) {
    if (part_sizes.empty()) throw std::invalid_argument("need at least one part");
    for (int s : part_sizes)
        if (s < 1) throw std::invalid_argument("part sizes must be positive");
    std::vector<int> part_of;
    for (int i = 0; i < static_cast<int>(part_sizes.size()); ++i)
        part_of.insert(part_of.end(), part_sizes[i], i);
    int n = static_cast<int>(part_of.size());
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (part_of[u] != part_of[v]) edges.push_back({u, v});
    return graph(n, std::move(edges));
}

graph gen_wheel(int k) {
    if (k < 3) throw std::invalid_argument("wheel needs a rim of at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < k; ++i) edges.push_back({i, i + 1});
    edges.push_back({0, k - 1});
    for (int i = 0; i < k; ++i) edges.push_back({i, k});
    return graph(k + 1, std::move(edges));
}

graph gen_hajos() {
    return graph(6, {{0, 1}, {1, 2}, {0, 2}, {0, 3}, {1, 3}, {1, 4}, {2, 4}, {0, 5}, {2, 5}});
}

graph mycielskian(const graph& g) {
    int n = g.vertex_count();
    std::vector<Edge> edges(g.edges().begin(), g.edges().end());
    for (const Edge& e : g.edges()) {
        edges.push_back({e.u, e.v + n});
        edges.push_back({e.v, e.u + n});
    }
    for (int v = 0; v < n; ++v) edges.push_back({v + n, 2 * n});
    return graph(2 * n + 1, std::move(edges));
}

graph gen_grotzsch() { return mycielskian(gen_cycle(5)); }

graph gen_standard(const std::string& name, const std::vector<int>& args) {
    auto one = [&](const char* what) {
        if (args.size() != 1)
            throw std::invalid_argument(std::string(what) + " takes exactly one size argument");
        return args[0];
    };
    auto none = [&](const char* what) {
        if (!args.empty()) throw std::invalid_argument(std::string(what) + " takes no arguments");
    };
    if (name == "path") return gen_path(one("path"));
    if (name == "cycle") return gen_cycle(one("cycle"));
    if (name == "star") return gen_star(one("star"));
    if (name == "complete") return gen_complete(one("complete"));
    if (name == "complete_multipartite") return gen_complete_multipartite(args);
    if (name == "wheel") return gen_wheel(one("wheel"));
    if (name == "hajos") {
        none("hajos");
        return gen_hajos();
    }
    if (name == "grotzsch") {
        none("grotzsch");
        return gen_grotzsch();
    }
    throw std::invalid_argument("unknown graph family: " + name);
}

} // namespace triorient
