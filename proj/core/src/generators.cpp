#include "swapnet/generators.hpp"

#include <queue>
#include <vector>

#include "swapnet/errors.hpp"

namespace swapnet {

namespace {

void require(bool ok, const char* msg) {
    if (!ok) throw BadSpec(msg);
}

Graph make_path(int n) {
    Graph g(n);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph make_cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
    return g;
}

Graph make_star(int n) {
    Graph g(n);
    for (int leaf = 1; leaf < n; ++leaf) g.add_edge(0, leaf);
    return g;
}

Graph make_complete(int n) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    return g;
}

Graph make_gnp(int n, double p, Rng& rng) {
    Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.uniform01() < p) g.add_edge(u, v);
    return g;
}

// Uniform labeled tree by decoding a random Pruefer sequence.
Graph make_random_tree(int n, Rng& rng) {
    Graph g(n);
    if (n <= 1) return g;
    if (n == 2) {
        g.add_edge(0, 1);
        return g;
    }
    std::vector<int> seq(static_cast<std::size_t>(n - 2));
    for (int& s : seq) s = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));

    std::vector<int> degree(static_cast<std::size_t>(n), 1);
    for (int s : seq) ++degree[s];
    std::priority_queue<int, std::vector<int>, std::greater<int>> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[v] == 1) leaves.push(v);
    for (int s : seq) {
        const int leaf = leaves.top();
        leaves.pop();
        g.add_edge(leaf, s);
        if (--degree[s] == 1) leaves.push(s);
    }
    const int a = leaves.top();
    leaves.pop();
    const int b = leaves.top();
    g.add_edge(a, b);
    return g;
}

// Two cliques joined by a path of bridge_length edges; every edge on that
// path is a bridge, which is what the first-edge-redundancy checker's
// negative cases need.
Graph make_barbell(int n1, int n2, int bridge_length) {
    const int n = n1 + n2 + bridge_length - 1;
    Graph g(n);
    for (int u = 0; u < n1; ++u)
        for (int v = u + 1; v < n1; ++v) g.add_edge(u, v);
    const int right = n1 + bridge_length - 1;  // first vertex of the second clique
    for (int u = right; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.add_edge(u, v);
    for (int i = n1 - 1; i < right; ++i) g.add_edge(i, i + 1);
    return g;
}

}  // namespace

Graph generate(const GeneratorSpec& spec) {
    Rng rng(spec.seed);
    switch (spec.family) {
        case GraphFamily::Gnp:
            require(spec.n >= 1, "gnp: n must be >= 1");
            require(spec.p >= 0.0 && spec.p <= 1.0, "gnp: p must be in [0, 1]");
            return make_gnp(spec.n, spec.p, rng);
        case GraphFamily::RandomTree:
            require(spec.n >= 1, "random-tree: n must be >= 1");
            return make_random_tree(spec.n, rng);
        case GraphFamily::Path:
            require(spec.n >= 1, "path: n must be >= 1");
            return make_path(spec.n);
        case GraphFamily::Cycle:
            require(spec.n >= 3, "cycle: n must be >= 3");
            return make_cycle(spec.n);
        case GraphFamily::Star:
            require(spec.n >= 1, "star: n must be >= 1");
            return make_star(spec.n);
        case GraphFamily::Complete:
            require(spec.n >= 1, "complete: n must be >= 1");
            return make_complete(spec.n);
        case GraphFamily::Barbell:
            require(spec.n1 >= 1 && spec.n2 >= 1, "barbell: clique sizes must be >= 1");
            require(spec.bridge_length >= 1, "barbell: bridge length must be >= 1");
            return make_barbell(spec.n1, spec.n2, spec.bridge_length);
    }
    throw BadSpec("generate: unknown family");
}

Graph random_connected_graph(int n, double extra_p, Rng& rng) {
    if (n < 1) throw BadSpec("random_connected_graph: n must be >= 1");
    if (extra_p < 0.0 || extra_p > 1.0)
        throw BadSpec("random_connected_graph: extra_p must be in [0, 1]");
    Graph g = make_random_tree(n, rng);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.has_edge(u, v) && rng.uniform01() < extra_p) g.add_edge(u, v);
    return g;
}

GraphFamily family_from_string(const std::string& name) {
    if (name == "gnp") return GraphFamily::Gnp;
    if (name == "random-tree") return GraphFamily::RandomTree;
    if (name == "path") return GraphFamily::Path;
    if (name == "cycle") return GraphFamily::Cycle;
    if (name == "star") return GraphFamily::Star;
    if (name == "complete") return GraphFamily::Complete;
    if (name == "barbell") return GraphFamily::Barbell;
    throw BadSpec("unknown graph family: " + name);
}

std::string family_name(GraphFamily family) {
    switch (family) {
        case GraphFamily::Gnp: return "gnp";
        case GraphFamily::RandomTree: return "random-tree";
        case GraphFamily::Path: return "path";
        case GraphFamily::Cycle: return "cycle";
        case GraphFamily::Star: return "star";
        case GraphFamily::Complete: return "complete";
        case GraphFamily::Barbell: return "barbell";
    }
    return "unknown";
}

}  // namespace swapnet
