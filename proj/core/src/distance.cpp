#include "swapnet/distance.hpp"

#include <algorithm>
#include <stdexcept>

namespace swapnet {

void bfs_distances_into(const Graph& g, int source, std::vector<int>& dist) {
    const int n = g.vertex_count();
    if (source < 0 || source >= n) throw std::out_of_range("bfs_distances: bad source");
    dist.assign(static_cast<std::size_t>(n), DistanceMatrix::kUnreachable);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    dist[source] = 0;
    order.push_back(source);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const int u = order[head];
        const int du = dist[u];
        for (int w : g.neighbors(u)) {
            if (dist[w] == DistanceMatrix::kUnreachable) {
                dist[w] = du + 1;
                order.push_back(w);
            }
        }
    }
}

std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist;
    bfs_distances_into(g, source, dist);
    return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    const int n = g.vertex_count();
    DistanceMatrix m(n);
    std::vector<int> row;
    for (int s = 0; s < n; ++s) {
        bfs_distances_into(g, s, row);
        for (int v = 0; v < n; ++v) m.at(s, v) = row[v];
    }
    return m;
}

ExtInt sum_of_distances(const Graph& g, int v) {
    const int n = g.vertex_count();
    std::vector<int> dist;
    bfs_distances_into(g, v, dist);
    std::int64_t total = 0;
    int reached = 0;
    for (int u = 0; u < n; ++u) {
        if (dist[u] != DistanceMatrix::kUnreachable) {
            total += dist[u];
            ++reached;
        }
    }
    if (reached < n) return ExtInt::infinity();
    return ExtInt(total);
}

std::vector<int> k_vicinity(const Graph& g, int u, int k) {
    if (k < 0) throw std::invalid_argument("k_vicinity: k must be non-negative");
    const int n = g.vertex_count();
    if (u < 0 || u >= n) throw std::out_of_range("k_vicinity: bad vertex");
    std::vector<int> dist(static_cast<std::size_t>(n), DistanceMatrix::kUnreachable);
    std::vector<int> order;
    dist[u] = 0;
    order.push_back(u);
    for (std::size_t head = 0; head < order.size(); ++head) {
        const int x = order[head];
        if (dist[x] == k) continue;  // do not expand past radius k
        for (int w : g.neighbors(x)) {
            if (dist[w] == DistanceMatrix::kUnreachable) {
                dist[w] = dist[x] + 1;
                order.push_back(w);
            }
        }
    }
    std::sort(order.begin(), order.end());
    return order;
}

int max_vicinity_size(const Graph& g, int k) {
    int best = 0;
    for (int u = 0; u < g.vertex_count(); ++u)
        best = std::max(best, static_cast<int>(k_vicinity(g, u, k).size()));
    return best;
}

ExtInt diameter(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return ExtInt(0);
    int best = 0;
    std::vector<int> dist;
    for (int s = 0; s < n; ++s) {
        bfs_distances_into(g, s, dist);
        for (int v = 0; v < n; ++v) {
            if (dist[v] == DistanceMatrix::kUnreachable) return ExtInt::infinity();
            best = std::max(best, dist[v]);
        }
    }
    return ExtInt(best);
}

bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    const std::vector<int> dist = bfs_distances(g, 0);
    return std::none_of(dist.begin(), dist.end(),
                        [](int d) { return d == DistanceMatrix::kUnreachable; });
}

}  // namespace swapnet
