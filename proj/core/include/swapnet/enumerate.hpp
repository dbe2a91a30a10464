#pragma once

#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "swapnet/graph.hpp"

namespace swapnet {

// Vertex pairs (u, v) with u < v in lexicographic order; bit i of a graph
// mask refers to pair_order(n)[i].
inline std::vector<std::pair<int, int>> pair_order(int n) {
    std::vector<std::pair<int, int>> pairs;
    pairs.reserve(static_cast<std::size_t>(n) * (n - 1) / 2);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    return pairs;
}

inline Graph graph_from_mask(int n, std::uint64_t mask, const std::vector<std::pair<int, int>>& pairs) {
    Graph g(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if (mask & (std::uint64_t(1) << i)) g.add_edge(pairs[i].first, pairs[i].second);
    return g;
}

// Calls f on every labeled graph with exactly n vertices (2^(n(n-1)/2) of
// them). Only sensible for n <= 7 or so.
template <class F>
void for_each_labeled_graph(int n, F&& f) {
    if (n < 0 || n > 8) throw std::invalid_argument("for_each_labeled_graph: n out of range");
    const auto pairs = pair_order(n);
    const std::uint64_t total = std::uint64_t(1) << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) f(graph_from_mask(n, mask, pairs));
}

}  // namespace swapnet
