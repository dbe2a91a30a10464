#pragma once

#include <compare>
#include <cstdint>
#include <unordered_set>
#include <utility>
#include <vector>

#include "swapnet/errors.hpp"

namespace swapnet {

// One player's action: replace the incident edge {player, removed} with the
// new incident edge {player, added}. Legality is relative to a graph.
struct SwapMove {
    int player = 0;
    int removed = 0;
    int added = 0;

    friend bool operator==(const SwapMove&, const SwapMove&) = default;
};

// Simple undirected graph on vertices 0..n-1. No self-loops, no parallel
// edges; vertex identities are stable (swaps change edges only). Adjacency
// queries are O(1) expected, neighbor lists are sorted and iterable in
// O(deg). Values are cheap to copy; all game operations treat them as
// immutable snapshots.
class Graph {
public:
    explicit Graph(int n);
    Graph(int n, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    bool has_edge(int u, int v) const;
    const std::vector<int>& neighbors(int v) const;
    int degree(int v) const;

    void add_edge(int u, int v);     // throws std::invalid_argument on misuse
    void remove_edge(int u, int v);  // throws std::invalid_argument if absent

    // All edges as (u, v) with u < v, sorted lexicographically.
    std::vector<std::pair<int, int>> edges() const;

    // Vertices not adjacent to v, excluding v itself; sorted ascending.
    std::vector<int> non_neighbors(int v) const;

    int max_degree() const;
    int min_degree() const;

    // Neighbors of v having degree at least 2, and their count.
    std::vector<int> robust_neighbors(int v) const;
    int robust_degree(int v) const;

    bool legal_swap(const SwapMove& m) const;

    // Returns the post-swap graph; throws InvalidSwap if m is illegal here.
    Graph apply_swap(const SwapMove& m) const;

    // Labeled equality: same vertex count and same edge set.
    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.adj_ == b.adj_;
    }

private:
    void check_vertex(int v) const;
    std::uint64_t edge_key(int u, int v) const;

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;  // each list sorted ascending
    std::unordered_set<std::uint64_t> edge_keys_;
};

}  // namespace swapnet
