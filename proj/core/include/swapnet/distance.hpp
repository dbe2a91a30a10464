#pragma once

#include <limits>
#include <vector>

#include "swapnet/ext_int.hpp"
#include "swapnet/graph.hpp"

namespace swapnet {

// All-pairs hop distances. Entries are non-negative integers, or
// kUnreachable for vertex pairs in different components; kUnreachable
// orders above every finite distance.
class DistanceMatrix {
public:
    static constexpr int kUnreachable = std::numeric_limits<int>::max();

    explicit DistanceMatrix(int n)
        : n_(n), d_(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), kUnreachable) {}

    int size() const { return n_; }

    int at(int u, int v) const { return d_[index(u, v)]; }
    int& at(int u, int v) { return d_[index(u, v)]; }

    bool reachable(int u, int v) const { return at(u, v) != kUnreachable; }

private:
    std::size_t index(int u, int v) const {
        return static_cast<std::size_t>(u) * static_cast<std::size_t>(n_) +
               static_cast<std::size_t>(v);
    }

    int n_ = 0;
    std::vector<int> d_;
};

// Single-source hop distances; unreachable vertices get
// DistanceMatrix::kUnreachable. The _into variant reuses the output buffer.
std::vector<int> bfs_distances(const Graph& g, int source);
void bfs_distances_into(const Graph& g, int source, std::vector<int>& dist);

DistanceMatrix all_pairs_distances(const Graph& g);

// Sum of distances from v to every vertex; infinite iff v does not reach
// the whole graph.
ExtInt sum_of_distances(const Graph& g, int v);

// Vertices within distance k of u (contains u), sorted ascending. k >= 0.
std::vector<int> k_vicinity(const Graph& g, int u, int k);

// Largest k-vicinity size over all vertices.
int max_vicinity_size(const Graph& g, int k);

// Max finite distance if connected, infinite otherwise.
ExtInt diameter(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace swapnet
