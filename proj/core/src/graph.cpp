#include "swapnet/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace swapnet {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    adj_.assign(static_cast<std::size_t>(n), {});
}

Graph::Graph(int n, const std::vector<std::pair<int, int>>& edges) : Graph(n) {
    for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw std::out_of_range("Graph: vertex " + std::to_string(v) + " out of range 0.." +
                                std::to_string(n_ - 1));
}

std::uint64_t Graph::edge_key(int u, int v) const {
    if (u > v) std::swap(u, v);
    return static_cast<std::uint64_t>(u) * static_cast<std::uint64_t>(n_) +
           static_cast<std::uint64_t>(v);
}

bool Graph::has_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    return edge_keys_.contains(edge_key(u, v));
}

const std::vector<int>& Graph::neighbors(int v) const {
    check_vertex(v);
    return adj_[v];
}

int Graph::degree(int v) const {
    check_vertex(v);
    return static_cast<int>(adj_[v].size());
}

void Graph::add_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("Graph: self-loop on vertex " + std::to_string(u));
    if (!edge_keys_.insert(edge_key(u, v)).second)
        throw std::invalid_argument("Graph: duplicate edge {" + std::to_string(u) + "," +
                                    std::to_string(v) + "}");
    auto& au = adj_[u];
    au.insert(std::lower_bound(au.begin(), au.end(), v), v);
    auto& av = adj_[v];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++m_;
}

void Graph::remove_edge(int u, int v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v || edge_keys_.erase(edge_key(u, v)) == 0)
        throw std::invalid_argument("Graph: no edge {" + std::to_string(u) + "," +
                                    std::to_string(v) + "} to remove");
    auto& au = adj_[u];
    au.erase(std::lower_bound(au.begin(), au.end(), v));
    auto& av = adj_[v];
    av.erase(std::lower_bound(av.begin(), av.end(), u));
    --m_;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (int u = 0; u < n_; ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

std::vector<int> Graph::non_neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(n_ - 1 - degree(v)));
    const auto& nb = adj_[v];
    std::size_t i = 0;
    for (int w = 0; w < n_; ++w) {
        if (i < nb.size() && nb[i] == w) {
            ++i;
            continue;
        }
        if (w != v) out.push_back(w);
    }
    return out;
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& nb : adj_) best = std::max(best, static_cast<int>(nb.size()));
    return best;
}

int Graph::min_degree() const {
    if (n_ == 0) return 0;
    int best = n_;
    for (const auto& nb : adj_) best = std::min(best, static_cast<int>(nb.size()));
    return best;
}

std::vector<int> Graph::robust_neighbors(int v) const {
    check_vertex(v);
    std::vector<int> out;
    for (int u : adj_[v])
        if (degree(u) >= 2) out.push_back(u);
    return out;
}

int Graph::robust_degree(int v) const {
    check_vertex(v);
    int count = 0;
    for (int u : adj_[v])
        if (degree(u) >= 2) ++count;
    return count;
}

bool Graph::legal_swap(const SwapMove& m) const {
    if (m.player < 0 || m.player >= n_ || m.removed < 0 || m.removed >= n_ || m.added < 0 ||
        m.added >= n_)
        return false;
    if (m.removed == m.added || m.added == m.player || m.removed == m.player) return false;
    return has_edge(m.player, m.removed) && !has_edge(m.player, m.added);
}

Graph Graph::apply_swap(const SwapMove& m) const {
    if (!legal_swap(m))
        throw InvalidSwap("illegal swap: player " + std::to_string(m.player) + " removes " +
                          std::to_string(m.removed) + ", adds " + std::to_string(m.added));
    Graph out = *this;
    out.remove_edge(m.player, m.removed);
    out.add_edge(m.player, m.added);
    return out;
}

}  // namespace swapnet
