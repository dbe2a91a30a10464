#include "swapnet/local_cost.hpp"

namespace swapnet {

std::int64_t profit(const Graph& g, int u) {
    std::int64_t total = 0;
    for (int v : g.neighbors(u)) total += g.degree(v);
    return total;
}

std::int64_t potential(const Graph& g) {
    std::int64_t squares = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        const std::int64_t d = g.degree(v);
        squares += d * d;
    }
    // The squared-degree sum has the parity of the degree sum, which is even.
    return squares / 2;
}

std::int64_t profit_delta(const Graph& g, const SwapMove& m) {
    if (!g.legal_swap(m)) throw InvalidSwap("profit_delta: illegal move");
    return g.degree(m.added) + 1 - g.degree(m.removed);
}

std::optional<ScoredLocalSwap> find_profitable_swap(const Graph& g, int u, SearchPolicy policy,
                                                    Rng& rng) {
    std::optional<ScoredLocalSwap> best;
    std::vector<ScoredLocalSwap> profitable;
    const std::vector<int> targets = g.non_neighbors(u);
    for (int removed : g.neighbors(u)) {
        for (int added : targets) {
            const std::int64_t delta = g.degree(added) + 1 - g.degree(removed);
            if (delta < 1) continue;
            const ScoredLocalSwap found{{u, removed, added}, delta};
            if (policy == SearchPolicy::First) return found;
            if (policy == SearchPolicy::Best) {
                if (!best || delta > best->delta) best = found;
            } else {
                profitable.push_back(found);
            }
        }
    }
    if (policy == SearchPolicy::Best) return best;
    if (policy == SearchPolicy::Random && !profitable.empty())
        return profitable[rng.next_below(profitable.size())];
    return std::nullopt;
}

std::optional<ScoredLocalSwap> find_profitable_swap(const Graph& g, int u, SearchPolicy policy,
                                                    std::uint64_t seed) {
    Rng rng(seed);
    return find_profitable_swap(g, u, policy, rng);
}

LocalEquilibriumReport check_local_equilibrium(const Graph& g) {
    const int n = g.vertex_count();
    LocalEquilibriumReport report;
    report.profits.reserve(static_cast<std::size_t>(n));
    for (int u = 0; u < n; ++u) report.profits.push_back(profit(g, u));
    for (int u = 0; u < n; ++u) {
        if (auto found = find_profitable_swap(g, u, SearchPolicy::First)) {
            report.witness = found;
            report.is_equilibrium = false;
            break;
        }
    }
    return report;
}

bool has_spanning_star(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) return true;
    return g.max_degree() == n - 1;
}

bool has_spanning_star_on_non_isolated(const Graph& g) {
    int supported = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= 1) ++supported;
    if (supported == 0) return true;
    // Isolated vertices have no edges, so a max-degree vertex adjacent to
    // supported - 1 others spans exactly the supported set.
    return g.max_degree() == supported - 1;
}

}  // namespace swapnet
