#include "swapnet/sum_swap.hpp"

#include <stdexcept>

namespace swapnet {

namespace {

// Deviator's cost after applying m to scratch, which is restored before
// returning. Avoids a full graph copy per candidate move.
ExtInt post_swap_cost(Graph& scratch, const SwapMove& m) {
    scratch.remove_edge(m.player, m.removed);
    scratch.add_edge(m.player, m.added);
    const ExtInt after = sum_of_distances(scratch, m.player);
    scratch.remove_edge(m.player, m.added);
    scratch.add_edge(m.player, m.removed);
    return after;
}

}  // namespace

std::vector<SwapMove> enumerate_swaps(const Graph& g, int v) {
    const std::vector<int> targets = g.non_neighbors(v);
    std::vector<SwapMove> moves;
    moves.reserve(g.neighbors(v).size() * targets.size());
    for (int removed : g.neighbors(v))
        for (int added : targets) moves.push_back({v, removed, added});
    return moves;
}

ExtInt swap_cost_delta(const Graph& g, const SwapMove& m) {
    if (!g.legal_swap(m)) throw InvalidSwap("swap_cost_delta: illegal move");
    const ExtInt before = sum_of_distances(g, m.player);
    Graph scratch = g;
    return ext_delta(post_swap_cost(scratch, m), before);
}

std::optional<ScoredSwap> find_improving_swap(const Graph& g, int v, SearchPolicy policy,
                                              Rng& rng) {
    const ExtInt before = sum_of_distances(g, v);
    Graph scratch = g;
    std::optional<ScoredSwap> best;
    std::vector<ScoredSwap> improving;
    for (const SwapMove& m : enumerate_swaps(g, v)) {
        const ExtInt delta = ext_delta(post_swap_cost(scratch, m), before);
        if (delta >= ExtInt(0)) continue;
        if (policy == SearchPolicy::First) return ScoredSwap{m, delta};
        if (policy == SearchPolicy::Best) {
            if (!best || delta < best->delta) best = ScoredSwap{m, delta};
        } else {
            improving.push_back({m, delta});
        }
    }
    if (policy == SearchPolicy::Best) return best;
    if (policy == SearchPolicy::Random && !improving.empty())
        return improving[rng.next_below(improving.size())];
    return std::nullopt;
}

std::optional<ScoredSwap> find_improving_swap(const Graph& g, int v, SearchPolicy policy,
                                              std::uint64_t seed) {
    Rng rng(seed);
    return find_improving_swap(g, v, policy, rng);
}

SseReport check_sse(const Graph& g, bool exhaustive) {
    const int n = g.vertex_count();
    SseReport report;
    report.costs.reserve(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) report.costs.push_back(sum_of_distances(g, v));

    Graph scratch = g;
    for (int v = 0; v < n; ++v) {
        for (const SwapMove& m : enumerate_swaps(g, v)) {
            const ExtInt delta = ext_delta(post_swap_cost(scratch, m), report.costs[v]);
            if (delta >= ExtInt(0)) continue;
            if (!report.witness) report.witness = ScoredSwap{m, delta};
            if (!exhaustive) {
                report.is_equilibrium = false;
                return report;
            }
            report.all_witnesses.push_back({m, delta});
        }
    }
    report.is_equilibrium = !report.witness.has_value();
    return report;
}

}  // namespace swapnet
