#pragma once

#include <optional>
#include <vector>

#include "swapnet/distance.hpp"
#include "swapnet/ext_int.hpp"
#include "swapnet/graph.hpp"
#include "swapnet/rng.hpp"

namespace swapnet {

enum class SearchPolicy { First, Best, Random };

struct ScoredSwap {
    SwapMove move;
    ExtInt delta;  // cost after minus cost before, for the deviator

    friend bool operator==(const ScoredSwap&, const ScoredSwap&) = default;
};

// Equilibrium verdict for the distance-sum game. The witness, when present,
// strictly decreases the deviator's cost; costs holds every vertex's
// distance sum in the input graph.
struct SseReport {
    bool is_equilibrium = true;
    std::optional<ScoredSwap> witness;
    std::vector<ExtInt> costs;
    std::vector<ScoredSwap> all_witnesses;  // populated in exhaustive mode only
};

// Every legal swap of v: removed over neighbors ascending, added over
// non-neighbors ascending, in lexicographic (removed, added) order.
// Exactly deg(v) * (n - 1 - deg(v)) moves.
std::vector<SwapMove> enumerate_swaps(const Graph& g, int v);

// Distance-sum change for the deviator, infinity-aware: +inf if the swap
// cuts the deviator off from some vertex, -inf if it makes an infinite cost
// finite, 0 for inf -> inf. Throws InvalidSwap on an illegal move.
ExtInt swap_cost_delta(const Graph& g, const SwapMove& m);

// A strictly improving swap for v (delta < 0), chosen per policy:
// First = enumeration order, Best = most negative delta (ties by
// enumeration order), Random = uniform over improving moves drawn
// from rng. Empty when no improving swap exists.
std::optional<ScoredSwap> find_improving_swap(const Graph& g, int v, SearchPolicy policy,
                                              Rng& rng);
std::optional<ScoredSwap> find_improving_swap(const Graph& g, int v,
                                              SearchPolicy policy = SearchPolicy::First,
                                              std::uint64_t seed = 0);

// Scans vertices 0..n-1 in order, enumeration order within each vertex, and
// stops at the first witness unless exhaustive is set, in which case every
// improving (vertex, move) pair is listed. Disconnected inputs are legal:
// all costs are infinite and only a swap reaching a finite cost improves.
SseReport check_sse(const Graph& g, bool exhaustive = false);

}  // namespace swapnet
