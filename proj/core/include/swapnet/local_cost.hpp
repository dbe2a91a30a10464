#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "swapnet/graph.hpp"
#include "swapnet/rng.hpp"
#include "swapnet/sum_swap.hpp"

namespace swapnet {

// Degree-sum profit of u: sum of deg(v) over neighbors v. 0 for isolated
// vertices. Also the number of length-2 walks starting at u.
std::int64_t profit(const Graph& g, int u);

// Exact potential of the local-cost game: half the sum of squared degrees.
// Always an integer; any unilateral swap changes it by exactly the mover's
// profit change.
std::int64_t potential(const Graph& g);

// Closed-form profit change for the deviator: deg(added) + 1 - deg(removed),
// degrees taken in g. Throws InvalidSwap on an illegal move.
std::int64_t profit_delta(const Graph& g, const SwapMove& m);

struct ScoredLocalSwap {
    SwapMove move;
    std::int64_t delta = 0;

    friend bool operator==(const ScoredLocalSwap&, const ScoredLocalSwap&) = default;
};

// A strictly profitable swap for u (delta >= 1, i.e. deg(added) >=
// deg(removed)), chosen per policy as in find_improving_swap. Empty iff
// every non-neighbor's degree is below every neighbor's degree, and always
// empty for isolated or all-adjacent vertices.
std::optional<ScoredLocalSwap> find_profitable_swap(const Graph& g, int u, SearchPolicy policy,
                                                    Rng& rng);
std::optional<ScoredLocalSwap> find_profitable_swap(const Graph& g, int u,
                                                    SearchPolicy policy = SearchPolicy::First,
                                                    std::uint64_t seed = 0);

struct LocalEquilibriumReport {
    bool is_equilibrium = true;
    std::optional<ScoredLocalSwap> witness;
    std::vector<std::int64_t> profits;
};

// Equilibrium iff no vertex has a profitable swap. Witness selection scans
// vertices 0..n-1, enumeration order within each. Connectivity is not
// required; disconnected configurations are legal states.
LocalEquilibriumReport check_local_equilibrium(const Graph& g);

// True iff some vertex is adjacent to all n-1 others.
bool has_spanning_star(const Graph& g);

// True iff some vertex is adjacent to every other vertex that has at least
// one edge. Trivially true on edgeless graphs. Equilibria that contain
// isolated vertices satisfy this even when has_spanning_star fails.
bool has_spanning_star_on_non_isolated(const Graph& g);

}  // namespace swapnet
