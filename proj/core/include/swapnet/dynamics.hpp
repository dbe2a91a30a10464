#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "swapnet/graph.hpp"
#include "swapnet/local_cost.hpp"
#include "swapnet/rng.hpp"

namespace swapnet {

enum class DynamicsMode { FullKnowledge, LimitedQuery };
enum class Scheduler { RoundRobin, UniformRandom };
enum class RunStatus { Absorbed, StepLimit, SilenceDetected };

struct DynamicsConfig {
    DynamicsMode mode = DynamicsMode::FullKnowledge;
    int query_budget = 1;  // c, limited-query mode; must be >= 1
    SearchPolicy policy = SearchPolicy::Best;
    Scheduler scheduler = Scheduler::RoundRobin;  // full-knowledge mode only
    std::uint64_t seed = 0;
    std::int64_t step_limit = 0;      // <= 0 selects a mode-dependent default
    std::int64_t silence_window = 0;  // <= 0 selects n^3 (limited-query mode)
};

struct DynamicsStep {
    std::int64_t t = 0;  // 1-based step time
    int u = 0;           // selected vertex
    std::optional<std::vector<int>> queried;  // limited-query mode only, sorted
    std::optional<SwapMove> move;             // empty = NoMove
    std::int64_t potential = 0;               // potential after the step
};

// Full record of one run. The potential column strictly increases exactly at
// applied moves, and replaying the moves from the initial graph reproduces
// final_graph bit-exactly.
struct DynamicsTrace {
    Graph initial;
    DynamicsConfig config;
    std::vector<DynamicsStep> steps;
    RunStatus status = RunStatus::Absorbed;
    Graph final_graph;
    std::int64_t applied_moves = 0;
    // Time of the last applied move (0 when the start is already an
    // equilibrium); -1 when the run ended before reaching an equilibrium.
    std::int64_t absorption_step = 0;
};

// Better-response dynamics with full degree knowledge. The scheduler picks
// the acting vertex (round-robin by default; uniform-random draws it from
// the trace's stream); the vertex applies find_profitable_swap under the
// configured policy. A full silent round over all vertices proves an
// equilibrium and ends the run as Absorbed.
//
// Draw order per step: scheduler draw (uniform scheduler only), then one
// draw to pick among profitable moves (Random policy only, skipped when
// none exist).
DynamicsTrace run_better_response(const Graph& g0, const DynamicsConfig& cfg);

// Limited-query dynamics: each step selects a vertex uniformly, reveals the
// degrees of min(c, #non-neighbors) non-neighbors sampled uniformly without
// replacement, and swaps when some revealed vertex has degree at least the
// degree of some neighbor. The applied pairing removes the minimum-degree
// neighbor (ties to the smallest id) and adds the maximum-degree revealed
// qualifying vertex (ties to the smallest id). The run ends at the silence
// window (status SilenceDetected) or the step limit.
//
// Draw order per step: one draw for the vertex, then the sample draws
// (exactly min(c, #non-neighbors) of them, whenever at least one
// non-neighbor exists, whether or not a move results).
DynamicsTrace run_limited_query(const Graph& g0, const DynamicsConfig& cfg);

// True iff the trace has at least `window` steps and the last `window` of
// them all recorded NoMove.
bool silence_stopping_rule(const DynamicsTrace& trace, std::int64_t window);

// Applies the trace's moves to its initial graph; equals final_graph.
Graph replay_trace(const DynamicsTrace& trace);

struct AbsorptionStats {
    int runs = 0;
    int absorbed = 0;  // runs whose final graph is a local equilibrium
    bool all_absorbed = false;
    double mean_steps = 0;  // over absorbed runs, steps to absorption
    std::int64_t max_steps = 0;
    std::int64_t median_steps = 0;
    std::int64_t p90_steps = 0;
    double mean_applied_moves = 0;
    double bound = 0;  // n^5/(2c)
    bool mean_within_bound = false;
};

// Summary over runs sharing the same (n, c); throws MixedConfig otherwise.
AbsorptionStats absorption_statistics(const std::vector<DynamicsTrace>& runs);

const char* run_status_name(RunStatus status);

}  // namespace swapnet
