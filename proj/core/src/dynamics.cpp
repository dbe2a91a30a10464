#include "swapnet/dynamics.hpp"

#include <algorithm>

#include "swapnet/errors.hpp"

namespace swapnet {

namespace {

std::int64_t cube(std::int64_t n) { return n * n * n; }

std::int64_t default_full_limit(std::int64_t n) {
    // Moves are capped by the potential range n(n-1)^2/2; round-robin needs
    // at most n steps per move plus one closing round.
    return n * ((n * (n - 1) * (n - 1)) / 2 + n + 1) + 1;
}

std::int64_t default_query_limit(std::int64_t n, std::int64_t c, std::int64_t window) {
    const std::int64_t n5 = n * n * n * n * n;
    return 10 * (n5 / (2 * c)) + 2 * window + 1;
}

void finalize(DynamicsTrace& trace, Graph g) {
    trace.final_graph = std::move(g);
    if (check_local_equilibrium(trace.final_graph).is_equilibrium) {
        std::int64_t last_move = 0;
        for (const DynamicsStep& s : trace.steps)
            if (s.move) last_move = s.t;
        trace.absorption_step = last_move;
    } else {
        trace.absorption_step = -1;
    }
}

}  // namespace

DynamicsTrace run_better_response(const Graph& g0, const DynamicsConfig& cfg) {
    if (cfg.mode != DynamicsMode::FullKnowledge)
        throw BadSpec("run_better_response: config mode is not full-knowledge");
    const int n = g0.vertex_count();
    DynamicsTrace trace{g0, cfg, {}, RunStatus::StepLimit, g0, 0, 0};
    if (n == 0) {
        trace.status = RunStatus::Absorbed;
        finalize(trace, g0);
        return trace;
    }

    Rng rng(cfg.seed);
    Graph g = g0;
    std::int64_t phi = potential(g);
    const std::int64_t limit = cfg.step_limit > 0 ? cfg.step_limit : default_full_limit(n);
    int silent = 0;
    for (std::int64_t t = 1; t <= limit; ++t) {
        const int u = cfg.scheduler == Scheduler::RoundRobin
                          ? static_cast<int>((t - 1) % n)
                          : static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        const auto found = find_profitable_swap(g, u, cfg.policy, rng);
        if (found) {
            g.remove_edge(u, found->move.removed);
            g.add_edge(u, found->move.added);
            phi += found->delta;
            silent = 0;
            ++trace.applied_moves;
        } else {
            ++silent;
        }
        trace.steps.push_back(
            {t, u, std::nullopt, found ? std::optional<SwapMove>(found->move) : std::nullopt,
             phi});
        if (silent >= n) {
            // Round-robin: every vertex was scanned on an unchanged graph.
            // Uniform scheduler: a quiet stretch is only evidence, so confirm.
            if (cfg.scheduler == Scheduler::RoundRobin ||
                check_local_equilibrium(g).is_equilibrium) {
                trace.status = RunStatus::Absorbed;
                break;
            }
            silent = 0;
        }
    }
    finalize(trace, std::move(g));
    return trace;
}

DynamicsTrace run_limited_query(const Graph& g0, const DynamicsConfig& cfg) {
    if (cfg.mode != DynamicsMode::LimitedQuery)
        throw BadSpec("run_limited_query: config mode is not limited-query");
    if (cfg.query_budget < 1) throw BadSpec("run_limited_query: query budget must be >= 1");
    const int n = g0.vertex_count();
    DynamicsTrace trace{g0, cfg, {}, RunStatus::StepLimit, g0, 0, 0};
    if (n == 0) {
        trace.status = RunStatus::SilenceDetected;
        finalize(trace, g0);
        return trace;
    }

    Rng rng(cfg.seed);
    Graph g = g0;
    std::int64_t phi = potential(g);
    const std::int64_t window = cfg.silence_window > 0 ? cfg.silence_window : cube(n);
    const std::int64_t limit =
        cfg.step_limit > 0 ? cfg.step_limit : default_query_limit(n, cfg.query_budget, window);
    std::int64_t silent = 0;
    for (std::int64_t t = 1; t <= limit; ++t) {
        const int u = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
        std::vector<int> queried;
        const std::vector<int> pool = g.non_neighbors(u);
        if (!pool.empty()) queried = rng.sample_without_replacement(pool, cfg.query_budget);

        std::optional<SwapMove> move;
        std::int64_t delta = 0;
        if (g.degree(u) >= 1 && !queried.empty()) {
            int removed = -1;
            for (int w : g.neighbors(u))  // ascending ids keep ties on the smallest
                if (removed < 0 || g.degree(w) < g.degree(removed)) removed = w;
            int added = -1;
            for (int v : queried)
                if (g.degree(v) >= g.degree(removed) && (added < 0 || g.degree(v) > g.degree(added)))
                    added = v;
            if (added >= 0) {
                move = SwapMove{u, removed, added};
                delta = g.degree(added) + 1 - g.degree(removed);
            }
        }
        if (move) {
            g.remove_edge(u, move->removed);
            g.add_edge(u, move->added);
            phi += delta;
            silent = 0;
            ++trace.applied_moves;
        } else {
            ++silent;
        }
        trace.steps.push_back({t, u, std::move(queried), move, phi});
        if (silent >= window) {
            trace.status = RunStatus::SilenceDetected;
            break;
        }
    }
    finalize(trace, std::move(g));
    return trace;
}

bool silence_stopping_rule(const DynamicsTrace& trace, std::int64_t window) {
    if (window < 1) throw BadSpec("silence_stopping_rule: window must be >= 1");
    if (static_cast<std::int64_t>(trace.steps.size()) < window) return false;
    const auto last = trace.steps.end();
    for (auto it = last - window; it != last; ++it)
        if (it->move) return false;
    return true;
}

Graph replay_trace(const DynamicsTrace& trace) {
    Graph g = trace.initial;
    for (const DynamicsStep& s : trace.steps)
        if (s.move) g = g.apply_swap(*s.move);
    return g;
}

AbsorptionStats absorption_statistics(const std::vector<DynamicsTrace>& runs) {
    AbsorptionStats stats;
    stats.runs = static_cast<int>(runs.size());
    if (runs.empty()) return stats;

    const int n = runs.front().initial.vertex_count();
    const int c = runs.front().config.query_budget;
    for (const DynamicsTrace& run : runs) {
        if (run.initial.vertex_count() != n || run.config.query_budget != c)
            throw MixedConfig("absorption_statistics: runs differ in (n, c)");
    }

    std::vector<std::int64_t> steps;
    double moves_total = 0;
    for (const DynamicsTrace& run : runs) {
        moves_total += static_cast<double>(run.applied_moves);
        if (run.absorption_step >= 0) {
            ++stats.absorbed;
            steps.push_back(run.absorption_step);
        }
    }
    stats.all_absorbed = stats.absorbed == stats.runs;
    stats.mean_applied_moves = moves_total / static_cast<double>(stats.runs);

    const double n5 = static_cast<double>(n) * n * n * n * n;
    stats.bound = n5 / (2.0 * c);

    if (!steps.empty()) {
        std::sort(steps.begin(), steps.end());
        double total = 0;
        for (std::int64_t s : steps) total += static_cast<double>(s);
        stats.mean_steps = total / static_cast<double>(steps.size());
        stats.max_steps = steps.back();
        stats.median_steps = steps[(steps.size() - 1) / 2];
        stats.p90_steps = steps[(steps.size() - 1) * 9 / 10];
        stats.mean_within_bound = stats.all_absorbed && stats.mean_steps <= stats.bound;
    }
    return stats;
}

const char* run_status_name(RunStatus status) {
    switch (status) {
        case RunStatus::Absorbed:
            return "Absorbed";
        case RunStatus::StepLimit:
            return "StepLimit";
        case RunStatus::SilenceDetected:
            return "SilenceDetected";
    }
    return "unknown";
}

}  // namespace swapnet
