#include "swapnet/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <optional>
#include <sstream>

#include "swapnet/distance.hpp"
#include "swapnet/dynamics.hpp"
#include "swapnet/enumerate.hpp"
#include "swapnet/errors.hpp"
#include "swapnet/generators.hpp"
#include "swapnet/local_cost.hpp"
#include "swapnet/structural.hpp"
#include "swapnet/sum_swap.hpp"

namespace swapnet {

namespace {

std::string describe_graph(const Graph& g) {
    std::ostringstream out;
    out << "n=" << g.vertex_count() << " edges=";
    bool first = true;
    for (const auto& [u, v] : g.edges()) {
        if (!first) out << ",";
        out << u << "-" << v;
        first = false;
    }
    if (first) out << "(none)";
    return out.str();
}

void add_param(ExperimentReport& report, const std::string& key, const std::string& value) {
    report.params.emplace_back(key, value);
}

// From-scratch recomputation of the deviator's distance-sum change, routed
// through apply_swap and the full distance matrix rather than the
// incremental path swap_cost_delta uses.
ExtInt recomputed_sum_delta(const Graph& g, const SwapMove& m) {
    const Graph after = g.apply_swap(m);
    const DistanceMatrix before_d = all_pairs_distances(g);
    const DistanceMatrix after_d = all_pairs_distances(after);
    const int n = g.vertex_count();
    std::int64_t before = 0, after_sum = 0;
    bool before_inf = false, after_inf = false;
    for (int v = 0; v < n; ++v) {
        if (before_d.reachable(m.player, v)) before += before_d.at(m.player, v);
        else before_inf = true;
        if (after_d.reachable(m.player, v)) after_sum += after_d.at(m.player, v);
        else after_inf = true;
    }
    return ext_delta(after_inf ? ExtInt::infinity() : ExtInt(after_sum),
                     before_inf ? ExtInt::infinity() : ExtInt(before));
}

std::optional<SwapMove> random_legal_move(const Graph& g, Rng& rng) {
    const int n = g.vertex_count();
    std::vector<int> movable;
    for (int v = 0; v < n; ++v)
        if (g.degree(v) >= 1 && g.degree(v) <= n - 2) movable.push_back(v);
    if (movable.empty()) return std::nullopt;
    const int v = movable[rng.next_below(movable.size())];
    const auto& nb = g.neighbors(v);
    const int removed = nb[rng.next_below(nb.size())];
    const std::vector<int> targets = g.non_neighbors(v);
    const int added = targets[rng.next_below(targets.size())];
    return SwapMove{v, removed, added};
}

// ---------------------------------------------------------------------------
// potential-exactness

ExperimentReport run_potential_exactness(const ExperimentParams& p) {
    ExperimentReport report;
    report.suite = "potential-exactness";
    report.seed = p.seed;
    add_param(report, "exhaustive_max_n", std::to_string(p.exhaustive_max_n));
    add_param(report, "random_pairs_per_n", std::to_string(p.random_pairs_per_n));
    add_param(report, "oracle_family_graphs", std::to_string(p.oracle_family_graphs));

    Rng root(p.seed);

    {
        CriterionOutcome outcome;
        outcome.name = "exact-potential-exhaustive";
        std::int64_t checked = 0, mismatches = 0;
        for (int n = 1; n <= p.exhaustive_max_n; ++n) {
            std::int64_t n_checked = 0;
            std::int64_t n_bad = 0;
            for_each_labeled_graph(n, [&](const Graph& g) {
                const std::int64_t before = potential(g);
                for (int v = 0; v < n; ++v) {
                    for (const SwapMove& m : enumerate_swaps(g, v)) {
                        const std::int64_t lhs = potential(g.apply_swap(m)) - before;
                        const std::int64_t rhs = profit_delta(g, m);
                        ++n_checked;
                        if (lhs != rhs) ++n_bad;
                    }
                }
            });
            checked += n_checked;
            mismatches += n_bad;
            outcome.instances.push_back({"n=" + std::to_string(n), n_bad == 0,
                                         std::to_string(n_checked) + " moves checked"});
        }
        outcome.pass = mismatches == 0;
        outcome.summary = std::to_string(checked) + " swaps over all labeled graphs, " +
                          std::to_string(mismatches) + " potential mismatches";
        report.criteria.push_back(std::move(outcome));
    }

    {
        CriterionOutcome outcome;
        outcome.name = "exact-potential-random";
        std::int64_t mismatches = 0;
        for (int n : p.random_pair_sizes) {
            Rng rng = root.split(100 + static_cast<std::uint64_t>(n));
            std::int64_t n_checked = 0, n_bad = 0;
            while (n_checked < p.random_pairs_per_n) {
                const double prob = 0.15 + 0.7 * rng.uniform01();
                const Graph g = generate({GraphFamily::Gnp, n, prob, 0, 0, 1, rng.next()});
                for (int tries = 0; tries < 16 && n_checked < p.random_pairs_per_n; ++tries) {
                    const auto m = random_legal_move(g, rng);
                    if (!m) break;
                    const std::int64_t lhs = potential(g.apply_swap(*m)) - potential(g);
                    ++n_checked;
                    if (lhs != profit_delta(g, *m)) ++n_bad;
                }
            }
            mismatches += n_bad;
            outcome.instances.push_back({"n=" + std::to_string(n), n_bad == 0,
                                         std::to_string(n_checked) + " random moves checked"});
        }
        outcome.pass = mismatches == 0;
        outcome.summary = "random (graph, move) pairs, " + std::to_string(mismatches) +
                          " potential mismatches";
        report.criteria.push_back(std::move(outcome));
    }

    {
        CriterionOutcome outcome;
        outcome.name = "delta-oracle-equivalence";
        std::int64_t comparisons = 0, mismatches = 0;
        for (int i = 0; i < p.oracle_family_graphs; ++i) {
            Rng rng = root.split(200 + static_cast<std::uint64_t>(i));
            const int n = 4 + i % 4;
            Graph g(0);
            switch (i % 5) {
                case 0: g = generate({GraphFamily::Gnp, n, 0.35, 0, 0, 1, rng.next()}); break;
                case 1: g = generate({GraphFamily::Gnp, n, 0.6, 0, 0, 1, rng.next()}); break;
                case 2: g = generate({GraphFamily::Gnp, n, 0.85, 0, 0, 1, rng.next()}); break;
                case 3: g = generate({GraphFamily::RandomTree, n, 0, 0, 0, 1, rng.next()}); break;
                default: g = random_connected_graph(n, 0.3, rng); break;
            }
            for (int v = 0; v < n; ++v) {
                for (const SwapMove& m : enumerate_swaps(g, v)) {
                    if (swap_cost_delta(g, m) != recomputed_sum_delta(g, m)) ++mismatches;
                    ++comparisons;
                    const Graph after = g.apply_swap(m);
                    if (profit_delta(g, m) != profit(after, v) - profit(g, v)) ++mismatches;
                    ++comparisons;
                }
            }
        }
        outcome.pass = mismatches == 0 && comparisons >= p.oracle_min_comparisons;
        outcome.summary = std::to_string(comparisons) + " delta comparisons against " +
                          "from-scratch recomputation, " + std::to_string(mismatches) +
                          " mismatches";
        outcome.instances.push_back({"family", outcome.pass, outcome.summary});
        report.criteria.push_back(std::move(outcome));
    }

    return report;
}

// ---------------------------------------------------------------------------
// SSE corpus shared by sse-structure and bounds-validation

struct CorpusMember {
    std::string id;
    Graph g;
};

std::vector<CorpusMember> assemble_sse_corpus(const ExperimentParams& p,
                                              CriterionOutcome* certification) {
    std::vector<CorpusMember> corpus;
    std::vector<CorpusMember> fixed;
    for (int n : {3, 5, 8, 12, 20, 40})
        fixed.push_back({"star-" + std::to_string(n), generate({GraphFamily::Star, n})});
    for (int n : {3, 4, 5, 8, 12, 20, 40})
        fixed.push_back({"complete-" + std::to_string(n), generate({GraphFamily::Complete, n})});
    fixed.push_back({"cycle-4", generate({GraphFamily::Cycle, 4})});

    bool all_fixed_certified = true;
    for (CorpusMember& member : fixed) {
        const bool sse = check_sse(member.g).is_equilibrium;
        if (certification)
            certification->instances.push_back(
                {member.id, sse, sse ? "brute-force certified SSE" : "NOT an SSE"});
        if (!sse) all_fixed_certified = false;
        corpus.push_back(std::move(member));
    }

    Rng root(p.seed);
    int certified_random = 0;
    const int span = std::max(1, p.sse_max_n - 3);
    for (int i = 0; i < p.sse_random_graphs; ++i) {
        Rng rng = root.split(300 + static_cast<std::uint64_t>(i));
        const int n = 4 + i % span;
        const double extra = std::vector<double>{0.1, 0.3, 0.6, 0.9}[i % 4];
        Graph g = random_connected_graph(n, extra, rng);
        if (check_sse(g).is_equilibrium) {
            ++certified_random;
            corpus.push_back({"random-" + std::to_string(i), std::move(g)});
        }
    }
    if (certification) {
        certification->pass = all_fixed_certified;
        certification->summary =
            "fixed members certified by brute force; " + std::to_string(certified_random) +
            " of " + std::to_string(p.sse_random_graphs) +
            " random connected graphs certified SSE and added";
    }
    return corpus;
}

ExperimentReport run_sse_structure(const ExperimentParams& p) {
    ExperimentReport report;
    report.suite = "sse-structure";
    report.seed = p.seed;
    add_param(report, "sse_random_graphs", std::to_string(p.sse_random_graphs));
    add_param(report, "sse_max_n", std::to_string(p.sse_max_n));

    CriterionOutcome certification;
    certification.name = "corpus-certification";
    const std::vector<CorpusMember> corpus = assemble_sse_corpus(p, &certification);
    report.criteria.push_back(std::move(certification));

    CriterionOutcome difference{"difference-bound", true, "", {}};
    CriterionOutcome mean{"mean-difference", true, "", {}};
    CriterionOutcome first_edge{"first-edge-redundancy", true, "", {}};
    CriterionOutcome degree2{"degree2-diameter", true, "", {}};

    for (const CorpusMember& member : corpus) {
        const DifferenceBoundReport db = check_difference_bound(member.g);
        difference.instances.push_back(
            {member.id, db.all_satisfied,
             std::to_string(db.pairs.size()) + " pairs checked, " +
                 std::to_string(db.pairs_skipped) + " skipped" +
                 (db.worst_slack ? ", worst slack " + db.worst_slack->str() : "")});
        if (!db.all_satisfied) difference.pass = false;

        const MeanDifferenceReport md = check_mean_difference(member.g);
        mean.instances.push_back(
            {member.id, md.all_satisfied,
             md.max_mean ? "max mean difference " + md.max_mean->str() : "no eligible pairs"});
        if (!md.all_satisfied) mean.pass = false;

        const FirstEdgeRedundancyReport fe = check_first_edge_redundancy(member.g);
        first_edge.instances.push_back({member.id, fe.all_satisfied,
                                        std::to_string(fe.pairs_checked) + " ordered pairs, " +
                                            std::to_string(fe.violations.size()) + " violations"});
        if (!fe.all_satisfied) first_edge.pass = false;

        const bool d2 = check_degree2_diameter(member.g);
        degree2.instances.push_back({member.id, d2, d2 ? "ok" : "diameter above 9"});
        if (!d2) degree2.pass = false;
    }
    const std::string suffix = " over " + std::to_string(corpus.size()) + " certified members";
    difference.summary = (difference.pass ? "satisfied" : "VIOLATED") + suffix;
    mean.summary = (mean.pass ? "mean difference <= 3" : "VIOLATED") + suffix;
    first_edge.summary = (first_edge.pass ? "satisfied" : "VIOLATED") + suffix;
    degree2.summary = (degree2.pass ? "satisfied" : "VIOLATED") + suffix;
    report.criteria.push_back(std::move(difference));
    report.criteria.push_back(std::move(mean));
    report.criteria.push_back(std::move(first_edge));
    report.criteria.push_back(std::move(degree2));
    return report;
}

ExperimentReport run_bounds_validation(const ExperimentParams& p) {
    ExperimentReport report;
    report.suite = "bounds-validation";
    report.seed = p.seed;
    {
        std::string ks;
        for (int k : p.vicinity_ks) ks += (ks.empty() ? "" : ",") + std::to_string(k);
        add_param(report, "vicinity_ks", ks);
    }

    const std::vector<CorpusMember> corpus = assemble_sse_corpus(p, nullptr);

    for (int k : p.vicinity_ks) {
        CriterionOutcome outcome;
        outcome.name = "vicinity-bound-k" + std::to_string(k);
        for (const CorpusMember& member : corpus) {
            const Rational bound = vicinity_diameter_bound(member.g, k);
            const std::int64_t diam = diameter(member.g).value();
            const bool ok = Rational(diam) <= bound;
            outcome.instances.push_back({member.id, ok,
                                         "diam " + std::to_string(diam) + " <= " + bound.str()});
            if (!ok) outcome.pass = false;
        }
        outcome.summary = (outcome.pass ? "holds" : "VIOLATED") + std::string(" on all ") +
                          std::to_string(corpus.size()) + " members";
        report.criteria.push_back(std::move(outcome));
    }

    {
        CriterionOutcome outcome;
        outcome.name = "density-bound";
        int applicable = 0;
        for (const CorpusMember& member : corpus) {
            if (member.g.min_degree() < 2) continue;
            ++applicable;
            const Rational bound = density_diameter_bound(member.g);
            const std::int64_t diam = diameter(member.g).value();
            const bool ok = Rational(diam) <= bound;
            outcome.instances.push_back({member.id, ok,
                                         "diam " + std::to_string(diam) + " <= " + bound.str()});
            if (!ok) outcome.pass = false;
        }
        outcome.summary = (outcome.pass ? "holds" : "VIOLATED") + std::string(" on ") +
                          std::to_string(applicable) + " members with min degree >= 2";
        report.criteria.push_back(std::move(outcome));
    }

    {
        // The checkers must also reject graphs that cannot be equilibria.
        CriterionOutcome outcome;
        outcome.name = "violation-detection";
        const Graph barbell = generate({GraphFamily::Barbell, 0, 0, 3, 3, 1});
        const bool barbell_flagged = !check_first_edge_redundancy(barbell).all_satisfied &&
                                     !check_sse(barbell).is_equilibrium;
        outcome.instances.push_back({"barbell-3-3", barbell_flagged,
                                     "bridge endpoints lack a second disjoint first edge"});
        const Graph long_cycle = generate({GraphFamily::Cycle, 25});
        const bool cycle_flagged =
            !check_degree2_diameter(long_cycle) && !check_sse(long_cycle).is_equilibrium;
        outcome.instances.push_back(
            {"cycle-25", cycle_flagged, "degree-2 vertex with diameter 12 > 9"});
        outcome.pass = barbell_flagged && cycle_flagged;
        outcome.summary = outcome.pass ? "non-equilibrium witnesses correctly flagged"
                                       : "checker failed to flag a non-equilibrium graph";
        report.criteria.push_back(std::move(outcome));
    }

    return report;
}

// ---------------------------------------------------------------------------
// local-equilibrium-star

ExperimentReport run_local_equilibrium_star(const ExperimentParams& p) {
    ExperimentReport report;
    report.suite = "local-equilibrium-star";
    report.seed = p.seed;
    add_param(report, "star_exhaustive_max_n", std::to_string(p.star_exhaustive_max_n));
    add_param(report, "br_runs", std::to_string(p.br_runs));
    add_param(report, "br_max_n", std::to_string(p.br_max_n));

    CriterionOutcome exhaustive{"spanning-star-exhaustive", true, "", {}};
    CriterionOutcome dynamics_star{"spanning-star-dynamics", true, "", {}};
    CriterionOutcome min_degree{"spanning-star-min-degree-one", true, "", {}};
    CriterionOutcome induced{"induced-star-non-isolated", true, "", {}};
    CriterionOutcome convergence{"better-response-convergence", true, "", {}};

    constexpr int kMaxListedViolations = 25;
    std::int64_t equilibria = 0, violations = 0, violations_with_isolated = 0;
    std::int64_t min_degree_checked = 0, min_degree_bad = 0;
    std::int64_t induced_checked = 0, induced_bad = 0;

    auto record_equilibrium = [&](const Graph& g, const std::string& source) {
        ++equilibria;
        const bool star = has_spanning_star(g);
        const bool isolated = g.min_degree() == 0 && g.vertex_count() > 0;
        if (!star) {
            ++violations;
            if (isolated) ++violations_with_isolated;
            if (violations <= kMaxListedViolations)
                exhaustive.instances.push_back(
                    {source, false, describe_graph(g) +
                                        (isolated ? " (has isolated vertices)" : " (NO isolated vertices)")});
        }
        ++induced_checked;
        if (!has_spanning_star_on_non_isolated(g)) ++induced_bad;
        if (!isolated) {
            ++min_degree_checked;
            if (!star) ++min_degree_bad;
        }
    };

    for (int n = 1; n <= p.star_exhaustive_max_n; ++n) {
        std::int64_t before = violations;
        std::int64_t eq_before = equilibria;
        for_each_labeled_graph(n, [&](const Graph& g) {
            if (check_local_equilibrium(g).is_equilibrium)
                record_equilibrium(g, "exhaustive-n" + std::to_string(n));
        });
        exhaustive.instances.push_back(
            {"exhaustive-n" + std::to_string(n), violations == before,
             std::to_string(equilibria - eq_before) + " equilibria, " +
                 std::to_string(violations - before) + " without a spanning star"});
    }
    const std::int64_t exhaustive_violations = violations;

    Rng root(p.seed);
    int absorbed = 0;
    for (int i = 0; i < p.br_runs; ++i) {
        Rng rng = root.split(400 + static_cast<std::uint64_t>(i));
        const int n = 5 + i % std::max(1, p.br_max_n - 4);
        const double extra = std::vector<double>{0.05, 0.15, 0.3}[i % 3];
        const Graph g0 = random_connected_graph(n, extra, rng);

        DynamicsConfig cfg;
        cfg.mode = DynamicsMode::FullKnowledge;
        cfg.policy = i % 3 == 0   ? SearchPolicy::Best
                     : i % 3 == 1 ? SearchPolicy::First
                                  : SearchPolicy::Random;
        cfg.seed = splitmix64(p.seed ^ (0x5200 + static_cast<std::uint64_t>(i)));
        const DynamicsTrace trace = run_better_response(g0, cfg);
        const std::string id = "run-" + std::to_string(i);

        // Convergence accounting: absorbed, equilibrium terminal, move count
        // within the potential range, monotone potential column.
        const std::int64_t phi0 = potential(trace.initial);
        const std::int64_t phi1 = potential(trace.final_graph);
        const std::int64_t cap =
            static_cast<std::int64_t>(n) * (n - 1) * (n - 1) / 2;
        bool monotone = true;
        std::int64_t prev = phi0;
        for (const DynamicsStep& s : trace.steps) {
            if (s.move ? s.potential <= prev : s.potential != prev) monotone = false;
            prev = s.potential;
        }
        const bool terminal_eq = check_local_equilibrium(trace.final_graph).is_equilibrium;
        const bool ok = trace.status == RunStatus::Absorbed && terminal_eq &&
                        trace.applied_moves <= phi1 - phi0 && phi1 - phi0 <= cap && monotone &&
                        replay_trace(trace) == trace.final_graph;
        if (ok) ++absorbed;
        convergence.instances.push_back(
            {id, ok,
             "n=" + std::to_string(n) + " moves=" + std::to_string(trace.applied_moves) +
                 " potential " + std::to_string(phi0) + "->" + std::to_string(phi1)});
        if (!ok) convergence.pass = false;

        const bool star = has_spanning_star(trace.final_graph);
        if (terminal_eq) record_equilibrium(trace.final_graph, id);
        dynamics_star.instances.push_back(
            {id, star,
             star ? "spanning star"
                  : "no spanning star; min degree " +
                        std::to_string(trace.final_graph.min_degree())});
        if (!star) dynamics_star.pass = false;
    }

    exhaustive.pass = exhaustive_violations == 0;
    exhaustive.summary =
        std::to_string(exhaustive_violations) + " equilibria without a spanning star (" +
        std::to_string(violations_with_isolated) + "/" + std::to_string(violations) +
        " total violations contain isolated vertices)";
    dynamics_star.summary =
        dynamics_star.pass
            ? "every terminal graph has a spanning star"
            : "terminal graphs without a spanning star exist (isolated vertices arise mid-run)";
    min_degree.pass = min_degree_bad == 0;
    min_degree.summary = std::to_string(min_degree_checked) +
                         " equilibria with min degree >= 1, " + std::to_string(min_degree_bad) +
                         " without a spanning star";
    induced.pass = induced_bad == 0;
    induced.summary = std::to_string(induced_checked) + " equilibria, " +
                      std::to_string(induced_bad) +
                      " where no vertex spans the non-isolated set";
    convergence.summary = std::to_string(absorbed) + "/" + std::to_string(p.br_runs) +
                          " runs absorbed with consistent potential accounting";

    report.criteria.push_back(std::move(exhaustive));
    report.criteria.push_back(std::move(dynamics_star));
    report.criteria.push_back(std::move(min_degree));
    report.criteria.push_back(std::move(induced));
    report.criteria.push_back(std::move(convergence));
    return report;
}

// ---------------------------------------------------------------------------
// limited-query-convergence

ExperimentReport run_limited_query_convergence(const ExperimentParams& p) {
    ExperimentReport report;
    report.suite = "limited-query-convergence";
    report.seed = p.seed;
    add_param(report, "lq_n", std::to_string(p.lq_n));
    add_param(report, "lq_runs_per_budget", std::to_string(p.lq_runs_per_budget));

    Rng root(p.seed);
    const int n = p.lq_n;
    const std::int64_t window =
        static_cast<std::int64_t>(n) * n * n;  // the stopping rule's default
    CriterionOutcome stopping{"stopping-rule-soundness", true, "", {}};
    int firings = 0, sound_firings = 0;

    for (int c : p.lq_budgets) {
        CriterionOutcome outcome;
        outcome.name = "limited-query-c" + std::to_string(c);
        const double n5 = static_cast<double>(n) * n * n * n * n;
        const std::int64_t mean_bound = static_cast<std::int64_t>(n5 / (2.0 * c));
        const std::int64_t hard_cap = 10 * mean_bound;

        std::vector<DynamicsTrace> traces;
        traces.reserve(static_cast<std::size_t>(p.lq_runs_per_budget));
        bool all_within_cap = true;
        for (int i = 0; i < p.lq_runs_per_budget; ++i) {
            Rng rng = root.split(500 + static_cast<std::uint64_t>(c) * 1000 +
                                 static_cast<std::uint64_t>(i));
            const Graph g0 = random_connected_graph(n, 0.2, rng);

            DynamicsConfig cfg;
            cfg.mode = DynamicsMode::LimitedQuery;
            cfg.query_budget = c;
            cfg.seed = splitmix64(p.seed ^ (static_cast<std::uint64_t>(c) * 100000 +
                                            static_cast<std::uint64_t>(i)));
            cfg.silence_window = window;
            cfg.step_limit = hard_cap + 2 * window;
            DynamicsTrace trace = run_limited_query(g0, cfg);

            const bool within =
                trace.absorption_step >= 0 && trace.absorption_step <= hard_cap;
            if (!within) all_within_cap = false;
            outcome.instances.push_back(
                {"c" + std::to_string(c) + "-run-" + std::to_string(i), within,
                 "absorbed at step " + std::to_string(trace.absorption_step) + " of " +
                     std::to_string(trace.steps.size()) + " (" +
                     run_status_name(trace.status) + ")"});

            if (trace.status == RunStatus::SilenceDetected) {
                ++firings;
                const bool sound = check_local_equilibrium(trace.final_graph).is_equilibrium;
                if (sound) ++sound_firings;
                else
                    stopping.instances.push_back(
                        {"c" + std::to_string(c) + "-run-" + std::to_string(i), false,
                         "silence fired away from equilibrium; replay with config seed " +
                             std::to_string(cfg.seed)});
            }

            trace.steps.clear();  // stats below only need the counters
            trace.steps.shrink_to_fit();
            traces.push_back(std::move(trace));
        }

        const AbsorptionStats stats = absorption_statistics(traces);
        const bool ok = all_within_cap && stats.all_absorbed && stats.mean_steps <= stats.bound;
        outcome.pass = ok;
        std::ostringstream summary;
        summary << stats.absorbed << "/" << stats.runs << " absorbed; mean steps "
                << stats.mean_steps << " <= bound " << stats.bound << "; max "
                << stats.max_steps << " (cap " << hard_cap << ")";
        outcome.summary = summary.str();
        report.criteria.push_back(std::move(outcome));
    }

    stopping.pass = firings > 0 && sound_firings * 100 >= firings * 99;
    stopping.summary = std::to_string(sound_firings) + "/" + std::to_string(firings) +
                       " silence firings were at a local equilibrium (window " +
                       std::to_string(window) + ")";
    stopping.instances.push_back({"aggregate", stopping.pass, stopping.summary});
    report.criteria.push_back(std::move(stopping));
    return report;
}

}  // namespace

ExperimentReport run_experiment(const std::string& suite, const ExperimentParams& params) {
    const auto start = std::chrono::steady_clock::now();
    ExperimentReport report;
    if (suite == "potential-exactness") report = run_potential_exactness(params);
    else if (suite == "sse-structure") report = run_sse_structure(params);
    else if (suite == "local-equilibrium-star") report = run_local_equilibrium_star(params);
    else if (suite == "limited-query-convergence") report = run_limited_query_convergence(params);
    else if (suite == "bounds-validation") report = run_bounds_validation(params);
    else throw BadSpec("unknown experiment suite: " + suite);
    report.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<std::string> experiment_suite_names() {
    return {"potential-exactness", "sse-structure", "local-equilibrium-star",
            "limited-query-convergence", "bounds-validation"};
}

}  // namespace swapnet
