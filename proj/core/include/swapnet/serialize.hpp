#pragma once

#include <string>
#include <vector>

#include "swapnet/dynamics.hpp"
#include "swapnet/graph.hpp"
#include "swapnet/local_cost.hpp"
#include "swapnet/structural.hpp"
#include "swapnet/sum_swap.hpp"

namespace swapnet {

struct ExperimentReport;  // experiments.hpp

// JSON builders for every machine-readable interface. Conventions:
// infinite values serialize as the strings "inf" / "-inf", exact rationals
// as {"den": .., "num": ..}. Object keys are emitted sorted, so identical
// inputs yield byte-identical documents.

std::string graph_json(const Graph& g);

// {n, m, is_equilibrium, witness|null, costs}; adds "witnesses" in
// exhaustive mode.
std::string sse_report_json(const Graph& g, const SseReport& report, bool exhaustive);

// {is_equilibrium, has_spanning_star, potential, profits, witness|null}
std::string local_report_json(const Graph& g, const LocalEquilibriumReport& report);

// {sse, theorem1: {pairs_checked, pairs_skipped, worst_slack}, corollary:
//  {max_meanD}, lemma1A, lemma1B, theorem2: [{k, delta_k, bound, diam}],
//  theorem3: {bound, diam}|"n/a"}
std::string analyze_report_json(const AnalyzeReport& report);

// One line-delimited trace record: {t, u, queried|null, move|null, potential}.
std::string trace_step_jsonl(const DynamicsStep& step);

// {status, steps, applied_moves, final_potential, final_is_equilibrium,
//  final_has_spanning_star} plus absorption_step.
std::string dynamics_summary_json(const DynamicsTrace& trace);

std::string experiment_report_json(const ExperimentReport& report, bool include_timings);
std::string experiment_report_text(const ExperimentReport& report);

}  // namespace swapnet
