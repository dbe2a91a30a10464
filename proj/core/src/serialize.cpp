#include "swapnet/serialize.hpp"

#include <sstream>

#include "json.hpp"
#include "swapnet/experiments.hpp"

namespace swapnet {

namespace {

using nlohmann::json;

json ext_json(ExtInt x) {
    if (x.is_plus_infinity()) return json("inf");
    if (x.is_minus_infinity()) return json("-inf");
    return json(x.value());
}

json rational_json(const Rational& r) { return json{{"num", r.num()}, {"den", r.den()}}; }

json move_json(const SwapMove& m, json delta) {
    return json{{"player", m.player}, {"removed", m.removed}, {"added", m.added},
                {"delta", std::move(delta)}};
}

}  // namespace

std::string graph_json(const Graph& g) {
    json edges = json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(json::array({u, v}));
    const json doc{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"edges", std::move(edges)}};
    return doc.dump();
}

std::string sse_report_json(const Graph& g, const SseReport& report, bool exhaustive) {
    json costs = json::array();
    for (ExtInt c : report.costs) costs.push_back(ext_json(c));
    json doc{{"n", g.vertex_count()},
             {"m", g.edge_count()},
             {"is_equilibrium", report.is_equilibrium},
             {"witness", report.witness
                             ? move_json(report.witness->move, ext_json(report.witness->delta))
                             : json(nullptr)},
             {"costs", std::move(costs)}};
    if (exhaustive) {
        json all = json::array();
        for (const ScoredSwap& w : report.all_witnesses)
            all.push_back(move_json(w.move, ext_json(w.delta)));
        doc["witnesses"] = std::move(all);
    }
    return doc.dump();
}

std::string local_report_json(const Graph& g, const LocalEquilibriumReport& report) {
    const json doc{
        {"is_equilibrium", report.is_equilibrium},
        {"has_spanning_star", has_spanning_star(g)},
        {"potential", potential(g)},
        {"profits", report.profits},
        {"witness",
         report.witness ? move_json(report.witness->move, json(report.witness->delta))
                        : json(nullptr)}};
    return doc.dump();
}

std::string analyze_report_json(const AnalyzeReport& report) {
    json theorem2 = json::array();
    for (const VicinityBoundEntry& entry : report.vicinity) {
        theorem2.push_back(json{{"k", entry.k},
                                {"delta_k", entry.max_vicinity},
                                {"bound", rational_json(entry.bound)},
                                {"diam", report.diam},
                                {"satisfied", entry.satisfied}});
    }
    const json doc{
        {"sse", report.sse},
        {"theorem1",
         json{{"pairs_checked", static_cast<int>(report.difference_bound.pairs.size())},
              {"pairs_skipped", report.difference_bound.pairs_skipped},
              {"worst_slack", report.difference_bound.worst_slack
                                  ? rational_json(*report.difference_bound.worst_slack)
                                  : json(nullptr)},
              {"satisfied", report.difference_bound.all_satisfied}}},
        {"corollary", json{{"max_meanD", report.mean_difference.max_mean
                                             ? rational_json(*report.mean_difference.max_mean)
                                             : json(nullptr)},
                           {"satisfied", report.mean_difference.all_satisfied}}},
        {"lemma1A", report.first_edge.all_satisfied},
        {"lemma1B", report.degree2_diameter},
        {"theorem2", std::move(theorem2)},
        {"theorem3", report.density ? json{{"bound", rational_json(report.density->bound)},
                                           {"diam", report.diam},
                                           {"satisfied", report.density->satisfied}}
                                    : json("n/a")}};
    return doc.dump();
}

std::string trace_step_jsonl(const DynamicsStep& step) {
    json move(nullptr);
    if (step.move) move = json{{"removed", step.move->removed}, {"added", step.move->added}};
    const json doc{{"t", step.t},
                   {"u", step.u},
                   {"queried", step.queried ? json(*step.queried) : json(nullptr)},
                   {"move", std::move(move)},
                   {"potential", step.potential}};
    return doc.dump();
}

std::string dynamics_summary_json(const DynamicsTrace& trace) {
    const json doc{{"status", run_status_name(trace.status)},
                   {"steps", static_cast<std::int64_t>(trace.steps.size())},
                   {"applied_moves", trace.applied_moves},
                   {"final_potential", potential(trace.final_graph)},
                   {"final_is_equilibrium",
                    check_local_equilibrium(trace.final_graph).is_equilibrium},
                   {"final_has_spanning_star", has_spanning_star(trace.final_graph)},
                   {"absorption_step", trace.absorption_step}};
    return doc.dump();
}

std::string experiment_report_json(const ExperimentReport& report, bool include_timings) {
    json params = json::object();
    for (const auto& [key, value] : report.params) params[key] = value;
    json criteria = json::array();
    for (const CriterionOutcome& c : report.criteria) {
        json instances = json::array();
        for (const InstanceResult& inst : c.instances)
            instances.push_back(json{{"id", inst.id}, {"pass", inst.pass}, {"note", inst.note}});
        criteria.push_back(json{{"name", c.name},
                                {"pass", c.pass},
                                {"summary", c.summary},
                                {"instances", std::move(instances)}});
    }
    json doc{{"suite", report.suite},
             {"seed", report.seed},
             {"params", std::move(params)},
             {"criteria", std::move(criteria)},
             {"all_pass", report.all_pass()}};
    if (include_timings) doc["wall_seconds"] = report.wall_seconds;
    return doc.dump(2);
}

std::string experiment_report_text(const ExperimentReport& report) {
    std::ostringstream out;
    out << "suite " << report.suite << " (seed " << report.seed << ")\n";
    for (const CriterionOutcome& c : report.criteria)
        out << "  [" << (c.pass ? "PASS" : "FAIL") << "] " << c.name << ": " << c.summary << "\n";
    out << (report.all_pass() ? "all criteria passed" : "CRITERION FAILURE") << "\n";
    return out.str();
}

}  // namespace swapnet
