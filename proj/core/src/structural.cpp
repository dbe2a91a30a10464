#include "swapnet/structural.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

#include "swapnet/distance.hpp"
#include "swapnet/sum_swap.hpp"

namespace swapnet {

namespace {

void require_connected(const Graph& g, const char* op) {
    if (!is_connected(g)) throw DisconnectedGraph(std::string(op) + ": graph is disconnected");
}

}  // namespace

std::int64_t DifferenceHistogram::weighted_sum() const {
    std::int64_t total = 0;
    for (const auto& [c, count] : counts) total += static_cast<std::int64_t>(c) * count;
    return total;
}

DifferenceHistogram difference_histogram(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("difference_histogram: u == v");
    require_connected(g, "difference_histogram");
    const std::vector<int> du = bfs_distances(g, u);
    const std::vector<int> dv = bfs_distances(g, v);
    DifferenceHistogram h{u, v, {}};
    for (int z = 0; z < g.vertex_count(); ++z) {
        if (z == u || z == v) continue;
        ++h.counts[std::abs(du[z] - dv[z])];
    }
    return h;
}

DifferenceBoundReport check_difference_bound(const Graph& g) {
    require_connected(g, "check_difference_bound");
    const int n = g.vertex_count();
    const DistanceMatrix dist = all_pairs_distances(g);
    std::vector<int> robust(static_cast<std::size_t>(n));
    for (int v = 0; v < n; ++v) robust[v] = g.robust_degree(v);

    DifferenceBoundReport report;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            const int delta_prime = std::min(robust[u], robust[v]);
            if (g.has_edge(u, v) || delta_prime < 2) {
                ++report.pairs_skipped;
                continue;
            }
            std::int64_t lhs = 0;
            for (int z = 0; z < n; ++z) {
                if (z == u || z == v) continue;
                lhs += std::abs(dist.at(u, z) - dist.at(v, z));
            }
            PairDifferenceBound entry;
            entry.u = u;
            entry.v = v;
            entry.lhs = lhs;
            entry.delta_prime = delta_prime;
            entry.rhs = Rational(static_cast<std::int64_t>(delta_prime + 1) * n, delta_prime - 1);
            entry.mean_difference = Rational(lhs, n - 2);
            entry.satisfied = Rational(lhs) <= entry.rhs;
            const Rational slack = entry.rhs - Rational(lhs);
            if (!report.worst_slack || slack < *report.worst_slack) report.worst_slack = slack;
            if (!entry.satisfied) report.all_satisfied = false;
            report.pairs.push_back(entry);
        }
    }
    return report;
}

MeanDifferenceReport check_mean_difference(const Graph& g) {
    require_connected(g, "check_mean_difference");
    const int n = g.vertex_count();
    const DistanceMatrix dist = all_pairs_distances(g);
    MeanDifferenceReport report;
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) < 2) continue;
        for (int v = u + 1; v < n; ++v) {
            if (g.degree(v) < 2) continue;
            std::int64_t lhs = 0;
            for (int z = 0; z < n; ++z) {
                if (z == u || z == v) continue;
                lhs += std::abs(dist.at(u, z) - dist.at(v, z));
            }
            PairMeanDifference entry;
            entry.u = u;
            entry.v = v;
            entry.mean = Rational(lhs, n - 2);  // both degrees >= 2 forces n >= 3
            entry.satisfied = entry.mean <= Rational(3);
            if (!report.max_mean || entry.mean > *report.max_mean) report.max_mean = entry.mean;
            if (!entry.satisfied) report.all_satisfied = false;
            report.pairs.push_back(entry);
        }
    }
    return report;
}

FirstEdgeRedundancyReport check_first_edge_redundancy(const Graph& g) {
    require_connected(g, "check_first_edge_redundancy");
    const int n = g.vertex_count();
    FirstEdgeRedundancyReport report;
    std::vector<int> component(static_cast<std::size_t>(n));
    std::vector<int> order;
    for (int u = 0; u < n; ++u) {
        if (g.degree(u) < 2) continue;
        // Label the components of g with u deleted.
        std::fill(component.begin(), component.end(), -1);
        component[u] = -2;
        int label = 0;
        for (int start = 0; start < n; ++start) {
            if (start == u || component[start] != -1) continue;
            order.clear();
            order.push_back(start);
            component[start] = label;
            for (std::size_t head = 0; head < order.size(); ++head) {
                for (int w : g.neighbors(order[head])) {
                    if (w == u || component[w] != -1) continue;
                    component[w] = label;
                    order.push_back(w);
                }
            }
            ++label;
        }
        for (int v = 0; v < n; ++v) {
            if (v == u || g.degree(v) < 2) continue;
            int starts = 0;
            for (int x : g.neighbors(u))
                if (x == v || component[x] == component[v]) ++starts;
            ++report.pairs_checked;
            if (starts < 2) {
                report.violations.emplace_back(u, v);
                report.all_satisfied = false;
            }
        }
    }
    return report;
}

bool check_degree2_diameter(const Graph& g) {
    require_connected(g, "check_degree2_diameter");
    bool has_degree2 = false;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) == 2) {
            has_degree2 = true;
            break;
        }
    }
    if (!has_degree2) return true;
    return diameter(g) <= ExtInt(9);
}

Rational vicinity_diameter_bound(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("vicinity_diameter_bound: k must be >= 1");
    require_connected(g, "vicinity_diameter_bound");
    const std::int64_t n = g.vertex_count();
    const std::int64_t dk = max_vicinity_size(g, k);
    return Rational(6 * n + (2 + 4 * static_cast<std::int64_t>(k)) * dk, dk);
}

bool vicinity_bound_holds(const Graph& g, int k) {
    return Rational(diameter(g).value()) <= vicinity_diameter_bound(g, k);
}

Rational density_diameter_bound(const Graph& g) {
    require_connected(g, "density_diameter_bound");
    if (g.min_degree() < 2)
        throw MinDegreeTooLow("density_diameter_bound: minimum degree below 2");
    const std::int64_t n = g.vertex_count();
    const std::int64_t e = g.edge_count();
    // 6n^2/(e + n/2) + 4 with everything over the common denominator 2e + n.
    return Rational(12 * n * n + 4 * (2 * e + n), 2 * e + n);
}

bool density_bound_holds(const Graph& g) {
    return Rational(diameter(g).value()) <= density_diameter_bound(g);
}

AnalyzeReport analyze_graph(const Graph& g, const std::vector<int>& ks) {
    require_connected(g, "analyze_graph");
    AnalyzeReport report;
    report.sse = check_sse(g).is_equilibrium;
    report.diam = diameter(g).value();
    report.difference_bound = check_difference_bound(g);
    report.mean_difference = check_mean_difference(g);
    report.first_edge = check_first_edge_redundancy(g);
    report.degree2_diameter = check_degree2_diameter(g);
    for (int k : ks) {
        VicinityBoundEntry entry;
        entry.k = k;
        entry.max_vicinity = max_vicinity_size(g, k);
        entry.bound = vicinity_diameter_bound(g, k);
        entry.satisfied = Rational(report.diam) <= entry.bound;
        report.vicinity.push_back(entry);
    }
    if (g.min_degree() >= 2) {
        DensityBoundEntry entry;
        entry.bound = density_diameter_bound(g);
        entry.satisfied = Rational(report.diam) <= entry.bound;
        report.density = entry;
    }
    return report;
}

}  // namespace swapnet
