#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "swapnet/graph.hpp"
#include "swapnet/rational.hpp"

namespace swapnet {

// For a vertex pair (u, v), counts[c] is the number of vertices z outside
// {u, v} whose distances to u and to v differ by exactly c. On a connected
// graph the counts total n - 2.
struct DifferenceHistogram {
    int u = 0;
    int v = 0;
    std::map<int, int> counts;

    // Sum of c * counts[c].
    std::int64_t weighted_sum() const;
};

// Requires a connected graph (throws DisconnectedGraph) and u != v.
DifferenceHistogram difference_histogram(const Graph& g, int u, int v);

// One eligible pair of the distance-difference characterization: the
// weighted difference sum must stay below (d'+1)/(d'-1) * n, where d' is
// the smaller robust degree of the pair.
struct PairDifferenceBound {
    int u = 0;
    int v = 0;
    std::int64_t lhs = 0;      // sum of c * |{z : difference c}|
    int delta_prime = 0;       // min robust degree of the pair
    Rational rhs;              // (delta'+1)/(delta'-1) * n
    Rational mean_difference;  // lhs / (n-2)
    bool satisfied = false;
};

// Eligible pairs are non-adjacent with both robust degrees >= 2; everything
// else is counted as skipped (the ratio is undefined at delta' = 1).
// Vacuously satisfied when no pair is eligible.
struct DifferenceBoundReport {
    std::vector<PairDifferenceBound> pairs;
    int pairs_skipped = 0;
    bool all_satisfied = true;
    std::optional<Rational> worst_slack;  // min over pairs of rhs - lhs
};

DifferenceBoundReport check_difference_bound(const Graph& g);

// Mean absolute distance difference over a uniform third vertex, for every
// pair with both degrees >= 2; must be at most 3.
struct PairMeanDifference {
    int u = 0;
    int v = 0;
    Rational mean;
    bool satisfied = false;
};

struct MeanDifferenceReport {
    std::vector<PairMeanDifference> pairs;
    bool all_satisfied = true;
    std::optional<Rational> max_mean;
};

MeanDifferenceReport check_mean_difference(const Graph& g);

// For every ordered pair (u, v) with deg(u) >= 2 and deg(v) >= 2, at least
// two distinct neighbors of u must start a path to v; a neighbor x starts
// one iff x == v or v is reachable from x once u is deleted. Vacuously
// satisfied when no pair qualifies.
struct FirstEdgeRedundancyReport {
    int pairs_checked = 0;
    std::vector<std::pair<int, int>> violations;
    bool all_satisfied = true;
};

FirstEdgeRedundancyReport check_first_edge_redundancy(const Graph& g);

// True iff no vertex has degree exactly 2, or the diameter is at most 9.
bool check_degree2_diameter(const Graph& g);

// 6n / max_vicinity_size(k) + 2 + 4k, exact. Requires connectivity, k >= 1.
Rational vicinity_diameter_bound(const Graph& g, int k);
bool vicinity_bound_holds(const Graph& g, int k);

// 6n^2 / (e + n/2) + 4, exact. Requires connectivity and min degree >= 2
// (throws MinDegreeTooLow otherwise).
Rational density_diameter_bound(const Graph& g);
bool density_bound_holds(const Graph& g);

// Everything the analyze interface reports for one connected graph.
struct VicinityBoundEntry {
    int k = 0;
    int max_vicinity = 0;
    Rational bound;
    bool satisfied = false;
};

struct DensityBoundEntry {
    Rational bound;
    bool satisfied = false;
};

struct AnalyzeReport {
    bool sse = false;
    std::int64_t diam = 0;
    DifferenceBoundReport difference_bound;
    MeanDifferenceReport mean_difference;
    FirstEdgeRedundancyReport first_edge;
    bool degree2_diameter = false;
    std::vector<VicinityBoundEntry> vicinity;
    std::optional<DensityBoundEntry> density;  // empty when min degree < 2
};

AnalyzeReport analyze_graph(const Graph& g, const std::vector<int>& ks);

}  // namespace swapnet
