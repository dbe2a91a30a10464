#include <map>

#include "doctest.h"
#include "oracles.hpp"
#include "swapnet/generators.hpp"
#include "swapnet/structural.hpp"
#include "swapnet/sum_swap.hpp"

using namespace swapnet;
namespace oracle = swapnet::testing;

TEST_CASE("rational arithmetic is exact and normalized") {
    CHECK(Rational(6, 4) == Rational(3, 2));
    CHECK(Rational(-6, -4) == Rational(3, 2));
    CHECK(Rational(6, -4) == Rational(-3, 2));
    CHECK(Rational(3, 2) < Rational(5, 3));
    CHECK(Rational(10, 5) == Rational(2));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(12, 1) - Rational(5, 2) == Rational(19, 2));
    CHECK(Rational(7, 3).str() == "7/3");
    CHECK(Rational(4, 2).str() == "2");
    CHECK_THROWS_AS(Rational(1, 0), std::invalid_argument);
}

TEST_CASE("difference histograms on frozen examples") {
    const Graph k4 = generate({GraphFamily::Complete, 4});
    CHECK(difference_histogram(k4, 0, 1).counts == std::map<int, int>{{0, 2}});

    const Graph c5 = generate({GraphFamily::Cycle, 5});
    CHECK(difference_histogram(c5, 0, 2).counts == std::map<int, int>{{0, 1}, {1, 2}});

    const Graph star4 = generate({GraphFamily::Star, 4});
    CHECK(difference_histogram(star4, 0, 1).counts == std::map<int, int>{{1, 2}});

    CHECK_THROWS_AS(difference_histogram(Graph(4, {{0, 1}}), 0, 1), DisconnectedGraph);
    CHECK_THROWS_AS(difference_histogram(k4, 2, 2), std::invalid_argument);
}

TEST_CASE("difference histogram symmetry and total count") {
    Rng rng(42);
    int done = 0;
    while (done < 60) {
        const int n = 3 + static_cast<int>(rng.next_below(9));
        const Graph g = random_connected_graph(n, 0.3, rng);
        const int u = static_cast<int>(rng.next_below(n));
        const int v = (u + 1 + static_cast<int>(rng.next_below(n - 1))) % n;
        const DifferenceHistogram huv = difference_histogram(g, u, v);
        const DifferenceHistogram hvu = difference_histogram(g, v, u);
        CHECK(huv.counts == hvu.counts);
        int total = 0;
        std::int64_t weighted = 0;
        for (const auto& [c, count] : huv.counts) {
            total += count;
            weighted += static_cast<std::int64_t>(c) * count;
        }
        CHECK(total == n - 2);
        CHECK(huv.weighted_sum() == weighted);
        ++done;
    }
}

TEST_CASE("difference-sum bound report on fixed shapes") {
    const Graph k4 = generate({GraphFamily::Complete, 4});
    const DifferenceBoundReport rk = check_difference_bound(k4);
    CHECK(rk.pairs.empty());
    CHECK(rk.pairs_skipped == 6);
    CHECK(rk.all_satisfied);  // vacuous

    const Graph c4 = generate({GraphFamily::Cycle, 4});
    const DifferenceBoundReport rc4 = check_difference_bound(c4);
    REQUIRE(rc4.pairs.size() == 2);  // (0,2) and (1,3)
    for (const PairDifferenceBound& pair : rc4.pairs) {
        CHECK(pair.lhs == 0);
        CHECK(pair.delta_prime == 2);
        CHECK(pair.rhs == Rational(12));
        CHECK(pair.satisfied);
    }
    CHECK(rc4.worst_slack == Rational(12));

    const Graph c5 = generate({GraphFamily::Cycle, 5});
    const DifferenceBoundReport rc5 = check_difference_bound(c5);
    REQUIRE(rc5.pairs.size() == 5);
    for (const PairDifferenceBound& pair : rc5.pairs) {
        CHECK(pair.lhs == 2);
        CHECK(pair.rhs == Rational(15));
        CHECK(pair.mean_difference == Rational(2, 3));
        CHECK(pair.satisfied);
    }

    // star pairs all have robust degree <= 1 on one side: everything skipped
    const DifferenceBoundReport rs = check_difference_bound(generate({GraphFamily::Star, 6}));
    CHECK(rs.pairs.empty());
    CHECK(rs.all_satisfied);
}

TEST_CASE("mean distance difference report") {
    const Graph k5 = generate({GraphFamily::Complete, 5});
    const MeanDifferenceReport rk = check_mean_difference(k5);
    CHECK(rk.pairs.size() == 10);
    CHECK(rk.max_mean == Rational(0));
    CHECK(rk.all_satisfied);

    const Graph c4 = generate({GraphFamily::Cycle, 4});
    const MeanDifferenceReport rc = check_mean_difference(c4);
    REQUIRE(rc.pairs.size() == 6);
    for (const PairMeanDifference& pair : rc.pairs) {
        const bool opposite = (pair.u + 2) % 4 == pair.v || (pair.v + 2) % 4 == pair.u;
        CHECK(pair.mean == (opposite ? Rational(0) : Rational(1)));
    }
    CHECK(rc.max_mean == Rational(1));

    // only the center of a star has degree >= 2: no pairs at all
    CHECK(check_mean_difference(generate({GraphFamily::Star, 5})).pairs.empty());
}

TEST_CASE("first-edge redundancy on fixed shapes and against the path oracle") {
    const Graph c4 = generate({GraphFamily::Cycle, 4});
    const FirstEdgeRedundancyReport rc = check_first_edge_redundancy(c4);
    CHECK(rc.pairs_checked == 12);
    CHECK(rc.violations.empty());

    const FirstEdgeRedundancyReport rs =
        check_first_edge_redundancy(generate({GraphFamily::Star, 6}));
    CHECK(rs.pairs_checked == 0);  // vacuous
    CHECK(rs.all_satisfied);

    // two triangles joined by a bridge: every pair from a bridge endpoint
    // into the far triangle has a single usable first edge (the bridge)
    const Graph barbell = generate({GraphFamily::Barbell, 0, 0, 3, 3, 1});
    const FirstEdgeRedundancyReport rb = check_first_edge_redundancy(barbell);
    CHECK_FALSE(rb.all_satisfied);
    CHECK(rb.violations == std::vector<std::pair<int, int>>{
                               {2, 3}, {2, 4}, {2, 5}, {3, 0}, {3, 1}, {3, 2}});
    CHECK(oracle::oracle_first_edge_count(barbell, 2, 3) == 1);
    CHECK(oracle::oracle_first_edge_count(barbell, 2, 4) == 1);
    CHECK(oracle::oracle_first_edge_count(barbell, 3, 0) == 1);
    // from a non-endpoint the two triangle edges give two disjoint starts
    CHECK(oracle::oracle_first_edge_count(barbell, 0, 3) == 2);
    CHECK(oracle::oracle_first_edge_count(barbell, 4, 0) == 2);
    CHECK_FALSE(check_sse(barbell).is_equilibrium);
}

TEST_CASE("first-edge redundancy matches the path-enumeration oracle on random graphs") {
    Rng rng(314);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 4 + static_cast<int>(rng.next_below(4));
        const Graph g = random_connected_graph(n, 0.25, rng);
        const FirstEdgeRedundancyReport report = check_first_edge_redundancy(g);
        for (int u = 0; u < n; ++u) {
            for (int v = 0; v < n; ++v) {
                if (u == v || g.degree(u) < 2 || g.degree(v) < 2) continue;
                const bool expected = oracle::oracle_first_edge_count(g, u, v) >= 2;
                const bool violated =
                    std::find(report.violations.begin(), report.violations.end(),
                              std::make_pair(u, v)) != report.violations.end();
                CHECK(violated == !expected);
            }
        }
    }
}

TEST_CASE("degree-2 diameter check") {
    CHECK(check_degree2_diameter(generate({GraphFamily::Cycle, 4})));
    CHECK(check_degree2_diameter(generate({GraphFamily::Complete, 5})));  // no degree-2 vertex
    CHECK_FALSE(check_degree2_diameter(generate({GraphFamily::Cycle, 25})));  // diam 12
}

TEST_CASE("vicinity diameter bound values") {
    const Graph c4 = generate({GraphFamily::Cycle, 4});
    CHECK(vicinity_diameter_bound(c4, 1) == Rational(14));
    CHECK(vicinity_bound_holds(c4, 1));

    const Graph star10 = generate({GraphFamily::Star, 10});
    CHECK(vicinity_diameter_bound(star10, 1) == Rational(12));
    CHECK(vicinity_bound_holds(star10, 1));

    for (int n : {4, 9}) {
        const Graph kn = generate({GraphFamily::Complete, n});
        CHECK(vicinity_diameter_bound(kn, 1) == Rational(12));
        CHECK(vicinity_bound_holds(kn, 1));
    }
    CHECK_THROWS_AS(vicinity_diameter_bound(c4, 0), std::invalid_argument);
}

TEST_CASE("density diameter bound values") {
    CHECK(density_diameter_bound(generate({GraphFamily::Complete, 4})) == Rational(16));
    CHECK(density_diameter_bound(generate({GraphFamily::Cycle, 4})) == Rational(20));
    CHECK(density_bound_holds(generate({GraphFamily::Cycle, 4})));
    CHECK_THROWS_AS(density_diameter_bound(generate({GraphFamily::Star, 5})), MinDegreeTooLow);
}

TEST_CASE("all structural checks hold on brute-force certified equilibria up to n=40") {
    std::vector<Graph> corpus;
    for (int n : {5, 17, 40}) corpus.push_back(generate({GraphFamily::Star, n}));
    for (int n : {4, 17, 40}) corpus.push_back(generate({GraphFamily::Complete, n}));
    corpus.push_back(generate({GraphFamily::Cycle, 4}));
    corpus.push_back(generate({GraphFamily::Cycle, 5}));

    for (const Graph& g : corpus) {
        REQUIRE(check_sse(g).is_equilibrium);
        CHECK(check_difference_bound(g).all_satisfied);
        CHECK(check_mean_difference(g).all_satisfied);
        CHECK(check_first_edge_redundancy(g).all_satisfied);
        CHECK(check_degree2_diameter(g));
        CHECK(vicinity_bound_holds(g, 1));
        CHECK(vicinity_bound_holds(g, 2));
        if (g.min_degree() >= 2) CHECK(density_bound_holds(g));
    }
}

TEST_CASE("analyze_graph aggregates every checker") {
    const AnalyzeReport report = analyze_graph(generate({GraphFamily::Cycle, 4}), {1, 2});
    CHECK(report.sse);
    CHECK(report.diam == 2);
    CHECK(report.difference_bound.all_satisfied);
    CHECK(report.mean_difference.all_satisfied);
    CHECK(report.first_edge.all_satisfied);
    CHECK(report.degree2_diameter);
    REQUIRE(report.vicinity.size() == 2);
    CHECK(report.vicinity[0].bound == Rational(14));
    REQUIRE(report.density.has_value());
    CHECK(report.density->bound == Rational(20));

    const AnalyzeReport star = analyze_graph(generate({GraphFamily::Star, 5}), {1});
    CHECK_FALSE(star.density.has_value());  // min degree 1

    CHECK_THROWS_AS(analyze_graph(Graph(3, {{0, 1}}), {1}), DisconnectedGraph);
}
