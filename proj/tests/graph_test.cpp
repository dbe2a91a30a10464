#include <algorithm>
#include <stdexcept>

#include "doctest.h"
#include "oracles.hpp"
#include "swapnet/enumerate.hpp"
#include "swapnet/generators.hpp"
#include "swapnet/graph.hpp"
#include "swapnet/rng.hpp"

using namespace swapnet;

TEST_CASE("graph construction rejects self-loops, duplicates, bad ids") {
    Graph g(4);
    g.add_edge(0, 1);
    CHECK_THROWS_AS(g.add_edge(2, 2), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::out_of_range);
    CHECK_THROWS_AS(g.remove_edge(2, 3), std::invalid_argument);
    CHECK(g.edge_count() == 1);
    CHECK(g.has_edge(1, 0));
    CHECK_FALSE(g.has_edge(2, 3));
}

TEST_CASE("neighbor lists stay sorted and degree sum counts edges twice") {
    Graph g(5, {{0, 3}, {0, 1}, {2, 0}, {1, 4}});
    CHECK(g.neighbors(0) == std::vector<int>{1, 2, 3});
    CHECK(g.non_neighbors(0) == std::vector<int>{4});
    CHECK(g.non_neighbors(4) == std::vector<int>{0, 2, 3});
    int degree_sum = 0;
    for (int v = 0; v < 5; ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 2 * g.edge_count());
}

TEST_CASE("robust degree ignores pendant neighbors") {
    const Graph star = generate({GraphFamily::Star, 5});
    CHECK(star.robust_degree(0) == 0);  // all leaves have degree 1

    const Graph c4 = generate({GraphFamily::Cycle, 4});
    for (int v = 0; v < 4; ++v) CHECK(c4.robust_degree(v) == 2);

    const Graph path = generate({GraphFamily::Path, 4});
    CHECK(path.robust_degree(1) == 1);  // only the inner neighbor qualifies
    CHECK(path.robust_neighbors(1) == std::vector<int>{2});
}

TEST_CASE("apply_swap rewires exactly one incident edge") {
    const Graph c4 = generate({GraphFamily::Cycle, 4});
    const Graph after = c4.apply_swap({0, 1, 2});
    CHECK(after.edges() ==
          std::vector<std::pair<int, int>>{{0, 2}, {0, 3}, {1, 2}, {2, 3}});
    CHECK(after.degree(0) == c4.degree(0));
    CHECK(after.degree(1) == c4.degree(1) - 1);
    CHECK(after.degree(2) == c4.degree(2) + 1);
    CHECK(after.degree(3) == c4.degree(3));

    const Graph star = generate({GraphFamily::Star, 5});
    const Graph moved = star.apply_swap({1, 0, 2});
    CHECK(moved.degree(0) == 3);
    CHECK(moved.degree(2) == 2);
    CHECK(moved.degree(1) == 1);
}

TEST_CASE("apply_swap rejects illegal moves") {
    const Graph c4 = generate({GraphFamily::Cycle, 4});
    CHECK_THROWS_AS(c4.apply_swap({0, 1, 3}), InvalidSwap);   // added already adjacent
    CHECK_THROWS_AS(c4.apply_swap({0, 2, 1}), InvalidSwap);   // removed not a neighbor
    CHECK_THROWS_AS(c4.apply_swap({0, 1, 0}), InvalidSwap);   // added == player
    CHECK_THROWS_AS(c4.apply_swap({0, 1, 1}), InvalidSwap);   // added == removed
    CHECK_THROWS_AS(c4.apply_swap({0, 1, 7}), InvalidSwap);   // out of range
    CHECK_FALSE(c4.legal_swap({0, 1, 3}));
    CHECK(c4.legal_swap({0, 1, 2}));
}

TEST_CASE("legal swaps shift the degree multiset by one unit") {
    Rng rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 4 + static_cast<int>(rng.next_below(6));
        const Graph g = random_connected_graph(n, 0.3, rng);
        for (int v = 0; v < n; ++v) {
            if (g.degree(v) == 0 || g.degree(v) == n - 1) continue;
            const int removed = g.neighbors(v)[rng.next_below(g.neighbors(v).size())];
            const auto targets = g.non_neighbors(v);
            const int added = targets[rng.next_below(targets.size())];
            const Graph after = g.apply_swap({v, removed, added});
            for (int u = 0; u < n; ++u) {
                const int expected = g.degree(u) - (u == removed) + (u == added);
                CHECK(after.degree(u) == expected);
            }
        }
    }
}

TEST_CASE("graph equality is labeled edge-set equality") {
    const Graph a(3, {{0, 1}, {1, 2}});
    const Graph b(3, {{1, 2}, {0, 1}});
    const Graph c(3, {{0, 2}, {1, 2}});  // isomorphic to a, different labels
    CHECK(a == b);
    CHECK_FALSE(a == c);
}

TEST_CASE("labeled enumeration visits the expected counts") {
    int count = 0;
    int connected = 0;
    for_each_labeled_graph(4, [&](const Graph& g) {
        ++count;
        if (is_connected(g)) ++connected;
    });
    CHECK(count == 64);
    CHECK(connected == 38);  // known count of connected labeled graphs on 4 vertices
}
