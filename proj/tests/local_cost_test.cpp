#include "doctest.h"
#include "swapnet/enumerate.hpp"
#include "swapnet/generators.hpp"
#include "swapnet/local_cost.hpp"

using namespace swapnet;

TEST_CASE("profit on fixed shapes") {
    for (int n : {3, 6, 10}) {
        const Graph kn = generate({GraphFamily::Complete, n});
        for (int u = 0; u < n; ++u)
            CHECK(profit(kn, u) == static_cast<std::int64_t>(n - 1) * (n - 1));
    }
    const Graph star4 = generate({GraphFamily::Star, 4});
    CHECK(profit(star4, 0) == 3);
    CHECK(profit(star4, 1) == 3);

    const Graph p4 = generate({GraphFamily::Path, 4});
    CHECK(profit(p4, 1) == 3);
    CHECK(profit(Graph(3, {{0, 1}}), 2) == 0);  // isolated
}

TEST_CASE("potential on fixed shapes and its identities") {
    CHECK(potential(generate({GraphFamily::Complete, 3})) == 6);
    CHECK(potential(generate({GraphFamily::Star, 4})) == 6);
    CHECK(potential(generate({GraphFamily::Path, 4})) == 5);
    CHECK(potential(Graph(5)) == 0);

    Rng rng(17);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 2 + static_cast<int>(rng.next_below(12));
        const Graph g = generate({GraphFamily::Gnp, n, rng.uniform01(), 0, 0, 1, rng.next()});
        std::int64_t profit_total = 0, square_sum = 0;
        for (int u = 0; u < n; ++u) {
            profit_total += profit(g, u);
            square_sum += static_cast<std::int64_t>(g.degree(u)) * g.degree(u);
        }
        const std::int64_t phi = potential(g);
        CHECK(profit_total == 2 * phi);
        CHECK(square_sum == 2 * phi);
        CHECK(phi >= 0);
        CHECK(phi <= static_cast<std::int64_t>(n) * (n - 1) * (n - 1) / 2);
    }
}

TEST_CASE("profit_delta closed form") {
    const Graph c4 = generate({GraphFamily::Cycle, 4});
    CHECK(profit_delta(c4, {0, 1, 2}) == 1);  // deg(2)+1-deg(1) = 2+1-2

    // removing a degree-1 neighbor for a degree-1 target gains exactly 1
    const Graph p4 = generate({GraphFamily::Path, 4});
    CHECK(profit_delta(p4, {1, 0, 3}) == 1);
    // removing a degree-d neighbor for a degree-(d-1) target is neutral
    CHECK(profit_delta(p4, {0, 1, 3}) == 0);

    // on a path of three, the endpoint's only move is neutral: no deviation
    const Graph p3 = generate({GraphFamily::Path, 3});
    CHECK(profit_delta(p3, {0, 1, 2}) == 0);
    CHECK_FALSE(find_profitable_swap(p3, 0).has_value());

    CHECK_THROWS_AS(profit_delta(c4, {0, 1, 3}), InvalidSwap);
}

TEST_CASE("exact potential identity, exhaustively to n=5 and on random pairs") {
    for (int n = 1; n <= 5; ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) {
            const std::int64_t before = potential(g);
            for (int v = 0; v < n; ++v) {
                for (const SwapMove& m : enumerate_swaps(g, v)) {
                    REQUIRE(potential(g.apply_swap(m)) - before == profit_delta(g, m));
                }
            }
        });
    }

    Rng rng(29);
    int checked = 0;
    while (checked < 10000) {
        const int n = 8 + static_cast<int>(rng.next_below(20));
        const Graph g = generate({GraphFamily::Gnp, n, 0.2 + 0.6 * rng.uniform01(), 0, 0, 1,
                                  rng.next()});
        for (int tries = 0; tries < 8; ++tries) {
            const int v = static_cast<int>(rng.next_below(n));
            if (g.degree(v) == 0 || g.degree(v) == n - 1) continue;
            const int removed = g.neighbors(v)[rng.next_below(g.neighbors(v).size())];
            const auto targets = g.non_neighbors(v);
            const int added = targets[rng.next_below(targets.size())];
            const SwapMove m{v, removed, added};
            REQUIRE(potential(g.apply_swap(m)) - potential(g) == profit_delta(g, m));
            ++checked;
        }
    }
}

TEST_CASE("find_profitable_swap policies and tie rules") {
    const Graph c4 = generate({GraphFamily::Cycle, 4});
    const auto first = find_profitable_swap(c4, 0, SearchPolicy::First);
    REQUIRE(first.has_value());
    CHECK(first->move == SwapMove{0, 1, 2});
    CHECK(first->delta == 1);
    for (int u = 0; u < 4; ++u) {
        const auto found = find_profitable_swap(c4, u);
        REQUIRE(found.has_value());  // the opposite vertex has equal degree
        CHECK(found->delta == 1);
    }

    const auto best = find_profitable_swap(c4, 0, SearchPolicy::Best);
    REQUIRE(best.has_value());
    CHECK(best->move == SwapMove{0, 1, 2});  // ties keep enumeration order

    const Graph star6 = generate({GraphFamily::Star, 6});
    CHECK_FALSE(find_profitable_swap(star6, 1).has_value());
    CHECK_FALSE(find_profitable_swap(star6, 0).has_value());
    CHECK_FALSE(find_profitable_swap(generate({GraphFamily::Complete, 5}), 3).has_value());

    Rng a(3), b(3);
    const auto ra = find_profitable_swap(c4, 0, SearchPolicy::Random, a);
    const auto rb = find_profitable_swap(c4, 0, SearchPolicy::Random, b);
    REQUIRE(ra.has_value());
    CHECK(ra == rb);
    CHECK(ra->delta >= 1);
}

TEST_CASE("profitability is exactly deg(added) >= deg(removed)") {
    Rng rng(41);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = 3 + static_cast<int>(rng.next_below(8));
        const Graph g = generate({GraphFamily::Gnp, n, 0.5, 0, 0, 1, rng.next()});
        for (int u = 0; u < n; ++u) {
            bool expected = false;
            for (int v : g.neighbors(u))
                for (int w : g.non_neighbors(u))
                    if (g.degree(w) >= g.degree(v)) expected = true;
            CHECK(find_profitable_swap(g, u).has_value() == expected);
        }
    }
}

TEST_CASE("check_local_equilibrium on fixed shapes") {
    CHECK(check_local_equilibrium(generate({GraphFamily::Star, 6})).is_equilibrium);
    CHECK(check_local_equilibrium(generate({GraphFamily::Complete, 5})).is_equilibrium);

    const LocalEquilibriumReport c4 = check_local_equilibrium(generate({GraphFamily::Cycle, 4}));
    CHECK_FALSE(c4.is_equilibrium);
    REQUIRE(c4.witness.has_value());
    CHECK(c4.witness->move == SwapMove{0, 1, 2});
    CHECK(c4.profits == std::vector<std::int64_t>{4, 4, 4, 4});
}

TEST_CASE("equilibria with isolated vertices exist and lack a spanning star") {
    // triangle plus an isolated vertex: nobody can profitably move
    const Graph g(4, {{0, 1}, {0, 2}, {1, 2}});
    CHECK(check_local_equilibrium(g).is_equilibrium);
    CHECK_FALSE(has_spanning_star(g));
    CHECK(has_spanning_star_on_non_isolated(g));

    // a single edge among isolated vertices is likewise stable
    const Graph edge(5, {{0, 1}});
    CHECK(check_local_equilibrium(edge).is_equilibrium);
    CHECK_FALSE(has_spanning_star(edge));
    CHECK(has_spanning_star_on_non_isolated(edge));
}

TEST_CASE("has_spanning_star") {
    CHECK(has_spanning_star(generate({GraphFamily::Star, 9})));
    CHECK(has_spanning_star(generate({GraphFamily::Complete, 4})));
    CHECK_FALSE(has_spanning_star(generate({GraphFamily::Cycle, 5})));
    CHECK(has_spanning_star(Graph(1)));
    CHECK_FALSE(has_spanning_star(Graph(2)));
    CHECK(has_spanning_star_on_non_isolated(Graph(2)));  // edgeless: vacuous
}

TEST_CASE("exhaustive n<=6: equilibria without isolated vertices have a spanning star") {
    for (int n = 1; n <= 6; ++n) {
        for_each_labeled_graph(n, [&](const Graph& g) {
            if (!check_local_equilibrium(g).is_equilibrium) return;
            REQUIRE(has_spanning_star_on_non_isolated(g));
            if (g.min_degree() >= 1) REQUIRE(has_spanning_star(g));
        });
    }
}
