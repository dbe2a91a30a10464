#include <sstream>

#include "doctest.h"
#include "swapnet/distance.hpp"
#include "swapnet/edgelist.hpp"
#include "swapnet/generators.hpp"

using namespace swapnet;

TEST_CASE("fixed families have their defining shapes") {
    const Graph star5 = generate({GraphFamily::Star, 5});
    CHECK(star5.edge_count() == 4);
    CHECK(star5.max_degree() == 4);

    const Graph c6 = generate({GraphFamily::Cycle, 6});
    CHECK(c6.edge_count() == 6);
    CHECK(c6.min_degree() == 2);
    CHECK(c6.max_degree() == 2);

    const Graph p1 = generate({GraphFamily::Path, 1});
    CHECK(p1.vertex_count() == 1);
    CHECK(p1.edge_count() == 0);

    const Graph k6 = generate({GraphFamily::Complete, 6});
    CHECK(k6.edge_count() == 15);

    const Graph barbell = generate({GraphFamily::Barbell, 0, 0, 4, 3, 2});
    CHECK(barbell.vertex_count() == 4 + 3 + 1);
    CHECK(barbell.edge_count() == 6 + 3 + 2);
    CHECK(is_connected(barbell));
}

TEST_CASE("generator parameter validation") {
    CHECK_THROWS_AS(generate({GraphFamily::Cycle, 2}), BadSpec);
    CHECK_THROWS_AS(generate({GraphFamily::Star, 0}), BadSpec);
    CHECK_THROWS_AS(generate({GraphFamily::Gnp, 5, 1.5}), BadSpec);
    CHECK_THROWS_AS(generate({GraphFamily::Gnp, 5, -0.1}), BadSpec);
    CHECK_THROWS_AS(generate({GraphFamily::Barbell, 0, 0, 2, 2, 0}), BadSpec);
    CHECK_THROWS_AS(family_from_string("lattice"), BadSpec);
    CHECK(family_from_string("random-tree") == GraphFamily::RandomTree);
    CHECK(family_name(GraphFamily::Barbell) == "barbell");
}

TEST_CASE("gnp is deterministic per seed") {
    const GeneratorSpec spec{GraphFamily::Gnp, 20, 0.3, 0, 0, 1, 7};
    CHECK(generate(spec) == generate(spec));
    GeneratorSpec other = spec;
    other.seed = 8;
    CHECK_FALSE(generate(spec) == generate(other));
}

TEST_CASE("random trees are spanning trees; random connected graphs connect") {
    Rng rng(91);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_below(20));
        const Graph tree = generate({GraphFamily::RandomTree, n, 0, 0, 0, 1, rng.next()});
        CHECK(tree.edge_count() == n - 1);
        CHECK(is_connected(tree));

        const Graph g = random_connected_graph(n, 0.2, rng);
        CHECK(is_connected(g));
        CHECK(g.edge_count() >= n - 1);
    }
}

TEST_CASE("generated graphs satisfy simple-graph invariants over many specs") {
    Rng rng(2718);
    for (int trial = 0; trial < 10000; ++trial) {
        GeneratorSpec spec;
        spec.seed = rng.next();
        switch (rng.next_below(7)) {
            case 0: spec.family = GraphFamily::Gnp; spec.n = 1 + static_cast<int>(rng.next_below(12)); spec.p = rng.uniform01(); break;
            case 1: spec.family = GraphFamily::RandomTree; spec.n = 1 + static_cast<int>(rng.next_below(12)); break;
            case 2: spec.family = GraphFamily::Path; spec.n = 1 + static_cast<int>(rng.next_below(12)); break;
            case 3: spec.family = GraphFamily::Cycle; spec.n = 3 + static_cast<int>(rng.next_below(10)); break;
            case 4: spec.family = GraphFamily::Star; spec.n = 1 + static_cast<int>(rng.next_below(12)); break;
            case 5: spec.family = GraphFamily::Complete; spec.n = 1 + static_cast<int>(rng.next_below(9)); break;
            default:
                spec.family = GraphFamily::Barbell;
                spec.n1 = 1 + static_cast<int>(rng.next_below(5));
                spec.n2 = 1 + static_cast<int>(rng.next_below(5));
                spec.bridge_length = 1 + static_cast<int>(rng.next_below(4));
                break;
        }
        const Graph g = generate(spec);
        // the Graph constructor rejects loops/duplicates; check the counters
        int degree_sum = 0;
        for (int v = 0; v < g.vertex_count(); ++v) degree_sum += g.degree(v);
        REQUIRE(degree_sum == 2 * g.edge_count());
        for (const auto& [u, v] : g.edges()) REQUIRE(u < v);
    }
}

TEST_CASE("edge-list parsing accepts the documented format") {
    std::istringstream in("3 2\n0 1\n1 2\n");
    const Graph g = read_edgelist(in);
    CHECK(g.vertex_count() == 3);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}});
}

TEST_CASE("edge-list parsing rejects malformed input with line numbers") {
    auto parse = [](const std::string& text) {
        std::istringstream in(text);
        return read_edgelist(in);
    };
    CHECK_THROWS_AS(parse(""), ParseError);
    CHECK_THROWS_AS(parse("3\n"), ParseError);
    CHECK_THROWS_AS(parse("3 2\n0 1\n0 1\n"), ParseError);   // duplicate
    CHECK_THROWS_AS(parse("3 1\n1 1\n"), ParseError);        // self-loop
    CHECK_THROWS_AS(parse("3 1\n1 0\n"), ParseError);        // reversed pair
    CHECK_THROWS_AS(parse("3 1\n0 3\n"), ParseError);        // out of range
    CHECK_THROWS_AS(parse("3 2\n0 1\n"), ParseError);        // truncated
    CHECK_THROWS_AS(parse("3 1\n0 1 9\n"), ParseError);      // trailing token
    CHECK_THROWS_AS(parse("3 1\n0 1\n0 2\n"), ParseError);   // extra edge line
    CHECK_THROWS_AS(parse("2 5\n"), ParseError);             // impossible edge count
    CHECK_THROWS_AS(parse("3 1\na b\n"), ParseError);

    try {
        parse("3 2\n0 1\n0 1\n");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
}

TEST_CASE("write-then-read is the identity and output is sorted") {
    Rng rng(123);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng.next_below(15));
        const Graph g = generate({GraphFamily::Gnp, n, rng.uniform01(), 0, 0, 1, rng.next()});
        std::ostringstream out;
        write_edgelist(g, out);
        std::istringstream in(out.str());
        const Graph back = read_edgelist(in);
        REQUIRE(back == g);

        std::ostringstream again;
        write_edgelist(back, again);
        REQUIRE(again.str() == out.str());
    }
}
