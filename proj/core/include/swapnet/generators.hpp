#pragma once

#include <cstdint>
#include <string>

#include "swapnet/graph.hpp"
#include "swapnet/rng.hpp"

namespace swapnet {

enum class GraphFamily { Gnp, RandomTree, Path, Cycle, Star, Complete, Barbell };

// Parameters for one generated instance. Unused fields are ignored by the
// selected family. Output is deterministic in (family, parameters, seed).
struct GeneratorSpec {
    GraphFamily family = GraphFamily::Path;
    int n = 0;             // all families except barbell
    double p = 0.0;        // gnp edge probability
    int n1 = 0;            // barbell: first clique size
    int n2 = 0;            // barbell: second clique size
    int bridge_length = 1; // barbell: edges on the connecting path
    std::uint64_t seed = 0;
};

// Throws BadSpec on out-of-range parameters. gnp output may be
// disconnected; callers that need connectivity filter or retry.
Graph generate(const GeneratorSpec& spec);

// Uniform random labeled tree plus independent extra edges with probability
// extra_p per non-tree pair; always connected. Draws from rng.
Graph random_connected_graph(int n, double extra_p, Rng& rng);

GraphFamily family_from_string(const std::string& name);  // throws BadSpec
std::string family_name(GraphFamily family);

}  // namespace swapnet
