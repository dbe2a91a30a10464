#pragma once

#include <stdexcept>
#include <string>

namespace swapnet {

// Swap violates its preconditions relative to the current graph.
struct InvalidSwap : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Operation requires a connected graph.
struct DisconnectedGraph : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Density-based diameter bound requires minimum degree at least 2.
struct MinDegreeTooLow : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Generator or experiment parameters out of range / unknown.
struct BadSpec : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Aggregation over runs that do not share (n, c).
struct MixedConfig : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Edge-list syntax or validity error; carries the 1-based line number.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& msg, int line)
        : std::runtime_error(msg + " (line " + std::to_string(line) + ")"), line_(line) {}

    int line() const { return line_; }

private:
    int line_;
};

}  // namespace swapnet
