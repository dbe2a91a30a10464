#pragma once

#include <iosfwd>
#include <string>

#include "swapnet/graph.hpp"

namespace swapnet {

// Edge-list text format: first line "n m", then m lines "u v" with
// 0 <= u < v < n, whitespace-separated, one edge per line. The parser
// rejects duplicates, self-loops, reversed pairs and out-of-range ids
// (ParseError with the offending line number).
Graph read_edgelist(std::istream& in);
Graph read_edgelist_file(const std::string& path);  // IoError if unreadable

// Writes the same format; edges come out sorted with u < v.
void write_edgelist(const Graph& g, std::ostream& out);
void write_edgelist_file(const Graph& g, const std::string& path);

}  // namespace swapnet
