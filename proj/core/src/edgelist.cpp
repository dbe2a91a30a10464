#include "swapnet/edgelist.hpp"

#include <fstream>
#include <sstream>
#include <string>

#include "swapnet/errors.hpp"

namespace swapnet {

namespace {

bool blank(const std::string& line) {
    return line.find_first_not_of(" \t\r") == std::string::npos;
}

// Parses exactly `count` long values from the line; rejects trailing junk.
void parse_ints(const std::string& line, int line_no, long* out, int count) {
    std::istringstream ss(line);
    for (int i = 0; i < count; ++i) {
        if (!(ss >> out[i])) throw ParseError("expected " + std::to_string(count) + " integers", line_no);
    }
    std::string rest;
    if (ss >> rest) throw ParseError("unexpected trailing token '" + rest + "'", line_no);
}

}  // namespace

Graph read_edgelist(std::istream& in) {
    std::string line;
    int line_no = 0;

    if (!std::getline(in, line)) throw ParseError("missing header line \"n m\"", 1);
    ++line_no;
    long header[2];
    parse_ints(line, line_no, header, 2);
    if (header[0] < 0) throw ParseError("negative vertex count", line_no);
    if (header[1] < 0) throw ParseError("negative edge count", line_no);
    const long n = header[0];
    const long m = header[1];
    if (m > n * (n - 1) / 2) throw ParseError("edge count exceeds simple-graph maximum", line_no);

    Graph g(static_cast<int>(n));
    for (long i = 0; i < m; ++i) {
        if (!std::getline(in, line))
            throw ParseError("unexpected end of file: expected " + std::to_string(m) + " edges",
                             line_no + 1);
        ++line_no;
        long e[2];
        parse_ints(line, line_no, e, 2);
        const long u = e[0];
        const long v = e[1];
        if (u < 0 || v >= n) throw ParseError("vertex id out of range", line_no);
        if (u == v) throw ParseError("self-loop", line_no);
        if (u > v) throw ParseError("expected u < v", line_no);
        if (g.has_edge(static_cast<int>(u), static_cast<int>(v)))
            throw ParseError("duplicate edge", line_no);
        g.add_edge(static_cast<int>(u), static_cast<int>(v));
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (!blank(line)) throw ParseError("unexpected content after last edge", line_no);
    }
    return g;
}

Graph read_edgelist_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IoError("cannot open " + path);
    return read_edgelist(in);
}

void write_edgelist(const Graph& g, std::ostream& out) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

void write_edgelist_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw IoError("cannot open " + path + " for writing");
    write_edgelist(g, out);
    if (!out) throw IoError("write to " + path + " failed");
}

}  // namespace swapnet
