#pragma once

#include <cstdint>
#include <istream>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ehf/errors.hpp"
#include "ehf/graph.hpp"

namespace ehf {

namespace g6 {
constexpr int bias = 63;          // printable offset
constexpr int long_marker = 126;  // '~', introduces the 3-byte order field
}  // namespace g6

/// Decodes one graph6 line (standard short form; orders 63..max_n use the
/// '~'-prefixed 18-bit header). max_n caps the accepted order.
inline Graph parse_graph6(std::string_view line, int max_n = Graph::max_vertices) {
    if (line.empty()) throw ParseError("empty graph6 string", 0);

    std::size_t pos = 0;
    auto data_char = [&](std::size_t at) -> int {
        if (at >= line.size()) throw ParseError("truncated graph6 string", line.size());
        const unsigned char c = static_cast<unsigned char>(line[at]);
        if (c < g6::bias || c > g6::long_marker)
            throw ParseError("character out of graph6 range", at);
        return c - g6::bias;
    };

    long long n = 0;
    if (static_cast<unsigned char>(line[0]) == g6::long_marker) {
        if (line.size() >= 2 && static_cast<unsigned char>(line[1]) == g6::long_marker)
            throw ParseError("8-byte order field exceeds supported size", 1);
        n = (static_cast<long long>(data_char(1)) << 12) |
            (static_cast<long long>(data_char(2)) << 6) | data_char(3);
        if (n < g6::bias) throw ParseError("long order field used for small order", 1);
        pos = 4;
    } else {
        n = data_char(0);
        pos = 1;
    }
    if (n > max_n)
        throw ParseError("graph order " + std::to_string(n) + " exceeds maximum " +
                             std::to_string(max_n),
                         0);

    Graph g(static_cast<int>(n));
    std::vector<std::pair<int, int>> edges;
    int word = 0, have = 0;
    std::size_t at = pos;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            if (have == 0) {
                at = pos;
                word = data_char(pos++);
                have = 6;
            }
            if ((word >> (have - 1)) & 1) edges.emplace_back(u, v);
            --have;
        }
    }
    if (have > 0 && (word & ((1 << have) - 1)) != 0)
        throw ParseError("nonzero padding bits", at);
    if (pos != line.size()) throw ParseError("trailing characters after graph6 data", pos);
    return Graph::from_edges(static_cast<int>(n), edges);
}

/// Encodes in standard graph6; identity vertex labeling, so
/// parse_graph6(encode_graph6(g)) reproduces g vertex for vertex.
inline std::string encode_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > Graph::max_vertices)
        throw ArgumentError("encode_graph6 supports at most " +
                            std::to_string(Graph::max_vertices) + " vertices");

    std::string out;
    if (n < g6::bias) {
        out.push_back(static_cast<char>(n + g6::bias));
    } else {
        out.push_back(static_cast<char>(g6::long_marker));
        out.push_back(static_cast<char>(((n >> 12) & 0x3f) + g6::bias));
        out.push_back(static_cast<char>(((n >> 6) & 0x3f) + g6::bias));
        out.push_back(static_cast<char>((n & 0x3f) + g6::bias));
    }

    int word = 0, have = 0;
    for (int v = 1; v < n; ++v) {
        for (int u = 0; u < v; ++u) {
            word = (word << 1) | (g.adjacent(u, v) ? 1 : 0);
            if (++have == 6) {
                out.push_back(static_cast<char>(word + g6::bias));
                word = 0;
                have = 0;
            }
        }
    }
    if (have > 0) out.push_back(static_cast<char>((word << (6 - have)) + g6::bias));
    return out;
}

/// Reads a graph6 file: one graph per line, '#'-prefixed comment lines and
/// blank lines skipped.
inline std::vector<Graph> read_graph6_stream(std::istream& in,
                                             int max_n = Graph::max_vertices) {
    std::vector<Graph> graphs;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        graphs.push_back(parse_graph6(line, max_n));
    }
    return graphs;
}

inline void write_graph6_stream(std::ostream& out, std::span<const Graph> graphs) {
    for (const Graph& g : graphs) out << encode_graph6(g) << '\n';
}

}  // namespace ehf
