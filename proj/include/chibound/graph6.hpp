#pragma once

// graph6 encoding: header byte 63+n, then the upper triangle of the
// adjacency matrix in column-major order (x01, x02, x12, x03, ...), six
// bits per printable character, each offset by 63. Newline-delimited
// streams interoperate with the usual generation tools.

#include <istream>
#include <ostream>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "chibound/graph.hpp"

namespace chibound {

inline std::string to_graph6(const Graph& g) {
    int n = g.order();
    std::string out;
    out.push_back(static_cast<char>(63 + n));
    int bit = 5;
    char cur = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            if (g.adjacent(row, col)) cur |= static_cast<char>(1 << bit);
            if (--bit < 0) {
                out.push_back(static_cast<char>(cur + 63));
                bit = 5;
                cur = 0;
            }
        }
    }
    if (bit != 5) out.push_back(static_cast<char>(cur + 63));
    return out;
}

inline Graph from_graph6(std::string_view s) {
    if (s.empty()) throw std::invalid_argument("graph6: empty input");
    unsigned char head = static_cast<unsigned char>(s[0]);
    if (head == 126)
        throw std::invalid_argument("graph6: order exceeds supported maximum");
    if (head < 63 || head > 126)
        throw std::invalid_argument("graph6: malformed header byte");
    int n = head - 63;
    if (n > kMaxVertices)
        throw std::invalid_argument("graph6: order exceeds supported maximum");
    int nbits = n * (n - 1) / 2;
    std::size_t body = (nbits + 5) / 6;
    if (s.size() != 1 + body)
        throw std::invalid_argument("graph6: wrong length for order " + std::to_string(n));
    Graph g(n);
    int idx = 0;
    for (std::size_t i = 1; i < s.size(); ++i) {
        unsigned char c = static_cast<unsigned char>(s[i]);
        if (c < 63 || c > 126) throw std::invalid_argument("graph6: malformed byte");
        int v = c - 63;
        for (int bit = 5; bit >= 0; --bit, ++idx) {
            bool set = (v >> bit) & 1;
            if (idx >= nbits) {
                if (set) throw std::invalid_argument("graph6: nonzero padding");
                continue;
            }
            if (set) {
                // invert column-major triangle index
                int col = 1;
                int rem = idx;
                while (rem >= col) rem -= col, ++col;
                g.add_edge(rem, col);
            }
        }
    }
    return g;
}

// Reads newline-delimited graph6, skipping blank lines and the optional
// ">>graph6<<" header emitted by some tools.
inline std::vector<Graph> read_graph6_lines(std::istream& in) {
    std::vector<Graph> out;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line.rfind(">>graph6<<", 0) == 0) {
            line.erase(0, 10);
            if (line.empty()) continue;
        }
        out.push_back(from_graph6(line));
    }
    return out;
}

inline void write_graph6_lines(std::ostream& out, std::span<const Graph> graphs) {
    for (const Graph& g : graphs) out << to_graph6(g) << '\n';
}

}  // namespace chibound
