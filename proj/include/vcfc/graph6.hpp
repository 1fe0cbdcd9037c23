// graph6 codec, short form only (0 <= n <= 62).
//
// A short-form record is one printable token: byte n+63, then the upper
// triangle of the adjacency matrix in column-major order, packed into 6-bit
// groups (most significant bit first), each group stored as byte value+63.
// Trailing pad bits must be zero.

#ifndef VCFC_GRAPH6_HPP
#define VCFC_GRAPH6_HPP

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "vcfc/graph.hpp"

namespace vcfc {

inline constexpr int kGraph6MaxVertices = 62;

inline std::string to_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > kGraph6MaxVertices)
        throw std::invalid_argument("graph6 short form supports at most 62 vertices, got " +
                                    std::to_string(n));
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    int group = 0;
    int bits = 0;
    for (int col = 1; col < n; ++col) {
        for (int row = 0; row < col; ++row) {
            group = (group << 1) | (g.has_edge(row, col) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(group + 63));
                group = 0;
                bits = 0;
            }
        }
    }
    if (bits > 0) out.push_back(static_cast<char>((group << (6 - bits)) + 63));
    return out;
}

inline Graph from_graph6(std::string_view text) {
    if (text.empty()) throw std::invalid_argument("graph6: empty record");
    for (char c : text)
        if (c < 63 || c > 126)
            throw std::invalid_argument("graph6: byte out of printable range 63..126");
    const int n = text[0] - 63;
    if (n > kGraph6MaxVertices)
        throw std::invalid_argument(
            "graph6: header encodes more than 62 vertices (long form not supported)");
    const int nbits = n * (n - 1) / 2;
    const size_t want = 1 + static_cast<size_t>((nbits + 5) / 6);
    if (text.size() != want)
        throw std::invalid_argument("graph6: record for n=" + std::to_string(n) + " must be " +
                                    std::to_string(want) + " bytes, got " +
                                    std::to_string(text.size()));
    std::vector<Edge> edges;
    int row = 0, col = 1;
    for (int i = 0; i < nbits; ++i) {
        const int value = text[1 + static_cast<size_t>(i / 6)] - 63;
        const int bit = (value >> (5 - i % 6)) & 1;
        if (bit) edges.emplace_back(row, col);
        if (++row == col) {
            row = 0;
            ++col;
        }
    }
    if (nbits % 6 != 0) {
        const int last = text.back() - 63;
        const int pad = 6 - nbits % 6;
        if ((last & ((1 << pad) - 1)) != 0)
            throw std::invalid_argument("graph6: nonzero padding bits");
    }
    return Graph::from_edge_list(n, edges);
}

}  // namespace vcfc

#endif  // VCFC_GRAPH6_HPP
