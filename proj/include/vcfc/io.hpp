// Stream readers and writers for the on-disk formats:
//   - graph6: one record per line; blank lines and a leading ">>graph6<<"
//     header are tolerated on input
//   - edge list: "n m" header, then m lines "u v"
//   - coloring: "k" header, then one "vertex color" line per vertex

#ifndef VCFC_IO_HPP
#define VCFC_IO_HPP

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vcfc/coloring.hpp"
#include "vcfc/graph.hpp"
#include "vcfc/graph6.hpp"

namespace vcfc {

inline std::string strip_line_ending(std::string line) {
    while (!line.empty() && (line.back() == '\r' || line.back() == '\n')) line.pop_back();
    return line;
}

// Reads every graph6 record in the stream. `line_numbers`, when given,
// receives the 1-based source line of each graph (useful for reporting).
inline std::vector<Graph> read_graph6_lines(std::istream& in,
                                            std::vector<int>* line_numbers = nullptr) {
    std::vector<Graph> graphs;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        line = strip_line_ending(line);
        if (line.empty()) continue;
        if (line == ">>graph6<<") continue;
        try {
            graphs.push_back(from_graph6(line));
        } catch (const std::invalid_argument& e) {
            throw std::invalid_argument("line " + std::to_string(lineno) + ": " + e.what());
        }
        if (line_numbers) line_numbers->push_back(lineno);
    }
    return graphs;
}

inline void write_graph6_lines(std::ostream& out, const std::vector<Graph>& graphs) {
    for (const Graph& g : graphs) out << to_graph6(g) << '\n';
}

// Edge list: header "n m", then m whitespace-separated pairs.
inline Graph read_edge_list(std::istream& in) {
    int n = 0, m = 0;
    if (!(in >> n >> m)) throw std::invalid_argument("edge list: missing \"n m\" header");
    if (m < 0) throw std::invalid_argument("edge list: negative edge count");
    std::vector<Edge> edges;
    edges.reserve(static_cast<size_t>(m));
    for (int i = 0; i < m; ++i) {
        int u = 0, v = 0;
        if (!(in >> u >> v))
            throw std::invalid_argument("edge list: expected " + std::to_string(m) +
                                        " edges, found " + std::to_string(i));
        edges.emplace_back(u, v);
    }
    return Graph::from_edge_list(n, edges);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edge_list()) out << u << ' ' << v << '\n';
}

// Coloring: header "k", then one "vertex color" pair per vertex, each vertex
// appearing exactly once.
inline VertexColoring read_coloring(std::istream& in, int n) {
    int k = 0;
    if (!(in >> k)) throw std::invalid_argument("coloring: missing palette size header");
    if (k < 1) throw std::invalid_argument("coloring: palette size must be at least 1");
    std::vector<int> colors(static_cast<size_t>(n), 0);
    std::vector<char> seen(static_cast<size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        int v = 0, c = 0;
        if (!(in >> v >> c))
            throw std::invalid_argument("coloring: expected " + std::to_string(n) +
                                        " vertex entries, found " + std::to_string(i));
        if (v < 0 || v >= n)
            throw std::invalid_argument("coloring: vertex " + std::to_string(v) + " out of range");
        if (seen[static_cast<size_t>(v)])
            throw std::invalid_argument("coloring: vertex " + std::to_string(v) +
                                        " listed twice");
        if (c < 1 || c > k)
            throw std::invalid_argument("coloring: color " + std::to_string(c) +
                                        " outside palette 1.." + std::to_string(k));
        seen[static_cast<size_t>(v)] = 1;
        colors[static_cast<size_t>(v)] = c;
    }
    return VertexColoring{k, std::move(colors)};
}

inline void write_coloring(std::ostream& out, const VertexColoring& coloring) {
    out << coloring.k << '\n';
    for (size_t v = 0; v < coloring.colors.size(); ++v)
        out << v << ' ' << coloring.colors[v] << '\n';
}

}  // namespace vcfc

#endif  // VCFC_IO_HPP
