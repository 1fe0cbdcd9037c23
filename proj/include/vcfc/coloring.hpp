// Vertex colorings with palette 1..k. Colorings need not be proper; the
// interesting predicate is whether a path carries some color exactly once.

#ifndef VCFC_COLORING_HPP
#define VCFC_COLORING_HPP

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "vcfc/graph.hpp"

namespace vcfc {

struct VertexColoring {
    int k = 1;                // palette size
    std::vector<int> colors;  // colors[v] in 1..k, one entry per vertex

    int color_of(int v) const { return colors[static_cast<size_t>(v)]; }

    // Number of distinct colors actually present.
    int colors_used() const {
        std::vector<char> seen(static_cast<size_t>(k) + 1, 0);
        int used = 0;
        for (int c : colors)
            if (!seen[static_cast<size_t>(c)]) {
                seen[static_cast<size_t>(c)] = 1;
                ++used;
            }
        return used;
    }
};

inline VertexColoring make_coloring(int k, std::vector<int> colors) {
    if (k < 1) throw std::invalid_argument("palette size must be at least 1");
    for (int c : colors)
        if (c < 1 || c > k)
            throw std::invalid_argument("color " + std::to_string(c) + " outside palette 1.." +
                                        std::to_string(k));
    return VertexColoring{k, std::move(colors)};
}

inline void check_coloring_matches(const Graph& g, const VertexColoring& coloring) {
    if (static_cast<int>(coloring.colors.size()) != g.vertex_count())
        throw std::invalid_argument("coloring has " + std::to_string(coloring.colors.size()) +
                                    " entries for a graph on " +
                                    std::to_string(g.vertex_count()) + " vertices");
    for (int c : coloring.colors)
        if (c < 1 || c > coloring.k) throw std::invalid_argument("color outside palette");
}

// Smallest color appearing exactly once on the vertex sequence, if any.
inline std::optional<int> unique_color_on(const VertexColoring& coloring,
                                          std::span<const int> path) {
    std::vector<int> count(static_cast<size_t>(coloring.k) + 1, 0);
    for (int v : path) ++count[static_cast<size_t>(coloring.color_of(v))];
    for (int c = 1; c <= coloring.k; ++c)
        if (count[static_cast<size_t>(c)] == 1) return c;
    return std::nullopt;
}

inline bool is_conflict_free_path(const VertexColoring& coloring, std::span<const int> path) {
    return unique_color_on(coloring, path).has_value();
}

}  // namespace vcfc

#endif  // VCFC_COLORING_HPP
