// Explicit colorings with provable color counts for the structured families:
// paths, 2-connected graphs, one-cut-vertex graphs, graphs whose cut edges
// form a star, cycle coronas, and trees (level coloring and centroid
// ranking). Each emitter validates its structural precondition and throws
// std::invalid_argument when the input is outside its family.

#ifndef VCFC_CONSTRUCTIONS_HPP
#define VCFC_CONSTRUCTIONS_HPP

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vcfc/bounds.hpp"
#include "vcfc/coloring.hpp"
#include "vcfc/decomposition.hpp"
#include "vcfc/generators.hpp"
#include "vcfc/graph.hpp"
#include "vcfc/metrics.hpp"

namespace vcfc {

// Coloring of the n-vertex path v_1..v_n where v_i gets 1 plus the exponent
// of the largest power of two dividing i, like the tick marks of a ruler. On
// every contiguous subpath the maximum color occurs exactly once, so the
// coloring is conflict-free with ceil(log2(n+1)) colors.
inline VertexColoring ruler_coloring(int n) {
    if (n < 1) throw std::invalid_argument("ruler coloring needs at least 1 vertex");
    std::vector<int> colors(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i)
        colors[static_cast<size_t>(i - 1)] =
            std::countr_zero(static_cast<unsigned>(i)) + 1;
    return VertexColoring{path_vcfc(n), std::move(colors)};
}

// Color w with 2 and everything else 1. In a 2-connected graph every pair has
// a path through w, and on that path color 2 appears exactly once.
inline VertexColoring two_coloring_2connected(const Graph& g, int w) {
    if (!is_two_connected(g))
        throw std::invalid_argument("this 2-coloring requires a 2-connected graph");
    if (w < 0 || w >= g.vertex_count()) throw std::invalid_argument("vertex out of range");
    std::vector<int> colors(static_cast<size_t>(g.vertex_count()), 1);
    colors[static_cast<size_t>(w)] = 2;
    return VertexColoring{2, std::move(colors)};
}

// Color the unique cut vertex 2 and everything else 1.
inline VertexColoring two_coloring_one_cut(const Graph& g) {
    auto cuts = cut_vertices(g);
    if (cuts.size() != 1)
        throw std::invalid_argument("expected exactly one cut vertex, found " +
                                    std::to_string(cuts.size()));
    std::vector<int> colors(static_cast<size_t>(g.vertex_count()), 1);
    colors[static_cast<size_t>(cuts.front())] = 2;
    return VertexColoring{2, std::move(colors)};
}

// For a graph with >= 2 cut vertices whose cut edges form a star: hub -> 1,
// the other cut-edge endpoints -> 2, everything else -> 3.
//
// The pattern additionally needs every block to contain a cut-edge endpoint;
// a block attached at a cut vertex that lies on no cut edge would see only
// color 3 on the paths between its own vertices. That extra requirement is
// checked and enforced here.
inline VertexColoring star_cutedges_3coloring(const Graph& g) {
    if (static_cast<int>(cut_vertices(g).size()) < 2)
        throw std::invalid_argument("cut-edge star coloring needs at least two cut vertices");
    const CutEdgeSubgraph c = cut_edge_subgraph(g);
    const auto hub = c.star_center();
    if (!hub) throw std::invalid_argument("cut edges do not form a star");
    for (const auto& block : block_decomposition(g).blocks) {
        const bool touches = std::any_of(block.begin(), block.end(), [&](int v) {
            return std::binary_search(c.vertices.begin(), c.vertices.end(), v);
        });
        if (!touches)
            throw std::invalid_argument(
                "cut-edge star coloring needs every block to contain a cut-edge endpoint");
    }
    std::vector<int> colors(static_cast<size_t>(g.vertex_count()), 3);
    for (int v : c.vertices) colors[static_cast<size_t>(v)] = 2;
    colors[static_cast<size_t>(*hub)] = 1;
    return VertexColoring{3, std::move(colors)};
}

// For the t-corona of a cycle: pendants -> 1, the lowest-id cycle vertex
// -> 2, the remaining cycle vertices -> 3.
inline VertexColoring corona_3coloring(const Graph& g) {
    const auto shape = recognize_cycle_corona(g);
    if (!shape) throw std::invalid_argument("graph is not the corona of a cycle");
    std::vector<int> colors(static_cast<size_t>(g.vertex_count()), 1);
    for (int v : shape->cycle) colors[static_cast<size_t>(v)] = 3;
    colors[static_cast<size_t>(shape->cycle.front())] = 2;
    return VertexColoring{3, std::move(colors)};
}

// Level coloring of a tree: pick a central vertex (lowest id on ties) and
// color each vertex by its distance from it plus one; rad(T)+1 colors. On any
// tree path the level closest to the root occurs exactly once.
inline VertexColoring tree_level_coloring(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("level coloring requires a tree");
    const auto m = compute_metrics(t);
    const int root = m.center.front();
    std::vector<int> colors(static_cast<size_t>(t.vertex_count()));
    for (int v = 0; v < t.vertex_count(); ++v)
        colors[static_cast<size_t>(v)] = m.distances[static_cast<size_t>(root)][static_cast<size_t>(v)] + 1;
    return VertexColoring{m.radius + 1, std::move(colors)};
}

// Vertex ranking: labels 1..k such that any path between two equal labels
// contains a strictly larger label.
struct Ranking {
    std::vector<int> labels;
    int k = 0;
};

inline bool is_valid_ranking(const Graph& g, const Ranking& r) {
    const int n = g.vertex_count();
    if (static_cast<int>(r.labels.size()) != n || r.k < 1) return false;
    for (int lab : r.labels)
        if (lab < 1 || lab > r.k) return false;
    // For each level i, components of the subgraph induced by labels <= i
    // must contain at most one vertex with label exactly i.
    for (int i = 1; i <= r.k; ++i) {
        std::vector<int> comp(static_cast<size_t>(n), -1);
        int comps = 0;
        for (int s = 0; s < n; ++s) {
            if (r.labels[static_cast<size_t>(s)] > i || comp[static_cast<size_t>(s)] != -1)
                continue;
            const int id = comps++;
            std::vector<int> stack{s};
            comp[static_cast<size_t>(s)] = id;
            int tops = 0;
            while (!stack.empty()) {
                const int v = stack.back();
                stack.pop_back();
                if (r.labels[static_cast<size_t>(v)] == i && ++tops > 1) return false;
                for (int w : g.neighbors(v)) {
                    if (r.labels[static_cast<size_t>(w)] > i ||
                        comp[static_cast<size_t>(w)] != -1)
                        continue;
                    comp[static_cast<size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    return true;
}

namespace detail {

// Centroid of the component containing `start` in the forest obtained from t
// by deleting `removed` vertices; ties broken toward the lowest id. Also
// reports the component's vertices.
inline std::pair<int, std::vector<int>> component_centroid(const Graph& t, int start,
                                                           const std::vector<char>& removed) {
    std::vector<int> order{start};
    std::vector<int> parent(static_cast<size_t>(t.vertex_count()), -2);
    parent[static_cast<size_t>(start)] = -1;
    for (size_t head = 0; head < order.size(); ++head) {
        const int v = order[head];
        for (int w : t.neighbors(v))
            if (!removed[static_cast<size_t>(w)] && parent[static_cast<size_t>(w)] == -2) {
                parent[static_cast<size_t>(w)] = v;
                order.push_back(w);
            }
    }
    const int total = static_cast<int>(order.size());
    std::vector<int> subtree(static_cast<size_t>(t.vertex_count()), 1);
    std::vector<int> heaviest(static_cast<size_t>(t.vertex_count()), 0);
    for (size_t i = order.size(); i-- > 1;) {
        const int v = order[i];
        const int p = parent[static_cast<size_t>(v)];
        subtree[static_cast<size_t>(p)] += subtree[static_cast<size_t>(v)];
        heaviest[static_cast<size_t>(p)] =
            std::max(heaviest[static_cast<size_t>(p)], subtree[static_cast<size_t>(v)]);
    }
    int best = -1;
    for (int v : order) {
        const int worst =
            std::max(heaviest[static_cast<size_t>(v)], total - subtree[static_cast<size_t>(v)]);
        if (worst <= total / 2 && (best == -1 || v < best)) best = v;
    }
    if (best == -1) throw std::logic_error("tree component without a centroid");
    return {best, std::move(order)};
}

}  // namespace detail

// Ranking by recursive centroid decomposition: the centroid of each component
// gets the largest label in that component, then the parts are ranked
// recursively with strictly smaller labels. Component sizes at least halve
// per level, so k <= ceil(log2(n+1)). Not a minimum ranking; it only needs
// the logarithmic guarantee.
inline Ranking centroid_ranking(const Graph& t) {
    if (!is_tree(t)) throw std::invalid_argument("centroid ranking requires a tree");
    const int n = t.vertex_count();
    std::vector<int> depth_of(static_cast<size_t>(n), 0);
    std::vector<char> removed(static_cast<size_t>(n), 0);
    std::vector<std::pair<int, int>> work{{0, 0}};  // (some component vertex, depth)
    int max_depth = 0;
    while (!work.empty()) {
        const auto [start, depth] = work.back();
        work.pop_back();
        auto [centroid, component] = detail::component_centroid(t, start, removed);
        depth_of[static_cast<size_t>(centroid)] = depth;
        max_depth = std::max(max_depth, depth);
        removed[static_cast<size_t>(centroid)] = 1;
        for (int w : t.neighbors(centroid))
            if (!removed[static_cast<size_t>(w)]) work.emplace_back(w, depth + 1);
    }
    Ranking r;
    r.k = max_depth + 1;
    r.labels.resize(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) r.labels[static_cast<size_t>(v)] = r.k - depth_of[static_cast<size_t>(v)];
    return r;
}

// A valid ranking read as a coloring is conflict-free: on any path the
// maximum label occurs exactly once.
inline VertexColoring ranking_as_coloring(const Graph& g, const Ranking& r) {
    if (!is_valid_ranking(g, r))
        throw std::invalid_argument("labels do not satisfy the ranking property");
    return VertexColoring{r.k, r.labels};
}

}  // namespace vcfc

#endif  // VCFC_CONSTRUCTIONS_HPP
