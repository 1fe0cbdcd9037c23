// Cut vertices, bridges, biconnected blocks, and the derived block graph.
// One iterative lowpoint DFS computes everything; the public entry points
// slice the result.

#ifndef VCFC_DECOMPOSITION_HPP
#define VCFC_DECOMPOSITION_HPP

#include <algorithm>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

#include "vcfc/graph.hpp"

namespace vcfc {

struct BlockDecomposition {
    // Vertex sets of the biconnected blocks, each sorted ascending; blocks
    // ordered by (smallest vertex, size, lexicographic contents).
    std::vector<std::vector<int>> blocks;
    std::vector<int> cut_vertices;  // sorted ascending
    std::vector<Edge> bridges;      // cut edges, (u,v) with u < v, lex order
    Graph block_graph;              // node i = blocks[i]; adjacent iff they share a vertex
};

namespace detail {

struct LowpointResult {
    std::vector<std::vector<int>> blocks;
    std::vector<int> cut_vertices;
    std::vector<Edge> bridges;
};

inline LowpointResult lowpoint_dfs(const Graph& g) {
    const int n = g.vertex_count();
    LowpointResult res;
    if (n == 1) {
        res.blocks.push_back({0});
        return res;
    }

    std::vector<int> disc(static_cast<size_t>(n), -1);
    std::vector<int> low(static_cast<size_t>(n), 0);
    std::vector<int> parent(static_cast<size_t>(n), -1);
    std::vector<size_t> next_child(static_cast<size_t>(n), 0);
    std::vector<char> is_cut(static_cast<size_t>(n), 0);
    std::vector<Edge> edge_stack;
    std::vector<int> dfs_stack{0};
    int timer = 0;
    int root_children = 0;
    disc[0] = low[0] = timer++;

    auto emit_block = [&](const Edge& top) {
        std::set<int> verts;
        while (!edge_stack.empty()) {
            Edge e = edge_stack.back();
            edge_stack.pop_back();
            verts.insert(e.first);
            verts.insert(e.second);
            if (e == top) break;
        }
        res.blocks.emplace_back(verts.begin(), verts.end());
    };

    while (!dfs_stack.empty()) {
        const int v = dfs_stack.back();
        if (next_child[static_cast<size_t>(v)] < g.neighbors(v).size()) {
            const int w = g.neighbors(v)[next_child[static_cast<size_t>(v)]++];
            if (w == parent[static_cast<size_t>(v)]) continue;
            if (disc[static_cast<size_t>(w)] == -1) {
                parent[static_cast<size_t>(w)] = v;
                disc[static_cast<size_t>(w)] = low[static_cast<size_t>(w)] = timer++;
                edge_stack.emplace_back(v, w);
                dfs_stack.push_back(w);
                if (v == 0) ++root_children;
            } else if (disc[static_cast<size_t>(w)] < disc[static_cast<size_t>(v)]) {
                edge_stack.emplace_back(v, w);
                low[static_cast<size_t>(v)] =
                    std::min(low[static_cast<size_t>(v)], disc[static_cast<size_t>(w)]);
            }
        } else {
            dfs_stack.pop_back();
            const int p = parent[static_cast<size_t>(v)];
            if (p == -1) continue;
            low[static_cast<size_t>(p)] =
                std::min(low[static_cast<size_t>(p)], low[static_cast<size_t>(v)]);
            if (low[static_cast<size_t>(v)] >= disc[static_cast<size_t>(p)]) {
                if (p != 0 || root_children > 1) is_cut[static_cast<size_t>(p)] = 1;
                emit_block({p, v});
            }
            if (low[static_cast<size_t>(v)] > disc[static_cast<size_t>(p)])
                res.bridges.emplace_back(std::min(p, v), std::max(p, v));
        }
    }

    if (!edge_stack.empty())
        throw std::invalid_argument("block decomposition requires a connected graph");
    for (int v = 0; v < n; ++v)
        if (disc[static_cast<size_t>(v)] == -1)
            throw std::invalid_argument("block decomposition requires a connected graph");

    for (int v = 0; v < n; ++v)
        if (is_cut[static_cast<size_t>(v)]) res.cut_vertices.push_back(v);
    std::sort(res.blocks.begin(), res.blocks.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  if (a.front() != b.front()) return a.front() < b.front();
                  if (a.size() != b.size()) return a.size() < b.size();
                  return a < b;
              });
    std::sort(res.bridges.begin(), res.bridges.end());
    return res;
}

}  // namespace detail

inline std::vector<int> cut_vertices(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
    return detail::lowpoint_dfs(g).cut_vertices;
}

inline std::vector<Edge> cut_edges(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
    return detail::lowpoint_dfs(g).bridges;
}

inline BlockDecomposition block_decomposition(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("empty graph");
    auto raw = detail::lowpoint_dfs(g);
    BlockDecomposition d;
    d.blocks = std::move(raw.blocks);
    d.cut_vertices = std::move(raw.cut_vertices);
    d.bridges = std::move(raw.bridges);

    const int k = static_cast<int>(d.blocks.size());
    std::vector<Edge> links;
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j) {
            // Distinct blocks can share at most one vertex (a cut vertex).
            const auto& a = d.blocks[static_cast<size_t>(i)];
            const auto& b = d.blocks[static_cast<size_t>(j)];
            bool share = false;
            for (size_t x = 0, y = 0; x < a.size() && y < b.size();) {
                if (a[x] == b[y]) {
                    share = true;
                    break;
                }
                (a[x] < b[y]) ? ++x : ++y;
            }
            if (share) links.emplace_back(i, j);
        }
    d.block_graph = Graph::from_edge_list(k, links);
    return d;
}

// Two-connected: at least 3 vertices, connected, and no cut vertex.
inline bool is_two_connected(const Graph& g) {
    if (g.vertex_count() < 3 || !is_connected(g)) return false;
    return cut_vertices(g).empty();
}

// Block path: the block graph is a path (every pair of consecutive blocks
// shares a cut vertex, no branching).
inline bool is_block_path(const Graph& g) {
    if (g.vertex_count() == 0 || !is_connected(g)) return false;
    const Graph bg = block_decomposition(g).block_graph;
    return is_tree(bg) && bg.max_degree() <= 2;
}

// The subgraph formed by the cut edges of g.
struct CutEdgeSubgraph {
    std::vector<int> vertices;  // endpoints of cut edges, sorted ascending
    std::vector<Edge> edges;    // the cut edges themselves

    // Hub vertex when the subgraph is a star K_{1,t}, t >= 1: the vertex
    // common to all edges. A single edge is a star too; its lower endpoint
    // is reported as the hub.
    std::optional<int> star_center() const {
        if (edges.empty()) return std::nullopt;
        for (int cand : {edges.front().first, edges.front().second}) {
            bool covers_all = true;
            for (const auto& [u, v] : edges)
                if (u != cand && v != cand) {
                    covers_all = false;
                    break;
                }
            if (covers_all) return cand;
        }
        return std::nullopt;
    }

    bool is_star() const { return star_center().has_value(); }
};

inline CutEdgeSubgraph cut_edge_subgraph(const Graph& g) {
    CutEdgeSubgraph c;
    c.edges = cut_edges(g);
    std::set<int> verts;
    for (const auto& [u, v] : c.edges) {
        verts.insert(u);
        verts.insert(v);
    }
    c.vertices.assign(verts.begin(), verts.end());
    return c;
}

}  // namespace vcfc

#endif  // VCFC_DECOMPOSITION_HPP
