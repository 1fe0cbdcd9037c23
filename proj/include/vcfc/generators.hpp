// Graph families, seeded random graphs, and exhaustive enumeration streams.
//
// Randomness goes through uniform_below() so that a fixed seed produces the
// same graphs on every platform; std::uniform_int_distribution makes no such
// promise.

#ifndef VCFC_GENERATORS_HPP
#define VCFC_GENERATORS_HPP

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "vcfc/graph.hpp"

namespace vcfc {

inline Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path graph needs at least 1 vertex");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    return Graph::from_edge_list(n, edges);
}

inline Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle graph needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(n - 1, 0);
    return Graph::from_edge_list(n, edges);
}

inline Graph complete_graph(int n) {
    if (n < 1) throw std::invalid_argument("complete graph needs at least 1 vertex");
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    return Graph::from_edge_list(n, edges);
}

// Vertex 0 is the hub.
inline Graph star_graph(int n) {
    if (n < 1) throw std::invalid_argument("star graph needs at least 1 vertex");
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    return Graph::from_edge_list(n, edges);
}

// Attaches t pendant leaves to every vertex of the base graph. Base vertices
// keep their ids; the pendants of base vertex v are n + v*t .. n + v*t + t-1.
inline Graph corona(const Graph& base, int t) {
    if (t < 1) throw std::invalid_argument("corona needs at least one pendant per vertex");
    const int n = base.vertex_count();
    std::vector<Edge> edges = base.edge_list();
    for (int v = 0; v < n; ++v)
        for (int j = 0; j < t; ++j) edges.emplace_back(v, n + v * t + j);
    return Graph::from_edge_list(n + n * t, edges);
}

// Decomposition of a graph that is a cycle with t >= 1 pendants on every
// cycle vertex: the cycle vertices (ascending) and the common pendant count.
struct CoronaShape {
    std::vector<int> cycle;
    int t = 0;
};

inline std::optional<CoronaShape> recognize_cycle_corona(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 6 || !is_connected(g)) return std::nullopt;
    CoronaShape shape;
    std::vector<char> on_cycle(static_cast<size_t>(n), 0);
    for (int v = 0; v < n; ++v)
        if (g.degree(v) > 1) {
            on_cycle[static_cast<size_t>(v)] = 1;
            shape.cycle.push_back(v);
        }
    const int c = static_cast<int>(shape.cycle.size());
    if (c < 3 || (n - c) % c != 0) return std::nullopt;
    shape.t = (n - c) / c;
    if (shape.t < 1) return std::nullopt;
    for (int v : shape.cycle) {
        int cycle_neighbors = 0, pendant_neighbors = 0;
        for (int w : g.neighbors(v)) {
            if (on_cycle[static_cast<size_t>(w)])
                ++cycle_neighbors;
            else
                ++pendant_neighbors;
        }
        if (cycle_neighbors != 2 || pendant_neighbors != shape.t) return std::nullopt;
    }
    // Degree-1 vertices hang off the cycle by construction; connectivity plus
    // every cycle vertex having exactly two cycle neighbors forces the cycle
    // vertices to induce a single cycle.
    return shape;
}

// Uniform value in [0, bound) by rejection sampling over a power-of-two mask.
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
    const std::uint64_t mask = std::bit_ceil(bound) - 1;
    for (;;) {
        const std::uint64_t x = rng() & mask;
        if (x < bound) return x;
    }
}

// Uniform random labeled tree, decoded from a random Pruefer sequence.
inline Graph random_tree(int n, std::mt19937_64& rng) {
    if (n < 1) throw std::invalid_argument("tree needs at least 1 vertex");
    if (n == 1) return path_graph(1);
    if (n == 2) return path_graph(2);
    std::vector<int> seq(static_cast<size_t>(n - 2));
    for (int& s : seq) s = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
    std::vector<int> degree(static_cast<size_t>(n), 1);
    for (int s : seq) ++degree[static_cast<size_t>(s)];
    std::set<int> leaves;
    for (int v = 0; v < n; ++v)
        if (degree[static_cast<size_t>(v)] == 1) leaves.insert(v);
    std::vector<Edge> edges;
    for (int s : seq) {
        const int leaf = *leaves.begin();
        leaves.erase(leaves.begin());
        edges.emplace_back(leaf, s);
        if (--degree[static_cast<size_t>(s)] == 1) leaves.insert(s);
    }
    const int a = *leaves.begin();
    const int b = *std::next(leaves.begin());
    edges.emplace_back(a, b);
    return Graph::from_edge_list(n, edges);
}

// Random connected graph: a random spanning tree plus each remaining vertex
// pair independently with probability extra_percent/100.
inline Graph random_connected_graph(int n, std::mt19937_64& rng, int extra_percent = 50) {
    if (extra_percent < 0 || extra_percent > 100)
        throw std::invalid_argument("extra_percent must be in 0..100");
    Graph tree = random_tree(n, rng);
    std::vector<Edge> edges = tree.edge_list();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (tree.has_edge(u, v)) continue;
            if (uniform_below(rng, 100) < static_cast<std::uint64_t>(extra_percent))
                edges.emplace_back(u, v);
        }
    return Graph::from_edge_list(n, edges);
}

// Deterministic spanning tree: breadth-first from vertex 0.
inline Graph spanning_tree(const Graph& g) {
    const int n = g.vertex_count();
    if (!is_connected(g)) throw std::invalid_argument("spanning tree requires a connected graph");
    if (n == 0) throw std::invalid_argument("spanning tree of the empty graph is undefined");
    std::vector<Edge> edges;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> queue{0};
    seen[0] = 1;
    for (size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : g.neighbors(v)) {
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                edges.emplace_back(v, w);
                queue.push_back(w);
            }
        }
    }
    return Graph::from_edge_list(n, edges);
}

// Streams every labeled connected graph on n vertices (1 <= n <= 7) in edge
// bitmask order. The n = 7 stream visits 1,866,256 graphs; anything larger is
// refused rather than left to run for hours.
template <typename F>
void for_each_connected_graph(int n, F&& cb) {
    if (n < 1 || n > 7)
        throw std::invalid_argument("exhaustive enumeration supports 1..7 vertices");
    const int pairs = n * (n - 1) / 2;
    std::array<std::pair<int, int>, 21> pair_of{};
    {
        int idx = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) pair_of[static_cast<size_t>(idx++)] = {u, v};
    }
    std::vector<Edge> edges;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << pairs); ++mask) {
        std::array<std::uint8_t, 7> adj{};
        for (int i = 0; i < pairs; ++i)
            if (mask >> i & 1) {
                const auto [u, v] = pair_of[static_cast<size_t>(i)];
                adj[static_cast<size_t>(u)] |= static_cast<std::uint8_t>(1 << v);
                adj[static_cast<size_t>(v)] |= static_cast<std::uint8_t>(1 << u);
            }
        std::uint8_t seen = 1, frontier = 1;
        while (frontier) {
            std::uint8_t next = 0;
            for (int v = 0; v < n; ++v)
                if (frontier >> v & 1) next |= adj[static_cast<size_t>(v)];
            frontier = static_cast<std::uint8_t>(next & ~seen);
            seen |= next;
        }
        if (seen != (1 << n) - 1) continue;
        edges.clear();
        for (int i = 0; i < pairs; ++i)
            if (mask >> i & 1) edges.push_back(pair_of[static_cast<size_t>(i)]);
        cb(Graph::from_edge_list(n, edges));
    }
}

inline std::vector<Graph> all_connected_graphs(int n) {
    std::vector<Graph> out;
    for_each_connected_graph(n, [&](const Graph& g) { out.push_back(g); });
    return out;
}

namespace detail {

inline std::string rooted_tree_code(const Graph& t, int v, int parent) {
    std::vector<std::string> child_codes;
    for (int w : t.neighbors(v))
        if (w != parent) child_codes.push_back(rooted_tree_code(t, w, v));
    std::sort(child_codes.begin(), child_codes.end());
    std::string code = "(";
    for (const auto& c : child_codes) code += c;
    code += ")";
    return code;
}

inline std::vector<int> tree_centroids(const Graph& t) {
    const int n = t.vertex_count();
    if (n == 1) return {0};
    std::vector<int> subtree(static_cast<size_t>(n), 1);
    std::vector<int> heaviest(static_cast<size_t>(n), 0);
    std::vector<int> order, parent(static_cast<size_t>(n), -1);
    order.reserve(static_cast<size_t>(n));
    order.push_back(0);
    for (size_t head = 0; head < order.size(); ++head) {
        int v = order[head];
        for (int w : t.neighbors(v))
            if (w != parent[static_cast<size_t>(v)]) {
                parent[static_cast<size_t>(w)] = v;
                order.push_back(w);
            }
    }
    for (size_t i = order.size(); i-- > 1;) {
        int v = order[i];
        int p = parent[static_cast<size_t>(v)];
        subtree[static_cast<size_t>(p)] += subtree[static_cast<size_t>(v)];
        heaviest[static_cast<size_t>(p)] =
            std::max(heaviest[static_cast<size_t>(p)], subtree[static_cast<size_t>(v)]);
    }
    std::vector<int> centroids;
    for (int v = 0; v < n; ++v) {
        const int above = n - subtree[static_cast<size_t>(v)];
        if (std::max(heaviest[static_cast<size_t>(v)], above) <= n / 2) centroids.push_back(v);
    }
    return centroids;
}

// Isomorphism-invariant code for a free tree: root at the centroid, or at the
// centroid edge when there are two.
inline std::string free_tree_code(const Graph& t) {
    auto centroids = tree_centroids(t);
    if (centroids.size() == 1) return rooted_tree_code(t, centroids[0], -1);
    std::string a = rooted_tree_code(t, centroids[0], centroids[1]);
    std::string b = rooted_tree_code(t, centroids[1], centroids[0]);
    if (b < a) std::swap(a, b);
    return a + "|" + b;
}

}  // namespace detail

// Streams one representative of every unlabeled tree on n vertices. Trees on
// i+1 vertices all arise by attaching a leaf to a tree on i vertices, so
// growing level by level with canonical-form dedup is exhaustive.
template <typename F>
void for_each_free_tree(int n, F&& cb) {
    if (n < 1 || n > 12)
        throw std::invalid_argument("free tree enumeration supports 1..12 vertices");
    std::vector<Graph> level{path_graph(1)};
    for (int size = 2; size <= n; ++size) {
        std::map<std::string, Graph> next;
        for (const Graph& t : level) {
            for (int v = 0; v < t.vertex_count(); ++v) {
                std::vector<Edge> edges = t.edge_list();
                edges.emplace_back(v, size - 1);
                Graph bigger = Graph::from_edge_list(size, edges);
                next.emplace(detail::free_tree_code(bigger), std::move(bigger));
            }
        }
        level.clear();
        for (auto& [code, tree] : next) level.push_back(std::move(tree));
    }
    for (const Graph& t : level) cb(t);
}

// Relabels vertices: vertex v becomes perm[v].
inline Graph relabel(const Graph& g, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != g.vertex_count())
        throw std::invalid_argument("permutation size mismatch");
    std::vector<Edge> edges;
    for (const auto& [u, v] : g.edge_list())
        edges.emplace_back(perm[static_cast<size_t>(u)], perm[static_cast<size_t>(v)]);
    return Graph::from_edge_list(g.vertex_count(), edges);
}

}  // namespace vcfc

#endif  // VCFC_GENERATORS_HPP
