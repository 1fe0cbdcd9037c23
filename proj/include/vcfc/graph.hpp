// Immutable simple undirected graph over integer vertex ids 0..n-1.
// Adjacency lists are kept sorted; all mutation happens at construction time.

#ifndef VCFC_GRAPH_HPP
#define VCFC_GRAPH_HPP

#include <algorithm>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace vcfc {

using Edge = std::pair<int, int>;

// Storage cap. Solving is practical only far below this.
inline constexpr int kMaxVertices = 10000;

class Graph {
public:
    Graph() = default;

    // Builds a simple graph. Rejects out-of-range endpoints, self-loops and
    // duplicate edges.
    static Graph from_edge_list(int n, std::span<const Edge> edges) {
        if (n < 0 || n > kMaxVertices)
            throw std::invalid_argument("vertex count out of range: " + std::to_string(n));
        Graph g;
        g.n_ = n;
        g.adj_.assign(static_cast<size_t>(n), {});
        for (const auto& [u, v] : edges) {
            if (u < 0 || u >= n || v < 0 || v >= n)
                throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                            "," + std::to_string(v) + ")");
            if (u == v)
                throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
            g.adj_[static_cast<size_t>(u)].push_back(v);
            g.adj_[static_cast<size_t>(v)].push_back(u);
        }
        for (int v = 0; v < n; ++v) {
            auto& nb = g.adj_[static_cast<size_t>(v)];
            std::sort(nb.begin(), nb.end());
            if (std::adjacent_find(nb.begin(), nb.end()) != nb.end())
                throw std::invalid_argument("duplicate edge at vertex " + std::to_string(v));
            g.m_ += static_cast<int>(nb.size());
        }
        g.m_ /= 2;
        return g;
    }

    static Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
        return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
    }

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }

    const std::vector<int>& neighbors(int v) const {
        check_vertex(v);
        return adj_[static_cast<size_t>(v)];
    }

    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    int max_degree() const {
        int d = 0;
        for (const auto& nb : adj_) d = std::max(d, static_cast<int>(nb.size()));
        return d;
    }

    bool has_edge(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        const auto& nb = adj_[static_cast<size_t>(u)];
        return std::binary_search(nb.begin(), nb.end(), v);
    }

    // Edges as (u,v) with u < v, in lexicographic order.
    std::vector<Edge> edge_list() const {
        std::vector<Edge> out;
        out.reserve(static_cast<size_t>(m_));
        for (int u = 0; u < n_; ++u)
            for (int v : adj_[static_cast<size_t>(u)])
                if (u < v) out.emplace_back(u, v);
        return out;
    }

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw std::invalid_argument("vertex out of range: " + std::to_string(v));
    }

    int n_ = 0;
    int m_ = 0;
    std::vector<std::vector<int>> adj_;
};

// True iff a single search from vertex 0 reaches every vertex. Vacuously true
// for n <= 1.
inline bool is_connected(const Graph& g) {
    const int n = g.vertex_count();
    if (n <= 1) return true;
    std::vector<char> seen(static_cast<size_t>(n), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g.neighbors(v)) {
            if (!seen[static_cast<size_t>(w)]) {
                seen[static_cast<size_t>(w)] = 1;
                ++reached;
                stack.push_back(w);
            }
        }
    }
    return reached == n;
}

inline bool is_tree(const Graph& g) {
    return g.vertex_count() >= 1 && g.edge_count() == g.vertex_count() - 1 && is_connected(g);
}

// A path graph: a tree whose maximum degree is at most 2.
inline bool is_path_graph(const Graph& g) {
    return is_tree(g) && g.max_degree() <= 2;
}

inline bool is_complete(const Graph& g) {
    const int n = g.vertex_count();
    return g.edge_count() == n * (n - 1) / 2;
}

}  // namespace vcfc

#endif  // VCFC_GRAPH_HPP
