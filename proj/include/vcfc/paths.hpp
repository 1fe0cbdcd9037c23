// Path queries. The workhorse is path_through(g, u, v, w): find a simple u-v
// path that visits w, or report that none exists. This is a two-unit max-flow
// problem after the usual vertex-splitting reduction, so it runs in linear
// time per query for our graph sizes.
//
// Every routine takes an optional "alive" mask so callers can query an
// induced subgraph without materializing it.

#ifndef VCFC_PATHS_HPP
#define VCFC_PATHS_HPP

#include <algorithm>
#include <cassert>
#include <optional>
#include <queue>
#include <span>
#include <stdexcept>
#include <vector>

#include "vcfc/graph.hpp"

namespace vcfc {

namespace detail {

struct FlowArc {
    int to;
    int cap;
    int rev;       // index of the reverse arc in arcs[to]
    bool forward;  // true for original arcs, false for residual counterparts
};

class FlowNetwork {
public:
    explicit FlowNetwork(int nodes) : arcs_(static_cast<size_t>(nodes)) {}

    void add_arc(int from, int to) {
        arcs_[static_cast<size_t>(from)].push_back(
            {to, 1, static_cast<int>(arcs_[static_cast<size_t>(to)].size()), true});
        arcs_[static_cast<size_t>(to)].push_back(
            {from, 0, static_cast<int>(arcs_[static_cast<size_t>(from)].size()) - 1, false});
    }

    // One augmenting path of capacity 1, found by BFS. Returns false when the
    // sink is unreachable in the residual network.
    bool augment(int source, int sink) {
        const int nodes = static_cast<int>(arcs_.size());
        std::vector<std::pair<int, int>> via(static_cast<size_t>(nodes), {-1, -1});
        std::vector<char> seen(static_cast<size_t>(nodes), 0);
        std::queue<int> queue;
        seen[static_cast<size_t>(source)] = 1;
        queue.push(source);
        while (!queue.empty() && !seen[static_cast<size_t>(sink)]) {
            int v = queue.front();
            queue.pop();
            const auto& out = arcs_[static_cast<size_t>(v)];
            for (size_t i = 0; i < out.size(); ++i) {
                const FlowArc& a = out[i];
                if (a.cap > 0 && !seen[static_cast<size_t>(a.to)]) {
                    seen[static_cast<size_t>(a.to)] = 1;
                    via[static_cast<size_t>(a.to)] = {v, static_cast<int>(i)};
                    queue.push(a.to);
                }
            }
        }
        if (!seen[static_cast<size_t>(sink)]) return false;
        for (int v = sink; v != source;) {
            auto [prev, idx] = via[static_cast<size_t>(v)];
            FlowArc& a = arcs_[static_cast<size_t>(prev)][static_cast<size_t>(idx)];
            a.cap -= 1;
            arcs_[static_cast<size_t>(a.to)][static_cast<size_t>(a.rev)].cap += 1;
            v = prev;
        }
        return true;
    }

    std::vector<std::vector<FlowArc>>& arcs() { return arcs_; }

private:
    std::vector<std::vector<FlowArc>> arcs_;
};

}  // namespace detail

// Shortest path between two alive vertices, as a vertex sequence from `from`
// to `to`; empty when unreachable. Both endpoints must be alive.
inline std::vector<int> bfs_path(const Graph& g, int from, int to,
                                 const std::vector<char>* alive = nullptr) {
    const int n = g.vertex_count();
    auto is_alive = [&](int v) { return !alive || (*alive)[static_cast<size_t>(v)]; };
    assert(is_alive(from) && is_alive(to));
    if (from == to) return {from};
    std::vector<int> parent(static_cast<size_t>(n), -1);
    std::queue<int> queue;
    parent[static_cast<size_t>(from)] = from;
    queue.push(from);
    while (!queue.empty() && parent[static_cast<size_t>(to)] == -1) {
        int v = queue.front();
        queue.pop();
        for (int w : g.neighbors(v)) {
            if (is_alive(w) && parent[static_cast<size_t>(w)] == -1) {
                parent[static_cast<size_t>(w)] = v;
                queue.push(w);
            }
        }
    }
    if (parent[static_cast<size_t>(to)] == -1) return {};
    std::vector<int> path;
    for (int v = to; v != from; v = parent[static_cast<size_t>(v)]) path.push_back(v);
    path.push_back(from);
    std::reverse(path.begin(), path.end());
    return path;
}

// True iff seq is a nonempty sequence of distinct alive vertices with every
// consecutive pair adjacent.
inline bool is_simple_path(const Graph& g, std::span<const int> seq,
                           const std::vector<char>* alive = nullptr) {
    if (seq.empty()) return false;
    std::vector<char> used(static_cast<size_t>(g.vertex_count()), 0);
    for (size_t i = 0; i < seq.size(); ++i) {
        int v = seq[i];
        if (v < 0 || v >= g.vertex_count()) return false;
        if (alive && !(*alive)[static_cast<size_t>(v)]) return false;
        if (used[static_cast<size_t>(v)]) return false;
        used[static_cast<size_t>(v)] = 1;
        if (i > 0 && !g.has_edge(seq[i - 1], v)) return false;
    }
    return true;
}

// Simple u-v path visiting w, restricted to alive vertices, or nullopt if no
// such path exists. Requires u != v; w may coincide with an endpoint, in
// which case any u-v path qualifies.
inline std::optional<std::vector<int>> path_through(const Graph& g, int u, int v, int w,
                                                    const std::vector<char>* alive = nullptr) {
    const int n = g.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n || w < 0 || w >= n)
        throw std::invalid_argument("path_through: vertex out of range");
    if (u == v) throw std::invalid_argument("path_through: endpoints must differ");
    auto is_alive = [&](int x) { return !alive || (*alive)[static_cast<size_t>(x)]; };
    if (!is_alive(u) || !is_alive(v) || !is_alive(w))
        throw std::invalid_argument("path_through: query vertex is not alive");

    if (w == u || w == v) {
        auto path = bfs_path(g, u, v, alive);
        if (path.empty()) return std::nullopt;
        return path;
    }

    // Split each vertex x into in(x)=2x and out(x)=2x+1 joined by a unit arc,
    // except w, whose in-node is left dangling so no path can pass through it.
    // Two units of flow from out(w) to a super-sink fed by out(u) and out(v)
    // exist exactly when w reaches u and v by internally disjoint paths.
    const int sink = 2 * n;
    detail::FlowNetwork net(2 * n + 1);
    for (int x = 0; x < n; ++x) {
        if (!is_alive(x) || x == w) continue;
        net.add_arc(2 * x, 2 * x + 1);
    }
    for (const auto& [x, y] : g.edge_list()) {
        if (!is_alive(x) || !is_alive(y)) continue;
        net.add_arc(2 * x + 1, 2 * y);
        net.add_arc(2 * y + 1, 2 * x);
    }
    net.add_arc(2 * u + 1, sink);
    net.add_arc(2 * v + 1, sink);
    if (!net.augment(2 * w + 1, sink) || !net.augment(2 * w + 1, sink)) return std::nullopt;

    // Decompose the flow into the two w->{u,v} paths: repeatedly leave along
    // a saturated forward arc. Graph vertices are recorded when crossing an
    // in->out split arc.
    auto& arcs = net.arcs();
    auto walk = [&](std::vector<int>& out_path) {
        out_path.push_back(w);
        int node = 2 * w + 1;
        while (node != sink) {
            bool advanced = false;
            for (auto& a : arcs[static_cast<size_t>(node)]) {
                // An original arc carries one unit iff its capacity is spent.
                if (!a.forward || a.cap != 0) continue;
                // Consume this unit so the second walk does not reuse it.
                a.cap = -1;
                if (node % 2 == 0) out_path.push_back(node / 2);
                node = a.to;
                advanced = true;
                break;
            }
            assert(advanced);
            if (!advanced) return;  // defensive; flow decomposition cannot dead-end
        }
    };
    std::vector<int> first, second;
    walk(first);
    walk(second);
    if (first.back() != u) std::swap(first, second);
    assert(first.back() == u && second.back() == v);

    std::vector<int> path(first.rbegin(), first.rend());
    path.insert(path.end(), second.begin() + 1, second.end());
    assert(is_simple_path(g, path, alive) && path.front() == u && path.back() == v);
    return path;
}

inline bool has_path_through(const Graph& g, int u, int v, int w,
                             const std::vector<char>* alive = nullptr) {
    return path_through(g, u, v, w, alive).has_value();
}

}  // namespace vcfc

#endif  // VCFC_PATHS_HPP
