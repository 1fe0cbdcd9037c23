// Distance metrics for connected graphs: all-pairs BFS distances,
// eccentricities, radius, diameter, center.

#ifndef VCFC_METRICS_HPP
#define VCFC_METRICS_HPP

#include <algorithm>
#include <queue>
#include <stdexcept>
#include <vector>

#include "vcfc/graph.hpp"

namespace vcfc {

inline std::vector<int> bfs_distances(const Graph& g, int source) {
    std::vector<int> dist(static_cast<size_t>(g.vertex_count()), -1);
    std::queue<int> queue;
    dist[static_cast<size_t>(source)] = 0;
    queue.push(source);
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop();
        for (int w : g.neighbors(v)) {
            if (dist[static_cast<size_t>(w)] == -1) {
                dist[static_cast<size_t>(w)] = dist[static_cast<size_t>(v)] + 1;
                queue.push(w);
            }
        }
    }
    return dist;
}

struct GraphMetrics {
    std::vector<std::vector<int>> distances;  // distances[u][v]
    std::vector<int> eccentricity;
    int radius = 0;
    int diameter = 0;
    std::vector<int> center;  // vertices of minimum eccentricity, ascending
};

inline GraphMetrics compute_metrics(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("metrics are undefined for the empty graph");
    GraphMetrics m;
    m.distances.reserve(static_cast<size_t>(n));
    m.eccentricity.resize(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) {
        auto dist = bfs_distances(g, v);
        int ecc = 0;
        for (int d : dist) {
            if (d == -1) throw std::invalid_argument("metrics require a connected graph");
            ecc = std::max(ecc, d);
        }
        m.eccentricity[static_cast<size_t>(v)] = ecc;
        m.distances.push_back(std::move(dist));
    }
    m.radius = *std::min_element(m.eccentricity.begin(), m.eccentricity.end());
    m.diameter = *std::max_element(m.eccentricity.begin(), m.eccentricity.end());
    for (int v = 0; v < n; ++v)
        if (m.eccentricity[static_cast<size_t>(v)] == m.radius) m.center.push_back(v);
    return m;
}

// Lowest-id vertex of minimum eccentricity.
inline int central_vertex(const Graph& g) { return compute_metrics(g).center.front(); }

}  // namespace vcfc

#endif  // VCFC_METRICS_HPP
