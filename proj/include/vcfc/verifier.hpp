// Deciding whether a colored graph has a conflict-free path between two
// vertices, i.e. a simple path on which some color appears exactly once.
//
// The decision procedure fixes the witnessing color c and the vertex w that
// carries it: strip every other c-colored vertex and ask for a u-v path
// through w in what is left. Any path in the stripped graph sees c exactly
// once (at w), and conversely a conflict-free path survives the stripping for
// its own witness pair, so scanning all (c, w) pairs is exact. Colors and
// candidates are scanned in ascending order, which pins down the returned
// witness for tests.

#ifndef VCFC_VERIFIER_HPP
#define VCFC_VERIFIER_HPP

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vcfc/coloring.hpp"
#include "vcfc/graph.hpp"
#include "vcfc/paths.hpp"

namespace vcfc {

struct PairWitness {
    int u = 0;
    int v = 0;
    std::vector<int> path;  // simple u-v path
    int color = 0;          // color appearing exactly once on the path
};

namespace detail {

// Unique u-v path in a tree given parent/depth arrays of any rooting.
inline std::vector<int> tree_path(const std::vector<int>& parent, const std::vector<int>& depth,
                                  int u, int v) {
    std::vector<int> from_u, from_v;
    int a = u, b = v;
    while (depth[static_cast<size_t>(a)] > depth[static_cast<size_t>(b)]) {
        from_u.push_back(a);
        a = parent[static_cast<size_t>(a)];
    }
    while (depth[static_cast<size_t>(b)] > depth[static_cast<size_t>(a)]) {
        from_v.push_back(b);
        b = parent[static_cast<size_t>(b)];
    }
    while (a != b) {
        from_u.push_back(a);
        from_v.push_back(b);
        a = parent[static_cast<size_t>(a)];
        b = parent[static_cast<size_t>(b)];
    }
    from_u.push_back(a);
    from_u.insert(from_u.end(), from_v.rbegin(), from_v.rend());
    return from_u;
}

struct TreeRooting {
    std::vector<int> parent;
    std::vector<int> depth;
};

inline TreeRooting root_tree(const Graph& g) {
    const int n = g.vertex_count();
    TreeRooting r{std::vector<int>(static_cast<size_t>(n), -1),
                  std::vector<int>(static_cast<size_t>(n), -1)};
    std::vector<int> queue{0};
    r.depth[0] = 0;
    for (size_t head = 0; head < queue.size(); ++head) {
        int v = queue[head];
        for (int w : g.neighbors(v))
            if (r.depth[static_cast<size_t>(w)] == -1) {
                r.depth[static_cast<size_t>(w)] = r.depth[static_cast<size_t>(v)] + 1;
                r.parent[static_cast<size_t>(w)] = v;
                queue.push_back(w);
            }
    }
    return r;
}

}  // namespace detail

// Witness for the pair (u, v) under the coloring, or nullopt when every
// simple u-v path repeats all of its colors.
inline std::optional<PairWitness> exists_cf_path(const Graph& g, const VertexColoring& coloring,
                                                 int u, int v) {
    check_coloring_matches(g, coloring);
    const int n = g.vertex_count();
    if (u < 0 || u >= n || v < 0 || v >= n) throw std::invalid_argument("vertex out of range");
    if (u == v) throw std::invalid_argument("conflict-free path query needs distinct endpoints");

    if (is_tree(g)) {
        auto rooting = detail::root_tree(g);
        auto path = detail::tree_path(rooting.parent, rooting.depth, u, v);
        if (auto c = unique_color_on(coloring, path))
            return PairWitness{u, v, std::move(path), *c};
        return std::nullopt;
    }

    std::vector<char> alive(static_cast<size_t>(n), 0);
    for (int c = 1; c <= coloring.k; ++c) {
        const bool u_has_c = coloring.color_of(u) == c;
        const bool v_has_c = coloring.color_of(v) == c;
        if (u_has_c && v_has_c) continue;  // c occurs at both endpoints of any u-v path

        for (int x = 0; x < n; ++x) alive[static_cast<size_t>(x)] = coloring.color_of(x) != c;

        if (u_has_c || v_has_c) {
            // The endpoint colored c must itself be the unique carrier.
            const int w = u_has_c ? u : v;
            alive[static_cast<size_t>(w)] = 1;
            auto path = bfs_path(g, u, v, &alive);
            if (!path.empty()) return PairWitness{u, v, std::move(path), c};
            continue;
        }

        for (int w = 0; w < n; ++w) {
            if (coloring.color_of(w) != c) continue;
            alive[static_cast<size_t>(w)] = 1;
            if (auto path = path_through(g, u, v, w, &alive))
                return PairWitness{u, v, std::move(*path), c};
            alive[static_cast<size_t>(w)] = 0;
        }
    }
    return std::nullopt;
}

struct CfvcCertificate {
    bool ok = false;
    // One witness per unordered pair {u, v} with u < v when ok. Pairs are
    // scanned in column-major order: (0,1), (0,2), (1,2), (0,3), ...
    std::vector<PairWitness> witnesses;
    // First failing pair in scan order when not ok.
    std::optional<std::pair<int, int>> failing_pair;
};

// Full check that the coloring makes every vertex pair conflict-free
// connected. Witness extraction is skipped after the first failure.
inline CfvcCertificate is_cfvc(const Graph& g, const VertexColoring& coloring) {
    check_coloring_matches(g, coloring);
    if (!is_connected(g))
        throw std::invalid_argument("conflict-free connection is defined for connected graphs");
    const int n = g.vertex_count();
    CfvcCertificate cert;
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            auto witness = exists_cf_path(g, coloring, u, v);
            if (!witness) {
                cert.ok = false;
                cert.witnesses.clear();
                cert.failing_pair = {u, v};
                return cert;
            }
            cert.witnesses.push_back(std::move(*witness));
        }
    cert.ok = true;
    return cert;
}

// Reference implementation by brute-force path enumeration, for testing the
// decision procedure against. Exponential in the number of paths.
inline std::optional<PairWitness> exists_cf_path_naive(const Graph& g,
                                                       const VertexColoring& coloring, int u,
                                                       int v) {
    check_coloring_matches(g, coloring);
    if (u == v) throw std::invalid_argument("conflict-free path query needs distinct endpoints");
    const int n = g.vertex_count();
    std::vector<char> used(static_cast<size_t>(n), 0);
    std::vector<int> path{u};
    used[static_cast<size_t>(u)] = 1;
    std::optional<PairWitness> found;

    auto dfs = [&](auto&& self, int at) -> bool {
        if (at == v) {
            if (auto c = unique_color_on(coloring, path)) {
                found = PairWitness{u, v, path, *c};
                return true;
            }
            return false;
        }
        for (int w : g.neighbors(at)) {
            if (used[static_cast<size_t>(w)]) continue;
            used[static_cast<size_t>(w)] = 1;
            path.push_back(w);
            if (self(self, w)) return true;
            path.pop_back();
            used[static_cast<size_t>(w)] = 0;
        }
        return false;
    };
    dfs(dfs, u);
    return found;
}

inline bool is_cfvc_naive(const Graph& g, const VertexColoring& coloring) {
    check_coloring_matches(g, coloring);
    if (!is_connected(g))
        throw std::invalid_argument("conflict-free connection is defined for connected graphs");
    const int n = g.vertex_count();
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u)
            if (!exists_cf_path_naive(g, coloring, u, v)) return false;
    return true;
}

namespace detail {

// Repeated-verification helper for search: precomputes what it can for a
// fixed graph and remembers the last failing pair, which tends to fail again
// for sibling colorings.
class CfvcChecker {
public:
    explicit CfvcChecker(const Graph& g) : g_(g), tree_(is_tree(g)) {
        if (tree_) rooting_ = root_tree(g);
    }

    bool pair_ok(const VertexColoring& coloring, int u, int v) const {
        if (tree_) {
            auto path = tree_path(rooting_.parent, rooting_.depth, u, v);
            return unique_color_on(coloring, path).has_value();
        }
        return exists_cf_path(g_, coloring, u, v).has_value();
    }

    bool all_pairs_ok(const VertexColoring& coloring) {
        const int n = g_.vertex_count();
        if (hint_ && !pair_ok(coloring, hint_->first, hint_->second)) return false;
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) {
                if (hint_ && hint_->first == u && hint_->second == v) continue;
                if (!pair_ok(coloring, u, v)) {
                    hint_ = {u, v};
                    return false;
                }
            }
        return true;
    }

private:
    const Graph& g_;
    bool tree_;
    TreeRooting rooting_;
    std::optional<std::pair<int, int>> hint_;
};

}  // namespace detail

}  // namespace vcfc

#endif  // VCFC_VERIFIER_HPP
