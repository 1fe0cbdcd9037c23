// Exact computation of the conflict-free vertex-connection number.
//
// feasible_k is a backtracking search over k-colorings with canonical color
// introduction (color c is allowed only if every color below c already
// appears earlier in the assignment order). Vertices are visited block by
// block along the block-cut tree, which enables sound incremental pruning:
// the vertices that can appear on any u-v path are exactly the union of the
// blocks along the block-tree path between u and v, so once that closure is
// fully colored the pair's conflict-free status is final and can be checked
// immediately. On trees this degenerates to checking each already-colored
// subpath. Complete assignments are confirmed by the flow-based verifier.
//
// vcfc_exact wraps feasible_k in iterative deepening from the structural
// lower bound, with optional shortcuts for families whose value is known
// exactly (complete, 2-connected, one cut vertex, paths); every shortcut
// answer is still backed by a verified coloring.
//
// vcfc_brute is an independent oracle: natural vertex order, no bounds, no
// pruning, naive path-enumeration verification.

#ifndef VCFC_SOLVER_HPP
#define VCFC_SOLVER_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "vcfc/bounds.hpp"
#include "vcfc/coloring.hpp"
#include "vcfc/constructions.hpp"
#include "vcfc/decomposition.hpp"
#include "vcfc/graph.hpp"
#include "vcfc/paths.hpp"
#include "vcfc/verifier.hpp"

namespace vcfc {

struct SolveStats {
    std::uint64_t nodes = 0;             // color assignments attempted
    std::uint64_t colorings_tested = 0;  // complete assignments verified
    double elapsed_seconds = 0.0;

    void absorb(const SolveStats& other) {
        nodes += other.nodes;
        colorings_tested += other.colorings_tested;
        elapsed_seconds += other.elapsed_seconds;
    }
};

struct SolveOptions {
    int max_k = 0;                       // search ceiling; 0 = use upper_bound(g)
    std::uint64_t node_budget = 0;       // abort after this many nodes; 0 = unlimited
    bool use_family_shortcuts = true;  // family shortcuts in vcfc_exact
    bool tree_adjacent_distinct = true;  // on trees, adjacent vertices must differ
    bool incremental_pruning = true;     // block-closure pruning during search
};

enum class SearchOutcome {
    Found,        // a verifying k-coloring exists (and is returned)
    NoSolution,   // search space exhausted, no k-coloring works
    OverBudget,   // node budget hit before a definitive answer
};

struct SearchResult {
    SearchOutcome outcome = SearchOutcome::NoSolution;
    std::optional<VertexColoring> coloring;
    SolveStats stats;
};

namespace detail {

// Conflict-free path query restricted to the colored subgraph. Same color/
// carrier scan as the public verifier, but works on a partial assignment
// (colors[x] == 0 means uncolored, never alive).
inline bool pair_ok_partial(const Graph& g, const std::vector<int>& colors, int k, int u, int v,
                            std::vector<char>& alive_scratch) {
    const int n = g.vertex_count();
    for (int c = 1; c <= k; ++c) {
        const bool u_has_c = colors[static_cast<size_t>(u)] == c;
        const bool v_has_c = colors[static_cast<size_t>(v)] == c;
        if (u_has_c && v_has_c) continue;
        for (int x = 0; x < n; ++x)
            alive_scratch[static_cast<size_t>(x)] =
                colors[static_cast<size_t>(x)] != 0 && colors[static_cast<size_t>(x)] != c;
        if (u_has_c || v_has_c) {
            const int w = u_has_c ? u : v;
            alive_scratch[static_cast<size_t>(w)] = 1;
            if (!bfs_path(g, u, v, &alive_scratch).empty()) return true;
            continue;
        }
        for (int w = 0; w < n; ++w) {
            if (colors[static_cast<size_t>(w)] != c) continue;
            alive_scratch[static_cast<size_t>(w)] = 1;
            if (path_through(g, u, v, w, &alive_scratch)) return true;
            alive_scratch[static_cast<size_t>(w)] = 0;
        }
    }
    return false;
}

struct SearchPlan {
    std::vector<int> order;  // visit order; order[0] has maximum degree
    // pairs_due[i]: pairs whose path closure is fully colored once
    // order[0..i] are assigned, i.e. first checkable at step i.
    std::vector<std::vector<std::pair<int, int>>> pairs_due;
    bool tree = false;
    TreeRooting rooting;  // populated when tree
};

inline SearchPlan make_search_plan(const Graph& g) {
    const int n = g.vertex_count();
    SearchPlan plan;
    plan.tree = is_tree(g);
    if (plan.tree) plan.rooting = root_tree(g);

    int start = 0;
    for (int v = 1; v < n; ++v)
        if (g.degree(v) > g.degree(start)) start = v;

    const BlockDecomposition dec = block_decomposition(g);
    const int nblocks = static_cast<int>(dec.blocks.size());
    std::vector<std::vector<int>> blocks_of(static_cast<size_t>(n));
    for (int b = 0; b < nblocks; ++b)
        for (int v : dec.blocks[static_cast<size_t>(b)])
            blocks_of[static_cast<size_t>(v)].push_back(b);

    // Visit order: expand whole blocks depth-first so that closures complete
    // as early as possible.
    std::vector<char> vertex_seen(static_cast<size_t>(n), 0);
    std::vector<char> block_seen(static_cast<size_t>(nblocks), 0);
    plan.order.push_back(start);
    vertex_seen[static_cast<size_t>(start)] = 1;
    std::vector<int> stack{start};
    while (!stack.empty()) {
        const int v = stack.back();
        stack.pop_back();
        for (int b : blocks_of[static_cast<size_t>(v)]) {
            if (block_seen[static_cast<size_t>(b)]) continue;
            block_seen[static_cast<size_t>(b)] = 1;
            for (int w : dec.blocks[static_cast<size_t>(b)])
                if (!vertex_seen[static_cast<size_t>(w)]) {
                    vertex_seen[static_cast<size_t>(w)] = 1;
                    plan.order.push_back(w);
                    stack.push_back(w);
                }
        }
    }

    std::vector<int> pos(static_cast<size_t>(n));
    for (int i = 0; i < n; ++i) pos[static_cast<size_t>(plan.order[static_cast<size_t>(i)])] = i;

    // Block-cut tree: nodes 0..nblocks-1 are blocks, then one node per cut
    // vertex, linked to every block containing it.
    std::vector<int> cut_node(static_cast<size_t>(n), -1);
    int nodes = nblocks;
    for (int v : dec.cut_vertices) cut_node[static_cast<size_t>(v)] = nodes++;
    std::vector<std::vector<int>> bc(static_cast<size_t>(nodes));
    for (int b = 0; b < nblocks; ++b)
        for (int v : dec.blocks[static_cast<size_t>(b)])
            if (cut_node[static_cast<size_t>(v)] != -1) {
                bc[static_cast<size_t>(b)].push_back(cut_node[static_cast<size_t>(v)]);
                bc[static_cast<size_t>(cut_node[static_cast<size_t>(v)])].push_back(b);
            }
    auto node_of = [&](int v) {
        return cut_node[static_cast<size_t>(v)] != -1 ? cut_node[static_cast<size_t>(v)]
                                                      : blocks_of[static_cast<size_t>(v)].front();
    };

    plan.pairs_due.assign(static_cast<size_t>(n), {});
    std::vector<int> via(static_cast<size_t>(nodes));
    for (int v = 1; v < n; ++v)
        for (int u = 0; u < v; ++u) {
            // Closure position: latest-visited vertex in the union of blocks
            // along the block-cut tree path between u and v.
            const int su = node_of(u), sv = node_of(v);
            std::fill(via.begin(), via.end(), -1);
            via[static_cast<size_t>(su)] = su;
            std::vector<int> queue{su};
            for (size_t head = 0; head < queue.size() && via[static_cast<size_t>(sv)] == -1;
                 ++head)
                for (int next : bc[static_cast<size_t>(queue[head])])
                    if (via[static_cast<size_t>(next)] == -1) {
                        via[static_cast<size_t>(next)] = queue[head];
                        queue.push_back(next);
                    }
            int due = std::max(pos[static_cast<size_t>(u)], pos[static_cast<size_t>(v)]);
            for (int node = sv;; node = via[static_cast<size_t>(node)]) {
                if (node < nblocks)
                    for (int x : dec.blocks[static_cast<size_t>(node)])
                        due = std::max(due, pos[static_cast<size_t>(x)]);
                if (node == su) break;
            }
            plan.pairs_due[static_cast<size_t>(due)].emplace_back(u, v);
        }
    return plan;
}

struct SearchState {
    const Graph& g;
    const SearchPlan& plan;
    const SolveOptions& opts;
    int k;
    std::vector<int> colors;
    std::vector<char> scratch;
    CfvcChecker checker;
    SolveStats stats;
    bool over_budget = false;

    SearchState(const Graph& graph, const SearchPlan& p, const SolveOptions& o, int kk)
        : g(graph),
          plan(p),
          opts(o),
          k(kk),
          colors(static_cast<size_t>(graph.vertex_count()), 0),
          scratch(static_cast<size_t>(graph.vertex_count()), 0),
          checker(graph) {}

    bool due_pairs_ok(int idx) {
        for (const auto& [u, v] : plan.pairs_due[static_cast<size_t>(idx)]) {
            if (plan.tree) {
                const auto path = tree_path(plan.rooting.parent, plan.rooting.depth, u, v);
                bool unique = false;
                for (int c = 1; c <= k && !unique; ++c) {
                    int count = 0;
                    for (int x : path)
                        if (colors[static_cast<size_t>(x)] == c) ++count;
                    unique = (count == 1);
                }
                if (!unique) return false;
            } else if (!pair_ok_partial(g, colors, k, u, v, scratch)) {
                return false;
            }
        }
        return true;
    }

    bool dfs(int idx, int colors_used, std::optional<VertexColoring>& out) {
        const int n = g.vertex_count();
        if (idx == n) {
            ++stats.colorings_tested;
            VertexColoring candidate{k, colors};
            if (checker.all_pairs_ok(candidate)) {
                out = std::move(candidate);
                return true;
            }
            return false;
        }
        const int v = plan.order[static_cast<size_t>(idx)];
        const int limit = std::min(k, colors_used + 1);
        for (int c = 1; c <= limit; ++c) {
            if (plan.tree && opts.tree_adjacent_distinct) {
                bool clash = false;
                for (int w : g.neighbors(v))
                    if (colors[static_cast<size_t>(w)] == c) {
                        clash = true;
                        break;
                    }
                if (clash) continue;
            }
            if (opts.node_budget && stats.nodes >= opts.node_budget) {
                over_budget = true;
                return false;
            }
            ++stats.nodes;
            colors[static_cast<size_t>(v)] = c;
            const bool viable = !opts.incremental_pruning || due_pairs_ok(idx);
            if (viable && dfs(idx + 1, std::max(colors_used, c), out)) return true;
            colors[static_cast<size_t>(v)] = 0;
            if (over_budget) return false;
        }
        return false;
    }
};

inline std::vector<int> path_vertex_order(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 1) return {0};
    int start = 0;
    while (g.degree(start) != 1) ++start;
    std::vector<int> order{start};
    int prev = -1, cur = start;
    while (static_cast<int>(order.size()) < n) {
        for (int w : g.neighbors(cur))
            if (w != prev) {
                order.push_back(w);
                prev = cur;
                cur = w;
                break;
            }
    }
    return order;
}

}  // namespace detail

// Search for a conflict-free vertex-connecting coloring with at most k
// colors.
inline SearchResult feasible_k(const Graph& g, int k, const SolveOptions& opts = {}) {
    const int n = g.vertex_count();
    if (!is_connected(g)) throw std::invalid_argument("solving requires a connected graph");
    if (k < 1 || k > n) throw std::invalid_argument("color count must be between 1 and n");

    const auto began = std::chrono::steady_clock::now();
    const detail::SearchPlan plan = detail::make_search_plan(g);
    detail::SearchState state(g, plan, opts, k);
    SearchResult result;
    std::optional<VertexColoring> found;
    const bool hit = state.dfs(0, 0, found);
    result.stats = state.stats;
    result.stats.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - began).count();
    if (hit) {
        result.outcome = SearchOutcome::Found;
        result.coloring = std::move(found);
    } else {
        result.outcome =
            state.over_budget ? SearchOutcome::OverBudget : SearchOutcome::NoSolution;
    }
    return result;
}

struct SolveResult {
    bool complete = false;  // exact value established
    int vcfc = 0;           // meaningful when complete
    VertexColoring coloring;
    CfvcCertificate certificate;
    SolveStats stats;
    int ceiling = 0;              // largest k that was allowed
    bool budget_exhausted = false;  // true when the node budget cut the run short
};

namespace detail {

inline SolveResult finish_solved(const Graph& g, int value, VertexColoring coloring,
                                 SolveStats stats, int ceiling) {
    SolveResult r;
    r.certificate = is_cfvc(g, coloring);
    if (!r.certificate.ok)
        throw std::logic_error("internal error: solver produced a non-verifying coloring");
    r.complete = true;
    r.vcfc = value;
    r.coloring = std::move(coloring);
    r.stats = stats;
    r.ceiling = ceiling;
    return r;
}

}  // namespace detail

inline SolveResult vcfc_exact(const Graph& g, const SolveOptions& opts = {}) {
    const int n = g.vertex_count();
    if (!is_connected(g)) throw std::invalid_argument("solving requires a connected graph");
    const auto began = std::chrono::steady_clock::now();
    auto seal = [&](SolveResult r) {
        r.stats.elapsed_seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - began).count();
        return r;
    };

    if (n == 1)
        return seal(detail::finish_solved(g, 1, VertexColoring{1, {1}}, {}, 1));

    if (opts.use_family_shortcuts) {
        if (is_complete(g)) {
            std::vector<int> colors(static_cast<size_t>(n), 1);
            colors[0] = 2;
            return seal(detail::finish_solved(g, 2, VertexColoring{2, std::move(colors)}, {}, 2));
        }
        if (is_two_connected(g))
            return seal(detail::finish_solved(g, 2, two_coloring_2connected(g, 0), {}, 2));
        if (cut_vertices(g).size() == 1)
            return seal(detail::finish_solved(g, 2, two_coloring_one_cut(g), {}, 2));
        if (is_path_graph(g)) {
            const VertexColoring ruler = ruler_coloring(n);
            std::vector<int> colors(static_cast<size_t>(n));
            const auto order = detail::path_vertex_order(g);
            for (int i = 0; i < n; ++i)
                colors[static_cast<size_t>(order[static_cast<size_t>(i)])] =
                    ruler.colors[static_cast<size_t>(i)];
            return seal(detail::finish_solved(g, ruler.k, VertexColoring{ruler.k, std::move(colors)},
                                              {}, ruler.k));
        }
    }

    const int lb = lower_bound(g).value;
    const int ceiling = opts.max_k > 0 ? std::min(opts.max_k, n) : upper_bound(g).value;
    SolveResult out;
    out.ceiling = ceiling;
    for (int k = lb; k <= ceiling; ++k) {
        SolveOptions inner = opts;
        if (opts.node_budget) {
            if (out.stats.nodes >= opts.node_budget) {
                out.budget_exhausted = true;
                return seal(std::move(out));
            }
            inner.node_budget = opts.node_budget - out.stats.nodes;
        }
        SearchResult r = feasible_k(g, k, inner);
        out.stats.absorb(r.stats);
        if (r.outcome == SearchOutcome::Found) {
            SolveStats total = out.stats;
            return seal(detail::finish_solved(g, k, std::move(*r.coloring), total, ceiling));
        }
        if (r.outcome == SearchOutcome::OverBudget) {
            out.budget_exhausted = true;
            return seal(std::move(out));
        }
    }
    // Definitive: no coloring with at most `ceiling` colors exists.
    return seal(std::move(out));
}

// Independent oracle: enumerate canonical colorings (vertex 0 gets color 1,
// each next vertex may introduce at most one new color) in natural vertex
// order for k = 1, 2, ... and verify with naive path enumeration only.
inline int vcfc_brute(const Graph& g, int cap = 8) {
    const int n = g.vertex_count();
    if (!is_connected(g)) throw std::invalid_argument("solving requires a connected graph");
    if (n > cap) throw std::invalid_argument("brute-force solver capped at " +
                                             std::to_string(cap) + " vertices");
    std::vector<int> colors(static_cast<size_t>(n), 0);
    auto enumerate = [&](auto&& self, int idx, int used, int k) -> bool {
        if (idx == n) {
            if (used != k) return false;  // tried already at smaller k
            return is_cfvc_naive(g, VertexColoring{k, colors});
        }
        const int limit = std::min(k, used + 1);
        for (int c = 1; c <= limit; ++c) {
            colors[static_cast<size_t>(idx)] = c;
            if (self(self, idx + 1, std::max(used, c), k)) return true;
        }
        colors[static_cast<size_t>(idx)] = 0;
        return false;
    };
    for (int k = 1; k <= n; ++k)
        if (enumerate(enumerate, 0, 0, k)) return k;
    throw std::logic_error("internal error: all-distinct coloring should always verify");
}

// Exact value of a spanning tree as an upper bound for the host graph.
inline int spanning_tree_bound(const Graph& g, const Graph& t, const SolveOptions& opts = {}) {
    if (t.vertex_count() != g.vertex_count())
        throw std::invalid_argument("spanning tree must cover every vertex");
    if (!is_tree(t)) throw std::invalid_argument("spanning tree must be a tree");
    for (const auto& [u, v] : t.edge_list())
        if (!g.has_edge(u, v))
            throw std::invalid_argument("spanning tree edge not present in the graph");
    const SolveResult r = vcfc_exact(t, opts);
    if (!r.complete) throw std::runtime_error("spanning tree solve exceeded its budget");
    return r.vcfc;
}

}  // namespace vcfc

#endif  // VCFC_SOLVER_HPP
