// Reusable verification suites over exhaustive and seeded-random corpora.
// Each suite returns its verdict plus a human-readable summary; the CLI
// regress command and the acceptance harness both run these.

#ifndef VCFC_REGRESSION_HPP
#define VCFC_REGRESSION_HPP

#include <chrono>
#include <cstdint>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "vcfc/bounds.hpp"
#include "vcfc/constructions.hpp"
#include "vcfc/decomposition.hpp"
#include "vcfc/generators.hpp"
#include "vcfc/graph6.hpp"
#include "vcfc/metrics.hpp"
#include "vcfc/solver.hpp"
#include "vcfc/verifier.hpp"

namespace vcfc::regression {

struct SuiteResult {
    std::string name;
    bool pass = false;
    std::string details;
};

inline constexpr std::uint64_t kDefaultSeed = 20240817;

// Labeled connected graph counts for n = 1..7, used to confirm the
// enumeration stream is complete.
inline constexpr std::uint64_t kConnectedCounts[8] = {0, 1, 1, 4, 38, 728, 26704, 1866256};

// ---------------------------------------------------------------------------
// Exhaustive sweep over all labeled connected graphs with n <= max_n (<= 6).
// One enumeration pass feeds several independent checks.
struct SmallSweep {
    int max_n = 6;
    std::uint64_t graphs = 0;
    bool counts_ok = true;          // stream sizes match the known counts
    bool oracle_ok = true;          // brute == search == search-with-shortcuts
    bool characterization_ok = true;  // value 2 iff 2-connected or one cut vertex
    bool degree_condition_ok = true;  // >=2 cuts and n-4 <= max degree <= n-2 forces 3
    std::uint64_t degree_condition_hits = 0;
    bool bounds_ok = true;          // lower <= value <= upper
    bool conjecture_ok = true;      // value <= path formula
    std::string first_failure;
};

inline SmallSweep run_small_sweep(int max_n = 6) {
    SmallSweep sweep;
    sweep.max_n = max_n;
    auto note = [&sweep](const std::string& what, const Graph& g) {
        if (sweep.first_failure.empty())
            sweep.first_failure = what + " on " + to_graph6(g);
    };
    SolveOptions pure;
    pure.use_family_shortcuts = false;
    for (int n = 1; n <= max_n; ++n) {
        std::uint64_t count = 0;
        for_each_connected_graph(n, [&](const Graph& g) {
            ++count;
            ++sweep.graphs;
            const int by_search = vcfc_exact(g, pure).vcfc;
            const int by_shortcut = vcfc_exact(g).vcfc;
            const int by_brute = vcfc_brute(g);
            if (by_search != by_brute || by_shortcut != by_brute) {
                sweep.oracle_ok = false;
                note("solver disagreement", g);
            }
            if (n >= 3) {
                const bool looks_two = is_two_connected(g) || cut_vertices(g).size() == 1;
                if ((by_brute == 2) != looks_two) {
                    sweep.characterization_ok = false;
                    note("characterization mismatch", g);
                }
            }
            if (n >= 2) {
                const auto b = bounds_report(g);
                if (b.lower.value > by_brute || by_brute > b.upper.value) {
                    sweep.bounds_ok = false;
                    note("bounds violated", g);
                }
                const int dmax = g.max_degree();
                if (cut_vertices(g).size() >= 2 && n - 4 <= dmax && dmax <= n - 2) {
                    ++sweep.degree_condition_hits;
                    if (by_brute != 3) {
                        sweep.degree_condition_ok = false;
                        note("degree condition mismatch", g);
                    }
                }
            }
            if (by_brute > path_vcfc(n)) {
                sweep.conjecture_ok = false;
                note("conjecture violated", g);
            }
        });
        if (n < 8 && count != kConnectedCounts[n]) {
            sweep.counts_ok = false;
            if (sweep.first_failure.empty())
                sweep.first_failure = "enumeration count mismatch at n=" + std::to_string(n) +
                                      ": " + std::to_string(count);
        }
    }
    return sweep;
}

// ---------------------------------------------------------------------------
// Exhaustive pass over all labeled connected graphs on 7 vertices with the
// standard solver. Checks the degree condition, the bounds sandwich, and the
// n = 7 instance of the path-bound conjecture.
struct SevenSweep {
    std::uint64_t graphs = 0;
    bool counts_ok = true;
    bool degree_condition_ok = true;
    std::uint64_t degree_condition_hits = 0;
    bool bounds_ok = true;
    bool conjecture_ok = true;
    std::string first_failure;
};

inline SevenSweep run_seven_sweep() {
    SevenSweep sweep;
    auto note = [&sweep](const std::string& what, const Graph& g) {
        if (sweep.first_failure.empty())
            sweep.first_failure = what + " on " + to_graph6(g);
    };
    for_each_connected_graph(7, [&](const Graph& g) {
        ++sweep.graphs;
        const auto b = bounds_report(g);
        const int value = vcfc_exact(g).vcfc;
        if (b.lower.value > value || value > b.upper.value) {
            sweep.bounds_ok = false;
            note("bounds violated", g);
        }
        const int dmax = g.max_degree();
        if (cut_vertices(g).size() >= 2 && 3 <= dmax && dmax <= 5) {
            ++sweep.degree_condition_hits;
            if (value != 3) {
                sweep.degree_condition_ok = false;
                note("degree condition mismatch", g);
            }
        }
        if (value > path_vcfc(7)) {
            sweep.conjecture_ok = false;
            note("conjecture violated", g);
        }
    });
    if (sweep.graphs != kConnectedCounts[7]) {
        sweep.counts_ok = false;
        if (sweep.first_failure.empty())
            sweep.first_failure =
                "enumeration count mismatch at n=7: " + std::to_string(sweep.graphs);
    }
    return sweep;
}

// ---------------------------------------------------------------------------
// Path family: exact values for n = 2..12 by search, brute cross-check up to
// n = 9, and the ruler coloring verified up to n = 64.
inline SuiteResult check_path_formula(int search_max_n = 12, int brute_max_n = 9,
                                      int ruler_max_n = 64) {
    SuiteResult r{"path-formula", true, ""};
    std::ostringstream detail;
    SolveOptions pure;
    pure.use_family_shortcuts = false;
    for (int n = 2; n <= search_max_n && r.pass; ++n) {
        const Graph p = path_graph(n);
        const int want = path_vcfc(n);
        if (vcfc_exact(p, pure).vcfc != want) {
            r.pass = false;
            detail << "search value wrong for n=" << n;
        }
        if (n <= brute_max_n && vcfc_brute(p, 9) != want) {
            r.pass = false;
            detail << "brute value wrong for n=" << n;
        }
    }
    for (int n = 1; n <= ruler_max_n && r.pass; ++n) {
        const auto coloring = ruler_coloring(n);
        if (coloring.k != path_vcfc(n) || !is_cfvc(path_graph(n), coloring).ok) {
            r.pass = false;
            detail << "ruler coloring failed for n=" << n;
        }
    }
    if (r.pass)
        detail << "paths n=2.." << search_max_n << " exact (brute to n=" << brute_max_n
               << "), ruler verified to n=" << ruler_max_n;
    r.details = detail.str();
    return r;
}

inline SuiteResult check_complete_graphs(int max_n = 8) {
    SuiteResult r{"complete-graphs", true, ""};
    const auto began = std::chrono::steady_clock::now();
    SolveOptions pure;
    pure.use_family_shortcuts = false;
    std::ostringstream detail;
    for (int n = 2; n <= max_n && r.pass; ++n) {
        const Graph k = complete_graph(n);
        if (vcfc_exact(k).vcfc != 2 || vcfc_exact(k, pure).vcfc != 2) {
            r.pass = false;
            detail << "wrong value for order " << n;
        }
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - began).count();
    if (elapsed >= 1.0) r.pass = false;
    if (r.pass)
        detail << "orders 2.." << max_n << " all 2, " << elapsed << "s";
    r.details = detail.str();
    return r;
}

// ---------------------------------------------------------------------------
// Family of graphs whose cut edges form a star: hub 0, spokes to t leaves,
// and a cycle block hanging on every leaf (plus one on the hub for some
// variants, and always for t = 1 so that both bridge endpoints cut).
inline Graph star_cutedge_family_graph(int t, int variant) {
    if (t < 1 || t > 5 || variant < 0 || variant > 4)
        throw std::invalid_argument("family is defined for t=1..5, variant=0..4");
    std::vector<Edge> edges;
    int next = 1 + t;
    auto attach_cycle = [&edges, &next](int at, int size) {
        std::vector<int> ring{at};
        for (int i = 1; i < size; ++i) ring.push_back(next++);
        for (int i = 0; i < size; ++i)
            edges.emplace_back(ring[static_cast<size_t>(i)],
                               ring[static_cast<size_t>((i + 1) % size)]);
    };
    for (int leaf = 1; leaf <= t; ++leaf) {
        edges.emplace_back(0, leaf);
        int size = 3;
        if (variant == 1) size = 4;
        if (variant == 2) size = 5;
        if (variant == 3) size = (leaf % 2 == 1) ? 3 : 4;
        attach_cycle(leaf, size);
    }
    if (t == 1 || variant == 4) attach_cycle(0, variant == 4 ? 4 : 3);
    return Graph::from_edge_list(next, edges);
}

inline SuiteResult check_star_cutedge_family() {
    SuiteResult r{"cut-edge-star-family", true, ""};
    int checked = 0;
    std::ostringstream detail;
    for (int t = 1; t <= 5 && r.pass; ++t)
        for (int variant = 0; variant <= 4 && r.pass; ++variant) {
            const Graph g = star_cutedge_family_graph(t, variant);
            ++checked;
            const auto coloring = star_cutedges_3coloring(g);
            if (!is_cfvc(g, coloring).ok) {
                r.pass = false;
                detail << "pattern coloring failed for t=" << t << " variant=" << variant;
                break;
            }
            if (vcfc_exact(g).vcfc != 3) {
                r.pass = false;
                detail << "value not 3 for t=" << t << " variant=" << variant;
            }
        }
    if (r.pass) detail << checked << " graphs: pattern verifies, exact value 3";
    r.details = detail.str();
    return r;
}

inline SuiteResult check_corona_family(int max_cycle = 6, int max_t = 3) {
    SuiteResult r{"cycle-corona-family", true, ""};
    int checked = 0;
    std::ostringstream detail;
    for (int n = 3; n <= max_cycle && r.pass; ++n)
        for (int t = 1; t <= max_t && r.pass; ++t) {
            const Graph g = corona(cycle_graph(n), t);
            ++checked;
            const auto coloring = corona_3coloring(g);
            if (!is_cfvc(g, coloring).ok) {
                r.pass = false;
                detail << "pattern coloring failed for cycle " << n << ", t=" << t;
                break;
            }
            if (vcfc_exact(g).vcfc != 3) {
                r.pass = false;
                detail << "value not 3 for cycle " << n << ", t=" << t;
            }
        }
    if (r.pass) detail << checked << " coronas: pattern verifies, exact value 3";
    r.details = detail.str();
    return r;
}

// Path on 7 vertices with a triangle glued to one endpoint; three colors are
// not enough for it.
inline Graph path7_with_triangle() {
    std::vector<Edge> edges;
    for (int i = 0; i + 1 < 7; ++i) edges.emplace_back(i, i + 1);
    edges.emplace_back(6, 7);
    edges.emplace_back(7, 8);
    edges.emplace_back(6, 8);
    return Graph::from_edge_list(9, edges);
}

inline SuiteResult check_triangle_tail_needs_four() {
    SuiteResult r{"triangle-tail-lower", true, ""};
    const Graph g = path7_with_triangle();
    SolveOptions pure;
    pure.use_family_shortcuts = false;
    const int value = vcfc_exact(g).vcfc;
    const int value_pure = vcfc_exact(g, pure).vcfc;
    r.pass = value >= 4 && value == value_pure;
    std::ostringstream detail;
    detail << "value " << value << " (pure search " << value_pure << "), want >= 4";
    r.details = detail.str();
    return r;
}

// ---------------------------------------------------------------------------
// Random trees: bounds sandwich plus both explicit tree colorings.
inline SuiteResult check_tree_bounds(int samples = 200, int min_n = 3, int max_n = 12,
                                     std::uint64_t seed = kDefaultSeed) {
    SuiteResult r{"tree-bounds", true, ""};
    std::mt19937_64 rng(seed);
    std::ostringstream detail;
    for (int i = 0; i < samples && r.pass; ++i) {
        const int n =
            min_n + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_n - min_n + 1)));
        const Graph t = random_tree(n, rng);
        const auto m = compute_metrics(t);
        const int value = vcfc_exact(t).vcfc;
        int lo = std::max(2, ceil_log2(m.diameter + 1));
        int hi = std::min(m.radius + 1, floor_log_3_2(n));
        if (n >= 5) hi = std::min(hi, (n + 1) / 2);
        const auto lib = bounds_report(t);
        const bool sandwich = lo <= value && value <= hi && lib.lower.value <= value &&
                              value <= lib.upper.value;
        const bool level_ok = is_cfvc(t, tree_level_coloring(t)).ok;
        const auto ranking = centroid_ranking(t);
        const bool ranking_ok = ranking.k <= ceil_log2(n + 1) &&
                                is_cfvc(t, ranking_as_coloring(t, ranking)).ok;
        if (!sandwich || !level_ok || !ranking_ok) {
            r.pass = false;
            detail << "failure on sample " << i << " (" << to_graph6(t) << "): value " << value
                   << " bounds [" << lo << "," << hi << "]"
                   << (level_ok ? "" : ", level coloring failed")
                   << (ranking_ok ? "" : ", ranking coloring failed");
        }
    }
    if (r.pass)
        detail << samples << " random trees n=" << min_n << ".." << max_n
               << ": sandwich holds, both colorings verify";
    r.details = detail.str();
    return r;
}

// ---------------------------------------------------------------------------
// Verifier oracle agreement: flow-based decision vs naive path enumeration.
inline SuiteResult check_verifier_oracle(int samples = 1000, int max_n = 9,
                                         std::uint64_t seed = kDefaultSeed,
                                         int exhaustive_max_n = 5) {
    SuiteResult r{"verifier-oracle", true, ""};
    std::ostringstream detail;
    std::mt19937_64 rng(seed);

    auto agree_on_all_pairs = [&](const Graph& g, const VertexColoring& coloring) {
        const int n = g.vertex_count();
        for (int v = 1; v < n; ++v)
            for (int u = 0; u < v; ++u) {
                const auto fast = exists_cf_path(g, coloring, u, v);
                const auto slow = exists_cf_path_naive(g, coloring, u, v);
                if (fast.has_value() != slow.has_value()) return false;
                if (fast) {
                    // Witness must re-validate independently.
                    if (!is_simple_path(g, fast->path) || fast->path.front() != u ||
                        fast->path.back() != v)
                        return false;
                    int count = 0;
                    for (int x : fast->path)
                        if (coloring.color_of(x) == fast->color) ++count;
                    if (count != 1) return false;
                }
            }
        return true;
    };

    for (int i = 0; i < samples && r.pass; ++i) {
        const int n = 2 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(max_n - 1)));
        const Graph g = random_connected_graph(n, rng);
        const int k = std::min(n, 2 + static_cast<int>(uniform_below(rng, 3)));
        std::vector<int> colors(static_cast<size_t>(n));
        for (int& c : colors) c = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(k)));
        if (!agree_on_all_pairs(g, VertexColoring{k, std::move(colors)})) {
            r.pass = false;
            detail << "disagreement on random sample " << i << " (" << to_graph6(g) << ")";
        }
    }

    std::uint64_t exhaustive_checked = 0;
    for (int n = 2; n <= exhaustive_max_n && r.pass; ++n) {
        for_each_connected_graph(n, [&](const Graph& g) {
            if (!r.pass) return;
            const int kcap = std::min(n, 3);
            std::vector<int> colors(static_cast<size_t>(n), 0);
            auto enumerate = [&](auto&& self, int idx, int used) -> void {
                if (!r.pass) return;
                if (idx == n) {
                    ++exhaustive_checked;
                    if (!agree_on_all_pairs(g, VertexColoring{kcap, colors})) {
                        r.pass = false;
                        detail << "disagreement on " << to_graph6(g);
                    }
                    return;
                }
                const int limit = std::min(kcap, used + 1);
                for (int c = 1; c <= limit && r.pass; ++c) {
                    colors[static_cast<size_t>(idx)] = c;
                    self(self, idx + 1, std::max(used, c));
                }
            };
            enumerate(enumerate, 0, 0);
        });
    }
    if (r.pass)
        detail << samples << " random colored graphs (n<=" << max_n << ") and "
               << exhaustive_checked << " exhaustive colorings (n<=" << exhaustive_max_n
               << ", k<=3) agree";
    r.details = detail.str();
    return r;
}

// ---------------------------------------------------------------------------
// Solver oracle agreement on random graphs beyond the exhaustive range.
inline SuiteResult check_solver_random(int samples = 500, std::uint64_t seed = kDefaultSeed) {
    SuiteResult r{"solver-oracle-random", true, ""};
    std::mt19937_64 rng(seed);
    std::ostringstream detail;
    SolveOptions pure;
    pure.use_family_shortcuts = false;
    for (int i = 0; i < samples && r.pass; ++i) {
        const int n = 7 + static_cast<int>(uniform_below(rng, 2));
        const Graph g = random_connected_graph(n, rng);
        const int by_brute = vcfc_brute(g);
        const int by_search = vcfc_exact(g, pure).vcfc;
        const int by_shortcut = vcfc_exact(g).vcfc;
        const auto b = bounds_report(g);
        if (by_brute != by_search || by_brute != by_shortcut || b.lower.value > by_brute ||
            by_brute > b.upper.value) {
            r.pass = false;
            detail << "mismatch on sample " << i << " (" << to_graph6(g) << "): brute "
                   << by_brute << ", search " << by_search << ", shortcut " << by_shortcut;
        }
    }
    if (r.pass) detail << samples << " random graphs n=7,8: all three solvers agree";
    r.details = detail.str();
    return r;
}

// Spanning-tree domination spot check.
inline SuiteResult check_spanning_tree_bound(int samples = 100,
                                             std::uint64_t seed = kDefaultSeed) {
    SuiteResult r{"spanning-tree-bound", true, ""};
    std::mt19937_64 rng(seed);
    std::ostringstream detail;
    for (int i = 0; i < samples && r.pass; ++i) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 8));
        const Graph g = random_connected_graph(n, rng);
        const Graph t = spanning_tree(g);
        const int host = vcfc_exact(g).vcfc;
        const int bound = spanning_tree_bound(g, t);
        if (host > bound) {
            r.pass = false;
            detail << "spanning tree bound violated on sample " << i << " (" << to_graph6(g)
                   << "): " << host << " > " << bound;
        }
    }
    if (r.pass) detail << samples << " host/spanning-tree pairs: bound holds";
    r.details = detail.str();
    return r;
}

// ---------------------------------------------------------------------------
// Search enumerated trees on lo..hi vertices with max degree n-5 for one of
// value 4. Existence is reported either way; this is a probe, not an assert.
struct TreeProbe {
    bool found = false;
    int trees_checked = 0;
    std::string details;
};

inline TreeProbe probe_trees_maxdeg_value4(int lo = 8, int hi = 11) {
    TreeProbe probe;
    std::ostringstream detail;
    for (int n = lo; n <= hi; ++n) {
        for_each_free_tree(n, [&](const Graph& t) {
            if (t.max_degree() != n - 5) return;
            ++probe.trees_checked;
            if (vcfc_exact(t).vcfc == 4 && !probe.found) {
                probe.found = true;
                detail << "found: n=" << n << " tree " << to_graph6(t) << "; ";
            }
        });
    }
    detail << probe.trees_checked << " trees with max degree n-5 on " << lo << ".." << hi
           << " vertices examined; value-4 witness " << (probe.found ? "exists" : "absent");
    probe.details = detail.str();
    return probe;
}

}  // namespace vcfc::regression

#endif  // VCFC_REGRESSION_HPP
