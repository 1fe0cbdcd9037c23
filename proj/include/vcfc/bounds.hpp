// Lower and upper bounds on the conflict-free vertex-connection number, each
// tagged with the rule that produced it. All logarithm math is exact integer
// arithmetic; no floating point.

#ifndef VCFC_BOUNDS_HPP
#define VCFC_BOUNDS_HPP

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "vcfc/decomposition.hpp"
#include "vcfc/graph.hpp"
#include "vcfc/metrics.hpp"

namespace vcfc {

// ceil(log2(x)) for x >= 1.
inline int ceil_log2(int x) {
    if (x < 1) throw std::invalid_argument("ceil_log2 needs a positive argument");
    return std::bit_width(static_cast<unsigned>(x - 1));
}

// Value of the path formula: the connection number of the n-vertex path,
// ceil(log2(n+1)).
inline int path_vcfc(int n) {
    if (n < 1) throw std::invalid_argument("path order must be positive");
    return std::bit_width(static_cast<unsigned>(n));
}

// floor(log_{3/2}(n)) for n >= 1, via exact comparison 3^k <= n * 2^k.
inline int floor_log_3_2(int n) {
    if (n < 1) throw std::invalid_argument("floor_log_3_2 needs a positive argument");
    int k = 0;
    std::int64_t pow3 = 3, pow2 = 2;
    while (pow3 <= static_cast<std::int64_t>(n) * pow2) {
        ++k;
        pow3 *= 3;
        pow2 *= 2;
    }
    return k;
}

enum class BoundRule {
    Trivial2,        // every nontrivial graph needs two colors
    TrivialN,        // all-distinct coloring always works
    TwoCutVertices,  // two or more cut vertices force a third color
    TreeLogDiameter, // tree lower bound from the diametral path
    TreeChromatic,   // trees are bipartite, chi = 2
    Radius,          // level coloring from a central vertex
    TreeRanking,     // vertex ranking bound for trees
    TreeHalfOrder,   // ceil(n/2) bound for trees on >= 5 vertices
    SpanningTree,    // value of any spanning tree dominates
};

inline const char* to_string(BoundRule rule) {
    switch (rule) {
        case BoundRule::Trivial2: return "trivial-2";
        case BoundRule::TrivialN: return "trivial-n";
        case BoundRule::TwoCutVertices: return "two-cut-vertices";
        case BoundRule::TreeLogDiameter: return "tree-log-diameter";
        case BoundRule::TreeChromatic: return "tree-chromatic";
        case BoundRule::Radius: return "radius";
        case BoundRule::TreeRanking: return "tree-iyer";
        case BoundRule::TreeHalfOrder: return "tree-half-order";
        case BoundRule::SpanningTree: return "spanning-tree";
    }
    return "?";
}

struct Bound {
    int value = 0;
    BoundRule rule = BoundRule::Trivial2;
};

struct BoundsReport {
    Bound lower;
    Bound upper;
};

// Best known lower bound. With strict_tree_diameter the tree term uses
// ceil(log2(d+2)) (the diametral path has d+1 vertices) instead of the
// default ceil(log2(d+1)).
inline Bound lower_bound(const Graph& g, bool strict_tree_diameter = false) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("bounds are defined for graphs on >= 2 vertices");
    if (!is_connected(g)) throw std::invalid_argument("bounds require a connected graph");

    Bound best{2, BoundRule::Trivial2};
    auto improve = [&best](int value, BoundRule rule) {
        if (value > best.value) best = {value, rule};
    };

    if (is_tree(g)) {
        const int d = compute_metrics(g).diameter;
        improve(ceil_log2(d + (strict_tree_diameter ? 2 : 1)), BoundRule::TreeLogDiameter);
        // Chromatic bound: trees with an edge are bipartite, chi = 2. Same
        // value as trivial-2, but the more specific tag reads better.
        if (best.value == 2) best.rule = BoundRule::TreeChromatic;
    }
    if (static_cast<int>(cut_vertices(g).size()) >= 2) improve(3, BoundRule::TwoCutVertices);
    return best;
}

inline Bound upper_bound(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 2) throw std::invalid_argument("bounds are defined for graphs on >= 2 vertices");
    if (!is_connected(g)) throw std::invalid_argument("bounds require a connected graph");

    Bound best{n, BoundRule::TrivialN};
    auto improve = [&best](int value, BoundRule rule) {
        if (value < best.value) best = {value, rule};
    };

    improve(compute_metrics(g).radius + 1, BoundRule::Radius);
    if (is_tree(g)) {
        if (n >= 3) improve(floor_log_3_2(n), BoundRule::TreeRanking);
        if (n >= 5) improve((n + 1) / 2, BoundRule::TreeHalfOrder);
    }
    return best;
}

inline BoundsReport bounds_report(const Graph& g, bool strict_tree_diameter = false) {
    return {lower_bound(g, strict_tree_diameter), upper_bound(g)};
}

}  // namespace vcfc

#endif  // VCFC_BOUNDS_HPP
