#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <string>

#include "vcfc/bounds.hpp"
#include "vcfc/generators.hpp"
#include "vcfc/solver.hpp"

using namespace vcfc;

TEST_CASE("integer log helpers") {
    REQUIRE(ceil_log2(1) == 0);
    REQUIRE(ceil_log2(2) == 1);
    REQUIRE(ceil_log2(3) == 2);
    REQUIRE(ceil_log2(4) == 2);
    REQUIRE(ceil_log2(5) == 3);
    REQUIRE(ceil_log2(1024) == 10);
    REQUIRE(ceil_log2(1025) == 11);

    // floor of log base 3/2, via exact integer comparison 3^k <= n*2^k
    REQUIRE(floor_log_3_2(2) == 1);
    REQUIRE(floor_log_3_2(3) == 2);
    REQUIRE(floor_log_3_2(4) == 3);
    REQUIRE(floor_log_3_2(7) == 4);
    REQUIRE(floor_log_3_2(11) == 5);
    REQUIRE(floor_log_3_2(12) == 6);
}

TEST_CASE("path formula values") {
    REQUIRE(path_vcfc(1) == 1);
    REQUIRE(path_vcfc(2) == 2);
    REQUIRE(path_vcfc(3) == 2);
    REQUIRE(path_vcfc(4) == 3);
    REQUIRE(path_vcfc(7) == 3);
    REQUIRE(path_vcfc(8) == 4);
    REQUIRE(path_vcfc(15) == 4);
    REQUIRE(path_vcfc(16) == 5);
}

TEST_CASE("lower bound on named graphs") {
    const auto p7 = lower_bound(path_graph(7));
    REQUIRE(p7.value == 3);
    REQUIRE(std::string(to_string(p7.rule)) == "tree-log-diameter");

    const auto k4 = lower_bound(complete_graph(4));
    REQUIRE(k4.value == 2);
    REQUIRE(std::string(to_string(k4.rule)) == "trivial-2");

    const auto cor = lower_bound(corona(cycle_graph(3), 1));
    REQUIRE(cor.value == 3);
    REQUIRE(std::string(to_string(cor.rule)) == "two-cut-vertices");

    // bipartite forcing on trees is reported when it is the binding reason
    const auto star = lower_bound(star_graph(5));
    REQUIRE(star.value == 2);
    REQUIRE(std::string(to_string(star.rule)) == "tree-chromatic");
}

TEST_CASE("upper bound on named graphs") {
    const auto p7 = upper_bound(path_graph(7));
    REQUIRE(p7.value == 4);
    REQUIRE(std::string(to_string(p7.rule)) == "radius");

    REQUIRE(upper_bound(star_graph(6)).value == 2);
    REQUIRE(upper_bound(complete_graph(6)).value == 2);

    // P5 hits the half-order bound exactly: vcfc(P5) = 3 = ceil(5/2)
    REQUIRE(upper_bound(path_graph(5)).value == 3);
    REQUIRE(vcfc_brute(path_graph(5)) == 3);
}

TEST_CASE("strict tree diameter flag tightens the log bound") {
    // P8 has edge-diameter 7: printed formula gives ceil(log2 8) = 3, the
    // diametral-path variant gives ceil(log2 9) = 4. Both are valid lower
    // bounds; the stronger one is opt-in.
    const Graph p8 = path_graph(8);
    REQUIRE(lower_bound(p8).value == 3);
    REQUIRE(lower_bound(p8, true).value == 4);
    REQUIRE(vcfc_exact(p8).vcfc == 4);
}

TEST_CASE("bounds report is ordered and ranged") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 9));
        const Graph g = random_connected_graph(n, rng);
        const auto b = bounds_report(g);
        REQUIRE(b.lower.value >= 2);
        REQUIRE(b.lower.value <= b.upper.value);
        REQUIRE(b.upper.value <= n);
        // strict variant may only raise the lower bound
        const auto strict = bounds_report(g, true);
        REQUIRE(strict.lower.value >= b.lower.value);
        REQUIRE(strict.upper.value == b.upper.value);
    }
}

TEST_CASE("bounds reject degenerate inputs") {
    REQUIRE_THROWS_AS(lower_bound(Graph::from_edge_list(1, {})), std::invalid_argument);
    const Graph split = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
    REQUIRE_THROWS_AS(upper_bound(split), std::invalid_argument);
}

TEST_CASE("spanning tree bound") {
    SECTION("C7 through its path spanning tree") {
        const Graph c7 = cycle_graph(7);
        const Graph t = spanning_tree(c7);
        REQUIRE(is_tree(t));
        REQUIRE(spanning_tree_bound(c7, t) == 3);
        REQUIRE(vcfc_exact(c7).vcfc == 2);
    }
    SECTION("K4 through a star spanning tree") {
        const Graph k4 = complete_graph(4);
        const Graph star = Graph::from_edge_list(4, {{0, 1}, {0, 2}, {0, 3}});
        REQUIRE(spanning_tree_bound(k4, star) == 2);
    }
    SECTION("a tree is its own spanning tree") {
        std::mt19937_64 rng(8);
        const Graph t = random_tree(9, rng);
        REQUIRE(spanning_tree_bound(t, t) == vcfc_exact(t).vcfc);
    }
    SECTION("rejects non-spanning and non-subgraph inputs") {
        const Graph c4 = cycle_graph(4);
        REQUIRE_THROWS_AS(spanning_tree_bound(c4, path_graph(3)), std::invalid_argument);
        REQUIRE_THROWS_AS(spanning_tree_bound(c4, cycle_graph(4)), std::invalid_argument);
        const Graph not_sub = Graph::from_edge_list(4, {{0, 1}, {1, 3}, {0, 2}});
        REQUIRE_THROWS_AS(spanning_tree_bound(path_graph(4), not_sub), std::invalid_argument);
    }
}
