#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "vcfc/decomposition.hpp"
#include "vcfc/generators.hpp"
#include "vcfc/metrics.hpp"
#include "vcfc/paths.hpp"

using namespace vcfc;

TEST_CASE("metrics of named graphs") {
    const auto p7 = compute_metrics(path_graph(7));
    REQUIRE(p7.radius == 3);
    REQUIRE(p7.diameter == 6);
    REQUIRE(p7.center == std::vector<int>{3});
    REQUIRE(path_graph(7).max_degree() == 2);

    const auto k5 = compute_metrics(complete_graph(5));
    REQUIRE(k5.radius == 1);
    REQUIRE(k5.diameter == 1);
    REQUIRE(complete_graph(5).max_degree() == 4);

    const auto star = compute_metrics(star_graph(5));  // K_{1,4}
    REQUIRE(star.radius == 1);
    REQUIRE(star.diameter == 2);
    REQUIRE(star_graph(5).max_degree() == 4);
    REQUIRE(central_vertex(star_graph(5)) == 0);
}

TEST_CASE("metrics invariants on random connected graphs") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 9));
        const Graph g = random_connected_graph(n, rng);
        const auto m = compute_metrics(g);
        REQUIRE(m.radius <= m.diameter);
        REQUIRE(m.diameter <= 2 * m.radius);
        for (int u = 0; u < n; ++u) {
            REQUIRE(m.distances[static_cast<size_t>(u)][static_cast<size_t>(u)] == 0);
            for (int v = 0; v < n; ++v) {
                const int duv = m.distances[static_cast<size_t>(u)][static_cast<size_t>(v)];
                REQUIRE(duv == m.distances[static_cast<size_t>(v)][static_cast<size_t>(u)]);
                const int gap = m.eccentricity[static_cast<size_t>(u)] -
                                m.eccentricity[static_cast<size_t>(v)];
                REQUIRE(std::abs(gap) <= duv);
                for (int w = 0; w < n; ++w)
                    REQUIRE(duv <= m.distances[static_cast<size_t>(u)][static_cast<size_t>(w)] +
                                       m.distances[static_cast<size_t>(w)][static_cast<size_t>(v)]);
            }
        }
    }
}

TEST_CASE("metrics rejects disconnected graphs") {
    const Graph g = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
    REQUIRE_THROWS_AS(compute_metrics(g), std::invalid_argument);
}

TEST_CASE("path_through on small fixed cases") {
    SECTION("C4, opposite detour is forced") {
        // u=0 and v=1 adjacent; w=2 sits opposite u, so the only choice is
        // the long way around: 0-3-2-1.
        const Graph c4 = cycle_graph(4);
        const auto p = path_through(c4, 0, 1, 2);
        REQUIRE(p.has_value());
        REQUIRE(*p == std::vector<int>{0, 3, 2, 1});
    }
    SECTION("P4, unique tree path cannot be detoured") {
        const Graph p4 = path_graph(4);
        REQUIRE_FALSE(path_through(p4, 0, 1, 3).has_value());
        REQUIRE(path_through(p4, 0, 3, 1).has_value());
    }
    SECTION("w equal to an endpoint degenerates to any path") {
        const Graph p4 = path_graph(4);
        const auto p = path_through(p4, 0, 2, 0);
        REQUIRE(p.has_value());
        REQUIRE(p->front() == 0);
        REQUIRE(p->back() == 2);
    }
    SECTION("u == v is rejected") {
        REQUIRE_THROWS_AS(path_through(path_graph(3), 1, 1, 0), std::invalid_argument);
    }
}

TEST_CASE("path_through results validate structurally") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 80; ++trial) {
        const int n = 3 + static_cast<int>(uniform_below(rng, 7));
        const Graph g = random_connected_graph(n, rng);
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v) {
                if (u == v) continue;
                for (int w = 0; w < n; ++w) {
                    const auto p = path_through(g, u, v, w);
                    if (!p) continue;
                    REQUIRE(is_simple_path(g, *p));
                    REQUIRE(p->front() == u);
                    REQUIRE(p->back() == v);
                    REQUIRE(std::find(p->begin(), p->end(), w) != p->end());
                }
            }
    }
}

// Through-vertex guarantee on 2-connected graphs: exhaustive over the small
// enumeration, sampled at orders 7 and 8 with all triples.
TEST_CASE("2-connected graphs admit a u-v path through any w") {
    auto check_all_triples = [](const Graph& g) {
        const int n = g.vertex_count();
        for (int u = 0; u < n; ++u)
            for (int v = 0; v < n; ++v)
                for (int w = 0; w < n && u != v; ++w) {
                    if (u == v) continue;
                    const auto p = path_through(g, u, v, w);
                    REQUIRE(p.has_value());
                }
    };
    for (int n = 3; n <= 6; ++n)
        for_each_connected_graph(n, [&](const Graph& g) {
            if (is_two_connected(g)) check_all_triples(g);
        });
    std::mt19937_64 rng(17);
    for (int n = 7; n <= 8; ++n) {
        int found = 0;
        while (found < 60) {
            const Graph g = random_connected_graph(n, rng);
            if (!is_two_connected(g)) continue;
            ++found;
            check_all_triples(g);
        }
    }
}

TEST_CASE("is_simple_path") {
    const Graph p4 = path_graph(4);
    auto seq = [](std::vector<int> v) { return v; };
    REQUIRE(is_simple_path(p4, seq({0, 1, 2, 3})));
    REQUIRE(is_simple_path(p4, seq({2})));
    REQUIRE_FALSE(is_simple_path(p4, seq({0, 2})));     // not an edge
    REQUIRE_FALSE(is_simple_path(p4, seq({0, 1, 0})));  // repeats a vertex
    REQUIRE_FALSE(is_simple_path(p4, seq({})));
}
