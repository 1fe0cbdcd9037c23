#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "vcfc/coloring.hpp"
#include "vcfc/constructions.hpp"
#include "vcfc/generators.hpp"
#include "vcfc/verifier.hpp"

using namespace vcfc;

TEST_CASE("make_coloring validates the palette") {
    REQUIRE_NOTHROW(make_coloring(2, {1, 2, 1}));
    REQUIRE_THROWS_AS(make_coloring(2, {1, 3}), std::invalid_argument);
    REQUIRE_THROWS_AS(make_coloring(2, {0, 1}), std::invalid_argument);
    REQUIRE(make_coloring(5, {1, 2, 1}).colors_used() == 2);
}

TEST_CASE("is_conflict_free_path") {
    auto seq = [](std::vector<int> v) { return v; };
    REQUIRE(is_conflict_free_path(make_coloring(2, {1, 2, 1}), seq({0, 1, 2})));
    REQUIRE_FALSE(is_conflict_free_path(make_coloring(1, {1, 1}), seq({0, 1})));
    REQUIRE(is_conflict_free_path(make_coloring(1, {1, 1}), seq({0})));
    // the reported unique color is the smallest one
    REQUIRE(unique_color_on(make_coloring(3, {1, 2, 3}), seq({0, 1, 2})) == 1);
    REQUIRE_FALSE(
        unique_color_on(make_coloring(2, {1, 1, 2, 2}), seq({0, 1, 2, 3})).has_value());
}

TEST_CASE("exists_cf_path on fixed cases") {
    SECTION("P3 with palindrome coloring") {
        const auto w = exists_cf_path(path_graph(3), make_coloring(2, {1, 2, 1}), 0, 2);
        REQUIRE(w.has_value());
        REQUIRE(w->path == std::vector<int>{0, 1, 2});
        REQUIRE(w->color == 2);
    }
    SECTION("monochromatic C4 has no conflict-free pair at all") {
        const Graph c4 = cycle_graph(4);
        const auto coloring = make_coloring(1, {1, 1, 1, 1});
        REQUIRE_FALSE(exists_cf_path(c4, coloring, 0, 1).has_value());
        REQUIRE_FALSE(exists_cf_path(c4, coloring, 0, 2).has_value());
    }
    SECTION("one marked vertex suffices on C5") {
        const Graph c5 = cycle_graph(5);
        const auto coloring = make_coloring(2, {2, 1, 1, 1, 1});
        for (int u = 0; u < 5; ++u)
            for (int v = u + 1; v < 5; ++v) {
                const auto w = exists_cf_path(c5, coloring, u, v);
                REQUIRE(w.has_value());
                REQUIRE(is_simple_path(c5, w->path));
            }
    }
    SECTION("u == v is rejected") {
        REQUIRE_THROWS_AS(exists_cf_path(path_graph(3), make_coloring(1, {1, 1, 1}), 1, 1),
                          std::invalid_argument);
    }
}

TEST_CASE("is_cfvc verdicts and certificates") {
    SECTION("P4 with colors 1,2,2,1 fails on the middle pair") {
        const auto cert = is_cfvc(path_graph(4), make_coloring(2, {1, 2, 2, 1}));
        REQUIRE_FALSE(cert.ok);
        REQUIRE(cert.failing_pair == std::make_pair(1, 2));
    }
    SECTION("P7 under the ruler coloring passes with full witnesses") {
        const Graph p7 = path_graph(7);
        const auto cert = is_cfvc(p7, ruler_coloring(7));
        REQUIRE(cert.ok);
        REQUIRE(cert.witnesses.size() == 21);
        for (const auto& w : cert.witnesses) {
            REQUIRE(is_simple_path(p7, w.path));
            REQUIRE(w.path.front() == w.u);
            REQUIRE(w.path.back() == w.v);
            int hits = 0;
            for (int x : w.path)
                if (ruler_coloring(7).color_of(x) == w.color) ++hits;
            REQUIRE(hits == 1);
        }
    }
    SECTION("single vertex is vacuously connected") {
        const auto cert = is_cfvc(Graph::from_edge_list(1, {}), make_coloring(1, {1}));
        REQUIRE(cert.ok);
        REQUIRE(cert.witnesses.empty());
    }
    SECTION("disconnected input is rejected") {
        const Graph split = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
        REQUIRE_THROWS_AS(is_cfvc(split, make_coloring(1, {1, 1, 1, 1})),
                          std::invalid_argument);
    }
}

TEST_CASE("naive enumerator on fixed cases") {
    REQUIRE_FALSE(
        exists_cf_path_naive(path_graph(3), make_coloring(1, {1, 1, 1}), 0, 2).has_value());
    const Graph k3 = complete_graph(3);
    const auto w = exists_cf_path_naive(k3, make_coloring(2, {1, 1, 2}), 0, 1);
    REQUIRE(w.has_value());
    // the direct edge repeats color 1, so the detour through vertex 2 wins
    REQUIRE(w->path == std::vector<int>{0, 2, 1});
    REQUIRE(w->color == 2);
}

TEST_CASE("coloring with all distinct colors always verifies") {
    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 30; ++trial) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 8));
        const Graph g = random_connected_graph(n, rng);
        std::vector<int> colors(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) colors[static_cast<size_t>(v)] = v + 1;
        REQUIRE(is_cfvc(g, make_coloring(n, colors)).ok);
    }
}

// Splitting color classes can only help: each old witness keeps a color that
// appears once on it, because its color class only shrinks.
TEST_CASE("verdicts are monotone under refinement") {
    std::mt19937_64 rng(22);
    int verified = 0;
    while (verified < 25) {
        const int n = 3 + static_cast<int>(uniform_below(rng, 6));
        const Graph g = random_connected_graph(n, rng);
        const int k = 2 + static_cast<int>(uniform_below(rng, 2));
        std::vector<int> base(static_cast<size_t>(n));
        for (int& c : base) c = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(k)));
        const auto before = is_cfvc(g, make_coloring(k, base));
        if (!before.ok) continue;
        ++verified;
        // split one nonempty class by moving one of its vertices to a fresh color
        std::vector<int> refined = base;
        const int pick = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(n)));
        refined[static_cast<size_t>(pick)] = k + 1;
        const auto after = is_cfvc(g, make_coloring(k + 1, refined));
        REQUIRE(after.ok);
        // the old witness paths stay conflict-free under the refinement
        const auto refined_coloring = make_coloring(k + 1, refined);
        for (const auto& w : before.witnesses)
            REQUIRE(is_conflict_free_path(refined_coloring, w.path));
    }
}

TEST_CASE("flow verifier agrees with the naive enumerator on a quick sample") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 120; ++trial) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 6));
        const Graph g = random_connected_graph(n, rng);
        const int k = std::min(n, 1 + static_cast<int>(uniform_below(rng, 3)));
        std::vector<int> colors(static_cast<size_t>(n));
        for (int& c : colors) c = 1 + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(k)));
        const auto coloring = make_coloring(k, colors);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                REQUIRE(exists_cf_path(g, coloring, u, v).has_value() ==
                        exists_cf_path_naive(g, coloring, u, v).has_value());
    }
}
