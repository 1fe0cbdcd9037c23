#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "vcfc/bounds.hpp"
#include "vcfc/generators.hpp"
#include "vcfc/solver.hpp"
#include "vcfc/verifier.hpp"

using namespace vcfc;

namespace {
SolveOptions pure_search() {
    SolveOptions o;
    o.use_family_shortcuts = false;
    return o;
}
}  // namespace

TEST_CASE("feasible_k on paths") {
    const Graph p7 = path_graph(7);
    const auto found = feasible_k(p7, 3);
    REQUIRE(found.outcome == SearchOutcome::Found);
    REQUIRE(found.coloring.has_value());
    REQUIRE(is_cfvc(p7, *found.coloring).ok);
    REQUIRE(found.coloring->k == 3);

    const auto none = feasible_k(p7, 2);
    REQUIRE(none.outcome == SearchOutcome::NoSolution);

    const Graph k1 = Graph::from_edge_list(1, {});
    const auto single = feasible_k(k1, 1);
    REQUIRE(single.outcome == SearchOutcome::Found);
    REQUIRE(single.coloring->colors == std::vector<int>{1});

    REQUIRE_THROWS_AS(feasible_k(p7, 0), std::invalid_argument);
    REQUIRE_THROWS_AS(feasible_k(p7, 8), std::invalid_argument);
}

TEST_CASE("vcfc_exact frozen values") {
    REQUIRE(vcfc_exact(complete_graph(4)).vcfc == 2);
    REQUIRE(vcfc_exact(corona(cycle_graph(3), 1)).vcfc == 3);
    REQUIRE(vcfc_exact(path_graph(8)).vcfc == 4);
    REQUIRE(vcfc_exact(path_graph(1)).vcfc == 1);
    REQUIRE(vcfc_exact(path_graph(2)).vcfc == 2);
    REQUIRE(vcfc_exact(cycle_graph(5)).vcfc == 2);
    REQUIRE(vcfc_exact(star_graph(8)).vcfc == 2);

    const auto pure = pure_search();
    REQUIRE(vcfc_exact(complete_graph(4), pure).vcfc == 2);
    REQUIRE(vcfc_exact(corona(cycle_graph(3), 1), pure).vcfc == 3);
    REQUIRE(vcfc_exact(path_graph(8), pure).vcfc == 4);
}

TEST_CASE("vcfc_exact returns a verified certificate") {
    for (const Graph& g :
         {path_graph(6), corona(cycle_graph(4), 1), complete_graph(5), star_graph(7)}) {
        for (const auto& opts : {SolveOptions{}, pure_search()}) {
            const auto res = vcfc_exact(g, opts);
            REQUIRE(res.complete);
            REQUIRE(res.certificate.ok);
            REQUIRE(res.coloring.k == res.vcfc);
            REQUIRE_NOTHROW(check_coloring_matches(g, res.coloring));
            // re-verify from scratch, not trusting the stored certificate
            REQUIRE(is_cfvc(g, res.coloring).ok);
        }
    }
}

TEST_CASE("vcfc_brute frozen values") {
    REQUIRE(vcfc_brute(path_graph(5)) == 3);
    REQUIRE(vcfc_brute(star_graph(4)) == 2);  // K_{1,3}, one cut vertex
    REQUIRE(vcfc_brute(Graph::from_edge_list(1, {})) == 1);
    REQUIRE_THROWS_AS(vcfc_brute(path_graph(9)), std::invalid_argument);
    REQUIRE(vcfc_brute(path_graph(9), 9) == 4);
}

TEST_CASE("solver agrees with brute force exhaustively to n=5") {
    const auto pure = pure_search();
    for (int n = 1; n <= 5; ++n)
        for_each_connected_graph(n, [&](const Graph& g) {
            const int want = vcfc_brute(g);
            REQUIRE(vcfc_exact(g).vcfc == want);
            REQUIRE(vcfc_exact(g, pure).vcfc == want);
        });
}

TEST_CASE("node budget is a distinct outcome, never a wrong answer") {
    SolveOptions starved = pure_search();
    starved.node_budget = 3;
    const auto res = vcfc_exact(path_graph(8), starved);
    REQUIRE_FALSE(res.complete);
    REQUIRE(res.budget_exhausted);

    const auto fk = feasible_k(path_graph(8), 4, starved);
    REQUIRE(fk.outcome == SearchOutcome::OverBudget);
}

TEST_CASE("max_k cap yields an incomplete result below the true value") {
    SolveOptions capped = pure_search();
    capped.max_k = 3;
    const auto res = vcfc_exact(path_graph(8), capped);
    REQUIRE_FALSE(res.complete);
    REQUIRE_FALSE(res.budget_exhausted);
    REQUIRE(res.ceiling == 3);
}

TEST_CASE("search stats are populated") {
    const auto res = vcfc_exact(path_graph(7), pure_search());
    REQUIRE(res.stats.nodes > 0);
    REQUIRE(res.stats.elapsed_seconds >= 0.0);
}

TEST_CASE("disconnected input is rejected") {
    const Graph split = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
    REQUIRE_THROWS_AS(vcfc_exact(split), std::invalid_argument);
    REQUIRE_THROWS_AS(vcfc_brute(split), std::invalid_argument);
}

TEST_CASE("incremental pruning does not change answers") {
    SolveOptions no_prune = pure_search();
    no_prune.incremental_pruning = false;
    std::mt19937_64 rng(55);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 3 + static_cast<int>(uniform_below(rng, 5));
        const Graph g = random_connected_graph(n, rng);
        REQUIRE(vcfc_exact(g, no_prune).vcfc == vcfc_exact(g).vcfc);
    }
}
