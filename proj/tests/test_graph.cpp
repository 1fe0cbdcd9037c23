#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "vcfc/generators.hpp"
#include "vcfc/graph.hpp"
#include "vcfc/graph6.hpp"
#include "vcfc/io.hpp"

using namespace vcfc;

namespace {

// Reference graph6 encoder written straight from the format description,
// deliberately sharing no code with the library: N(n) byte is n+63 for
// n <= 62, then the upper triangle in column order (x[j][i] for j<i),
// packed big-endian into 6-bit groups, each +63, zero-padded at the end.
std::string reference_graph6(const Graph& g) {
    const int n = g.vertex_count();
    std::string out(1, static_cast<char>(63 + n));
    int acc = 0, bits = 0;
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) {
            acc = (acc << 1) | (g.has_edge(j, i) ? 1 : 0);
            if (++bits == 6) {
                out.push_back(static_cast<char>(63 + acc));
                acc = 0;
                bits = 0;
            }
        }
    if (bits > 0) out.push_back(static_cast<char>(63 + (acc << (6 - bits))));
    return out;
}

}  // namespace

TEST_CASE("from_edge_list builds simple graphs") {
    const Graph k2 = Graph::from_edge_list(2, {{0, 1}});
    REQUIRE(k2.vertex_count() == 2);
    REQUIRE(k2.edge_count() == 1);
    REQUIRE(k2.has_edge(0, 1));
    REQUIRE(k2.has_edge(1, 0));

    const Graph k4 = complete_graph(4);
    REQUIRE(k4.edge_count() == 6);
    for (int v = 0; v < 4; ++v) REQUIRE(k4.degree(v) == 3);

    SECTION("rejects self-loops") {
        REQUIRE_THROWS_AS(Graph::from_edge_list(3, {{0, 0}}), std::invalid_argument);
    }
    SECTION("rejects out-of-range endpoints") {
        REQUIRE_THROWS_AS(Graph::from_edge_list(2, {{0, 2}}), std::invalid_argument);
        REQUIRE_THROWS_AS(Graph::from_edge_list(2, {{-1, 0}}), std::invalid_argument);
    }
    SECTION("rejects duplicate edges in either orientation") {
        REQUIRE_THROWS_AS(Graph::from_edge_list(3, {{0, 1}, {1, 0}}), std::invalid_argument);
        REQUIRE_THROWS_AS(Graph::from_edge_list(3, {{0, 1}, {0, 1}}), std::invalid_argument);
    }
}

TEST_CASE("adjacency lists are sorted and symmetric") {
    std::mt19937_64 rng(99);
    for (int trial = 0; trial < 50; ++trial) {
        const int n = 2 + static_cast<int>(uniform_below(rng, 9));
        const Graph g = random_connected_graph(n, rng);
        std::size_t degree_sum = 0;
        for (int v = 0; v < n; ++v) {
            const auto& nb = g.neighbors(v);
            REQUIRE(std::is_sorted(nb.begin(), nb.end()));
            degree_sum += nb.size();
            for (int u : nb) {
                REQUIRE(u != v);
                REQUIRE(g.has_edge(u, v));
            }
        }
        REQUIRE(degree_sum == 2 * g.edge_count());
    }
}

TEST_CASE("graph6 codec matches frozen literals") {
    REQUIRE(to_graph6(Graph::from_edge_list(2, {{0, 1}})) == "A_");
    REQUIRE(to_graph6(complete_graph(4)) == "C~");
    REQUIRE(to_graph6(Graph::from_edge_list(1, {})) == "@");
    REQUIRE(to_graph6(path_graph(3)) == "Bg");

    REQUIRE(from_graph6("A_") == Graph::from_edge_list(2, {{0, 1}}));
    REQUIRE(from_graph6("C~") == complete_graph(4));
    REQUIRE(from_graph6("@") == Graph::from_edge_list(1, {}));
    REQUIRE(from_graph6("Bg") == path_graph(3));
}

TEST_CASE("graph6 codec agrees with an independent reference encoder") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(uniform_below(rng, 20));
        const Graph g = n == 1 ? Graph::from_edge_list(1, {}) : random_connected_graph(n, rng);
        const std::string code = to_graph6(g);
        REQUIRE(code == reference_graph6(g));
        REQUIRE(from_graph6(code) == g);
    }
    // and at the top of the supported range
    const Graph big = path_graph(62);
    REQUIRE(from_graph6(to_graph6(big)) == big);
    REQUIRE(to_graph6(big) == reference_graph6(big));
}

TEST_CASE("graph6 codec rejects malformed input") {
    REQUIRE_THROWS_AS(from_graph6(""), std::invalid_argument);
    REQUIRE_THROWS_AS(from_graph6("A"), std::invalid_argument);    // missing bits
    REQUIRE_THROWS_AS(from_graph6("A_extra"), std::invalid_argument);
    REQUIRE_THROWS_AS(from_graph6("A\x20"), std::invalid_argument);  // byte < 63
    REQUIRE_THROWS_AS(from_graph6("~??"), std::invalid_argument);  // long form unsupported
    REQUIRE_THROWS_AS(to_graph6(path_graph(63)), std::invalid_argument);
    // nonzero padding bits: K2 with trailing garbage in the pad
    REQUIRE_THROWS_AS(from_graph6("A`"), std::invalid_argument);
}

TEST_CASE("is_connected") {
    REQUIRE(is_connected(path_graph(5)));
    REQUIRE(is_connected(Graph::from_edge_list(1, {})));
    const Graph two_edges = Graph::from_edge_list(4, {{0, 1}, {2, 3}});
    REQUIRE_FALSE(is_connected(two_edges));
}

TEST_CASE("graph shape predicates") {
    REQUIRE(is_tree(path_graph(6)));
    REQUIRE(is_tree(star_graph(5)));
    REQUIRE_FALSE(is_tree(cycle_graph(4)));
    REQUIRE(is_path_graph(path_graph(6)));
    REQUIRE_FALSE(is_path_graph(star_graph(5)));
    REQUIRE(is_path_graph(Graph::from_edge_list(1, {})));
    REQUIRE(is_complete(complete_graph(5)));
    REQUIRE_FALSE(is_complete(cycle_graph(4)));
}

TEST_CASE("graph6 line reader skips blanks and the optional header") {
    std::istringstream in(">>graph6<<\nA_\n\nBg\n");
    std::vector<int> lines;
    const auto graphs = read_graph6_lines(in, &lines);
    REQUIRE(graphs.size() == 2);
    REQUIRE(graphs[0] == Graph::from_edge_list(2, {{0, 1}}));
    REQUIRE(graphs[1] == path_graph(3));
    REQUIRE(lines == std::vector<int>{2, 4});
}

TEST_CASE("graph6 line reader reports the offending line") {
    std::istringstream in("A_\n!!\n");
    try {
        read_graph6_lines(in);
        FAIL("expected a parse error");
    } catch (const std::invalid_argument& e) {
        REQUIRE(std::string(e.what()).find("line 2") != std::string::npos);
    }
}

TEST_CASE("edge list round trip") {
    const Graph g = corona(cycle_graph(4), 1);
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream in(out.str());
    REQUIRE(read_edge_list(in) == g);

    std::istringstream bad("3 1\n0 3\n");
    REQUIRE_THROWS_AS(read_edge_list(bad), std::invalid_argument);
    std::istringstream short_file("3 2\n0 1\n");
    REQUIRE_THROWS_AS(read_edge_list(short_file), std::invalid_argument);
}

TEST_CASE("coloring file round trip and validation") {
    const auto coloring = make_coloring(3, {1, 2, 1, 3});
    std::ostringstream out;
    write_coloring(out, coloring);
    std::istringstream in(out.str());
    const auto back = read_coloring(in, 4);
    REQUIRE(back.k == 3);
    REQUIRE(back.colors == coloring.colors);

    // size mismatch: graph has 3 vertices, file colors only 2
    std::istringstream two_lines("2\n0 1\n1 2\n");
    REQUIRE_THROWS_AS(read_coloring(two_lines, 3), std::invalid_argument);
    // color out of palette
    std::istringstream bad_color("2\n0 1\n1 3\n");
    REQUIRE_THROWS_AS(read_coloring(bad_color, 2), std::invalid_argument);
    // vertex listed twice
    std::istringstream dup("2\n0 1\n0 2\n");
    REQUIRE_THROWS_AS(read_coloring(dup, 2), std::invalid_argument);
}
