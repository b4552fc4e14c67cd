#include <doctest.h>

#include <cmath>
#include <stdexcept>
#include <vector>

#include "fixtures.hpp"
#include "kjnn/graph.hpp"
#include "kjnn/rng.hpp"

using namespace kjnn;

TEST_CASE("edges are canonicalized: ordered endpoints, sorted, deduplicated") {
    const UndirectedGraph g(4, {{2, 1}, {0, 1}, {1, 2}, {3, 2}});
    CHECK(g.edge_count() == 3);
    CHECK(g.edges() == test::EdgeList{{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.has_edge(1, 0));
    CHECK(g.has_edge(2, 3));
    CHECK_FALSE(g.has_edge(0, 2));
    CHECK_FALSE(g.has_edge(1, 1));
    CHECK(g.degrees() == std::vector<std::uint32_t>{1, 2, 2, 1});

    const UndirectedGraph same(4, {{0, 1}, {2, 1}, {2, 3}});
    CHECK(g == same);
}

TEST_CASE("graph construction rejects self-loops and out-of-range endpoints") {
    CHECK_THROWS_AS(UndirectedGraph(3, {{1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(UndirectedGraph(3, {{0, 3}}), std::invalid_argument);
}

TEST_CASE("is_connected handles the textbook cases") {
    CHECK(is_connected(UndirectedGraph(1, {})));
    CHECK(is_connected(UndirectedGraph(4, {{0, 1}, {1, 2}, {2, 3}})));
    CHECK_FALSE(is_connected(UndirectedGraph(4, {{0, 1}, {2, 3}})));
    CHECK_FALSE(is_connected(UndirectedGraph(2, {})));
}

TEST_CASE("connected_components labels by component minimum") {
    CHECK(connected_components(UndirectedGraph(3, {})) == std::vector<NodeId>{0, 1, 2});
    CHECK(connected_components(UndirectedGraph(3, {{0, 1}, {1, 2}})) ==
          std::vector<NodeId>{0, 0, 0});
    CHECK(connected_components(UndirectedGraph(4, {{0, 1}, {2, 3}})) ==
          std::vector<NodeId>{0, 0, 2, 2});
    CHECK(connected_components(UndirectedGraph(5, {{4, 2}, {1, 3}})) ==
          std::vector<NodeId>{0, 1, 2, 1, 2});
}

TEST_CASE("degree_stats matches hand counts") {
    // Symmetric 2-NN graph of the collinear fixture.
    const UndirectedGraph g(4, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {1, 3}});
    const DegreeStats stats = degree_stats(g);
    CHECK(stats.mean == doctest::Approx(2.5));
    CHECK(stats.min == 2);
    CHECK(stats.max == 3);
    REQUIRE(stats.histogram.size() == 2);
    CHECK(stats.histogram.at(2) == doctest::Approx(0.5));
    CHECK(stats.histogram.at(3) == doctest::Approx(0.5));

    const DegreeStats pair = degree_stats(UndirectedGraph(2, {{0, 1}}));
    CHECK(pair.mean == doctest::Approx(1.0));
    CHECK(pair.histogram.at(1) == doctest::Approx(1.0));

    const DegreeStats empty = degree_stats(UndirectedGraph(3, {}));
    CHECK(empty.mean == 0.0);
    CHECK(empty.histogram.at(0) == doctest::Approx(1.0));

    CHECK_THROWS_AS(degree_stats(UndirectedGraph(0, {})), std::invalid_argument);
}

TEST_CASE("degree_stats invariants hold on random graphs") {
    SplitMix64 rng(2024);
    for (int round = 0; round < 50; ++round) {
        const std::uint32_t n = 2 + static_cast<std::uint32_t>(rng.next() % 40);
        test::EdgeList edges;
        for (NodeId u = 0; u < n; ++u) {
            for (NodeId v = u + 1; v < n; ++v) {
                if (rng.next_unit() < 0.2) edges.emplace_back(u, v);
            }
        }
        const UndirectedGraph g(n, edges);
        const DegreeStats stats = degree_stats(g);
        CHECK(stats.mean == 2.0 * static_cast<double>(g.edge_count()) / n);
        CHECK(stats.min <= stats.mean + 1e-12);
        CHECK(stats.mean <= stats.max + 1e-12);
        double sum = 0.0;
        for (const auto& [degree, proportion] : stats.histogram) sum += proportion;
        CHECK(std::abs(sum - 1.0) <= 1e-12);
    }
}

namespace {

// Brute-force reachability oracle: boolean transitive closure.
bool oracle_connected(const UndirectedGraph& g) {
    const std::uint32_t n = g.node_count();
    if (n <= 1) return true;
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (NodeId u = 0; u < n; ++u) reach[u][u] = true;
    for (const auto& [u, v] : g.edges()) {
        reach[u][v] = true;
        reach[v][u] = true;
    }
    for (NodeId m = 0; m < n; ++m) {
        for (NodeId a = 0; a < n; ++a) {
            for (NodeId b = 0; b < n; ++b) {
                if (reach[a][m] && reach[m][b]) reach[a][b] = true;
            }
        }
    }
    for (NodeId v = 1; v < n; ++v) {
        if (!reach[0][v]) return false;
    }
    return true;
}

}  // namespace

TEST_CASE("is_connected agrees with the transitive-closure oracle on 1000 small graphs") {
    SplitMix64 rng(31337);
    for (int round = 0; round < 1000; ++round) {
        const std::uint32_t n = 1 + static_cast<std::uint32_t>(rng.next() % 7);
        const double p = rng.next_unit();
        test::EdgeList edges;
        for (NodeId u = 0; u < n; ++u) {
            for (NodeId v = u + 1; v < n; ++v) {
                if (rng.next_unit() < p) edges.emplace_back(u, v);
            }
        }
        const UndirectedGraph g(n, edges);
        const bool expected = oracle_connected(g);
        CHECK(is_connected(g) == expected);

        const std::vector<NodeId> labels = connected_components(g);
        std::size_t distinct = 0;
        for (NodeId u = 0; u < n; ++u) {
            CHECK(labels[u] <= u);                 // labels are component minima
            CHECK(labels[labels[u]] == labels[u]); // label nodes label themselves
            if (labels[u] == u) ++distinct;
        }
        CHECK((distinct == 1) == expected);
    }
}
