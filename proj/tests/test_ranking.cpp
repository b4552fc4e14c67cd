#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "fixtures.hpp"
#include "kjnn/neighbor_ranking.hpp"

using namespace kjnn;

namespace {

std::vector<NodeId> row(const NeighborRanking& ranking, NodeId u) {
    const auto span = ranking.ranked(u);
    return {span.begin(), span.end()};
}

}  // namespace

TEST_CASE("rankings on the collinear fixture match hand computation") {
    const NeighborRanking ranking(test::p4());
    CHECK(row(ranking, 0) == std::vector<NodeId>{1, 2, 3});  // A -> B, C, D
    CHECK(row(ranking, 1) == std::vector<NodeId>{0, 2, 3});  // B -> A, C, D
    CHECK(row(ranking, 2) == std::vector<NodeId>{1, 0, 3});  // C -> B, A, D
    CHECK(row(ranking, 3) == std::vector<NodeId>{2, 1, 0});  // D -> C, B, A

    CHECK(ranking.rank(0, 1) == 1);
    CHECK(ranking.rank(1, 0) == 1);
    CHECK(ranking.rank(0, 3) == 3);
    CHECK(ranking.rank(3, 0) == 3);
    CHECK(ranking.rank(2, 3) == 3);
    CHECK(ranking.rank(3, 2) == 1);
    CHECK(ranking.rank(2, 2) == 0);  // self has no rank

    CHECK(ranking.ranked_distance(0, 0) == doctest::Approx(0.1));
    CHECK(ranking.ranked_distance(3, 2) == doctest::Approx(0.6));
}

TEST_CASE("exact distance ties are broken by ascending node id") {
    // B and C are equidistant from both A and D.
    const PointCloud cloud({{0.0, 0.0}, {0.3, 0.0}, {0.0, 0.3}, {0.3, 0.3}});
    const NeighborRanking ranking(cloud);
    CHECK(row(ranking, 0) == std::vector<NodeId>{1, 2, 3});
    CHECK(row(ranking, 3) == std::vector<NodeId>{1, 2, 0});
}

TEST_CASE("count_within uses closed disks") {
    const NeighborRanking ranking(test::p4());
    CHECK(ranking.count_within(0, 0.25) == 2);   // B at 0.1, C at exactly 0.25
    CHECK(ranking.count_within(0, 0.2499) == 1);
    CHECK(ranking.count_within(3, 0.3) == 0);    // D's nearest is C at 0.35
    CHECK(ranking.count_within(3, 10.0) == 3);
}

TEST_CASE("ranking rows are permutations with non-decreasing distances") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        const PointCloud cloud = PointCloud::sample_uniform(60, seed);
        const NeighborRanking ranking(cloud);
        for (NodeId u = 0; u < cloud.size(); ++u) {
            auto ids = row(ranking, u);
            REQUIRE(ids.size() == cloud.size() - 1);
            for (std::uint32_t i = 0; i + 1 < ids.size(); ++i) {
                CHECK(ranking.ranked_distance(u, i) <= ranking.ranked_distance(u, i + 1));
            }
            for (std::uint32_t i = 0; i < ids.size(); ++i) {
                CHECK(ranking.rank(u, ids[i]) == i + 1);
            }
            std::sort(ids.begin(), ids.end());
            for (std::uint32_t i = 0, expect = 0; i < ids.size(); ++i, ++expect) {
                if (expect == u) ++expect;  // u itself is absent
                CHECK(ids[i] == expect);
            }
        }
    }
}

TEST_CASE("ranking queries validate node ids") {
    const NeighborRanking ranking(test::p4());
    CHECK_THROWS_AS(ranking.ranked(4), std::invalid_argument);
    CHECK_THROWS_AS(ranking.rank(0, 17), std::invalid_argument);
    CHECK_THROWS_AS(ranking.ranked_distance(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(ranking.count_within(9, 0.5), std::invalid_argument);
}
