#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "kjnn/geometry.hpp"

namespace kjnn {

// Complete nearest-neighbour ranking of a point cloud: for every node u the
// other n-1 nodes sorted by ascending Euclidean distance, with exact
// distance ties broken by ascending NodeId.  Rank 1 is the nearest
// neighbour.  Built once per cloud in O(n^2 log n) by brute force and then
// shared by every topology built on that cloud.
//
// Ordering compares exact squared distances (monotone in distance), so the
// ranking never depends on sqrt rounding.
class NeighborRanking {
public:
    explicit NeighborRanking(const PointCloud& cloud);

    std::uint32_t size() const noexcept { return n_; }

    // All other nodes in ascending-distance order; length n-1.
    std::span<const NodeId> ranked(NodeId u) const;

    // 1-based position of v in u's ranking; rank(u, u) == 0 by convention.
    std::uint32_t rank(NodeId u, NodeId v) const;

    // Distance from u to its idx-th ranked neighbour (0-based idx).
    double ranked_distance(NodeId u, std::uint32_t idx) const;

    // Number of other nodes within closed distance r of u.
    std::uint32_t count_within(NodeId u, double r) const;

private:
    void check_node(NodeId u) const;

    std::uint32_t n_ = 0;
    std::vector<NodeId> ranked_;         // n rows of n-1 ids
    std::vector<double> distances_;      // same layout, non-decreasing per row
    std::vector<std::uint32_t> ranks_;   // n*n lookup, 1-based, 0 on diagonal
};

inline NeighborRanking pairwise_rankings(const PointCloud& cloud) {
    return NeighborRanking(cloud);
}

}  // namespace kjnn
