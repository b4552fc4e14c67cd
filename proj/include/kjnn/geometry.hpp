#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

namespace kjnn {

// Dense node index in [0, n).
using NodeId = std::uint32_t;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

// Immutable set of pairwise-distinct points inside the closed unit square.
// All topology constructions operate on node positions held here.
class PointCloud {
public:
    // Validates bounds and distinctness; throws std::invalid_argument.
    explicit PointCloud(std::vector<Point> points);

    // n i.i.d. uniform points on the unit square drawn from a SplitMix64
    // stream seeded with `seed`.  Identical (n, seed) gives bit-identical
    // clouds.  On an exact duplicate (probability ~0, but possible) the
    // offending point is redrawn so the cloud stays pairwise distinct.
    static PointCloud sample_uniform(std::uint32_t n, std::uint64_t seed);

    std::uint32_t size() const noexcept { return static_cast<std::uint32_t>(points_.size()); }
    const Point& operator[](NodeId i) const noexcept { return points_[i]; }
    const std::vector<Point>& points() const noexcept { return points_; }

    double squared_distance(NodeId a, NodeId b) const noexcept {
        const double dx = points_[a].x - points_[b].x;
        const double dy = points_[a].y - points_[b].y;
        return dx * dx + dy * dy;
    }

    double distance(NodeId a, NodeId b) const noexcept {
        return std::sqrt(squared_distance(a, b));
    }

private:
    std::vector<Point> points_;
};

inline PointCloud sample_uniform_points(std::uint32_t n, std::uint64_t seed) {
    return PointCloud::sample_uniform(n, seed);
}

}  // namespace kjnn
