#include "kjnn/geometry.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "kjnn/rng.hpp"

namespace kjnn {

namespace {

void validate_cloud(const std::vector<Point>& points) {
    if (points.empty()) {
        throw std::invalid_argument("point cloud must contain at least one point");
    }
    for (const Point& p : points) {
        // Negated comparison also rejects NaN coordinates.
        if (!(p.x >= 0.0 && p.x <= 1.0 && p.y >= 0.0 && p.y <= 1.0)) {
            throw std::invalid_argument("point coordinates must lie in the unit square");
        }
    }
    std::vector<std::pair<double, double>> sorted;
    sorted.reserve(points.size());
    for (const Point& p : points) sorted.emplace_back(p.x, p.y);
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw std::invalid_argument("points must be pairwise distinct");
    }
}

}  // namespace

PointCloud::PointCloud(std::vector<Point> points) : points_(std::move(points)) {
    validate_cloud(points_);
}

PointCloud PointCloud::sample_uniform(std::uint32_t n, std::uint64_t seed) {
    if (n == 0) {
        throw std::invalid_argument("cannot sample an empty point cloud");
    }
    SplitMix64 rng(seed);
    std::vector<Point> points(n);
    for (Point& p : points) {
        p.x = rng.next_unit();
        p.y = rng.next_unit();
    }

    // Redraw exact duplicates until the cloud is distinct.  With 53-bit
    // coordinates a collision is essentially impossible, but rankings need
    // distinctness unconditionally.
    for (bool collided = true; collided;) {
        collided = false;
        std::vector<std::pair<std::pair<double, double>, std::uint32_t>> order;
        order.reserve(n);
        for (std::uint32_t i = 0; i < n; ++i) {
            order.push_back({{points[i].x, points[i].y}, i});
        }
        std::sort(order.begin(), order.end());
        for (std::uint32_t i = 1; i < n; ++i) {
            if (order[i].first == order[i - 1].first) {
                Point& p = points[order[i].second];
                p.x = rng.next_unit();
                p.y = rng.next_unit();
                collided = true;
            }
        }
    }
    return PointCloud(std::move(points));
}

}  // namespace kjnn
