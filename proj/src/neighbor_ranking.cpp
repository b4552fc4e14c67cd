#include "kjnn/neighbor_ranking.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace kjnn {

NeighborRanking::NeighborRanking(const PointCloud& cloud) : n_(cloud.size()) {
    const std::size_t row_len = n_ - 1;
    ranked_.resize(static_cast<std::size_t>(n_) * row_len);
    distances_.resize(static_cast<std::size_t>(n_) * row_len);
    ranks_.assign(static_cast<std::size_t>(n_) * n_, 0);

    // Sorting (squared distance, id) pairs gives ascending distance with
    // the ascending-NodeId tie-break for free.
    std::vector<std::pair<double, NodeId>> row;
    row.reserve(row_len);
    for (NodeId u = 0; u < n_; ++u) {
        row.clear();
        for (NodeId v = 0; v < n_; ++v) {
            if (v != u) row.emplace_back(cloud.squared_distance(u, v), v);
        }
        std::sort(row.begin(), row.end());

        const std::size_t base = static_cast<std::size_t>(u) * row_len;
        for (std::size_t i = 0; i < row.size(); ++i) {
            ranked_[base + i] = row[i].second;
            distances_[base + i] = std::sqrt(row[i].first);
            ranks_[static_cast<std::size_t>(u) * n_ + row[i].second] =
                static_cast<std::uint32_t>(i + 1);
        }
    }
}

void NeighborRanking::check_node(NodeId u) const {
    if (u >= n_) {
        throw std::invalid_argument("node id out of range");
    }
}

std::span<const NodeId> NeighborRanking::ranked(NodeId u) const {
    check_node(u);
    return {ranked_.data() + static_cast<std::size_t>(u) * (n_ - 1),
            static_cast<std::size_t>(n_ - 1)};
}

std::uint32_t NeighborRanking::rank(NodeId u, NodeId v) const {
    check_node(u);
    check_node(v);
    return ranks_[static_cast<std::size_t>(u) * n_ + v];
}

double NeighborRanking::ranked_distance(NodeId u, std::uint32_t idx) const {
    check_node(u);
    if (idx >= n_ - 1) {
        throw std::invalid_argument("rank index out of range");
    }
    return distances_[static_cast<std::size_t>(u) * (n_ - 1) + idx];
}

std::uint32_t NeighborRanking::count_within(NodeId u, double r) const {
    check_node(u);
    const auto begin = distances_.begin() + static_cast<std::size_t>(u) * (n_ - 1);
    const auto end = begin + (n_ - 1);
    return static_cast<std::uint32_t>(std::upper_bound(begin, end, r) - begin);
}

}  // namespace kjnn
