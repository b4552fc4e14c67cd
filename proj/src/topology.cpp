#include "kjnn/topology.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace kjnn {

void TopologyParams::validate() const {
    if (k < 1) {
        throw std::invalid_argument("k must be at least 1");
    }
    if (j < 1 || j > k) {
        throw std::invalid_argument("j must satisfy 1 <= j <= k");
    }
}

namespace {

void require_nodes(std::uint32_t n) {
    if (n < 2) {
        throw std::invalid_argument("topology construction needs at least 2 nodes");
    }
}

// Shared core of the k-NN family: every node keeps its out-links at ranks
// [lo_rank, k]; the edge set is the union of kept links over all nodes.
UndirectedGraph build_rank_window(const NeighborRanking& ranking, int k, int lo_rank,
                                  const std::vector<std::uint32_t>* within_counts) {
    const std::uint32_t n = ranking.size();
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(k - lo_rank + 1));
    for (NodeId u = 0; u < n; ++u) {
        const auto row = ranking.ranked(u);
        std::size_t lo = static_cast<std::size_t>(lo_rank) - 1;
        std::size_t hi = std::min<std::size_t>(static_cast<std::size_t>(k), row.size());
        if (within_counts) {
            // Sparse disk: fewer than k nodes in range, keep them all.
            const std::uint32_t within = (*within_counts)[u];
            if (within < static_cast<std::uint32_t>(k)) {
                lo = 0;
                hi = within;
            }
        }
        for (std::size_t i = lo; i < hi; ++i) {
            edges.emplace_back(u, row[i]);
        }
    }
    return UndirectedGraph(n, std::move(edges));
}

}  // namespace

UndirectedGraph build_symmetric_knn(const NeighborRanking& ranking, int k) {
    if (k < 1) {
        throw std::invalid_argument("k must be at least 1");
    }
    require_nodes(ranking.size());
    return build_rank_window(ranking, k, 1, nullptr);
}

UndirectedGraph build_symmetric_kj(const NeighborRanking& ranking, const TopologyParams& params) {
    params.validate();
    require_nodes(ranking.size());
    return build_rank_window(ranking, params.k, params.j, nullptr);
}

UndirectedGraph build_rgg(const PointCloud& cloud, double r) {
    if (!(r > 0.0)) {
        throw std::invalid_argument("radius must be positive");
    }
    const std::uint32_t n = cloud.size();
    std::vector<std::pair<NodeId, NodeId>> edges;
    for (NodeId u = 0; u < n; ++u) {
        for (NodeId v = u + 1; v < n; ++v) {
            if (cloud.distance(u, v) <= r) edges.emplace_back(u, v);
        }
    }
    return UndirectedGraph(n, std::move(edges));
}

UndirectedGraph build_composite(const NeighborRanking& ranking, const TopologyParams& params,
                                double r) {
    params.validate();
    if (!(r > 0.0)) {
        throw std::invalid_argument("radius must be positive");
    }
    require_nodes(ranking.size());
    const std::uint32_t n = ranking.size();
    std::vector<std::uint32_t> within(n);
    for (NodeId u = 0; u < n; ++u) within[u] = ranking.count_within(u, r);
    return build_rank_window(ranking, params.k, params.j, &within);
}

RadiusParams critical_radius(int n, int k, double sigma) {
    if (n < 3) {
        throw std::invalid_argument("n must be at least 3");
    }
    if (k < 1) {
        throw std::invalid_argument("k must be at least 1");
    }
    constexpr double pi = std::numbers::pi;

    double xi = 0.0;
    if (k == 1) {
        // e^-sigma > 0 keeps the log argument strictly positive.
        xi = -2.0 * std::log(std::sqrt(std::exp(-sigma) + pi / 4.0) - std::sqrt(pi) / 2.0);
    } else {
        double log_k_factorial = 0.0;
        if (k <= 20) {  // 20! still fits a 64-bit integer exactly
            std::uint64_t factorial = 1;
            for (int i = 2; i <= k; ++i) factorial *= static_cast<std::uint64_t>(i);
            log_k_factorial = std::log(static_cast<double>(factorial));
        } else {
            log_k_factorial = std::lgamma(static_cast<double>(k) + 1.0);
        }
        xi = 2.0 * (0.5 * std::log(pi) - (k - 1) * std::log(2.0) - log_k_factorial) +
             2.0 * sigma;
    }

    const double log_n = std::log(static_cast<double>(n));
    const double radicand = (log_n + (2.0 * k - 1.0) * std::log(log_n) + xi) / (pi * n);
    if (!(radicand > 0.0)) {
        throw std::domain_error("critical radius undefined: non-positive radicand");
    }
    const double r = std::min(std::sqrt(radicand), std::numbers::sqrt2);
    return RadiusParams{n, k, sigma, xi, r};
}

}  // namespace kjnn
