#pragma once

#include "kjnn/geometry.hpp"
#include "kjnn/graph.hpp"
#include "kjnn/neighbor_ranking.hpp"

namespace kjnn {

// Rank-window parameters shared by the (k,j) constructions: every node
// keeps links to its j-th through k-th nearest neighbours.  j == 1 keeps
// the full k-NN list (plain symmetric k-NN); raising j drops each node's
// shortest j-1 links from its own list.
struct TopologyParams {
    int k = 5;
    int j = 1;

    // Throws std::invalid_argument unless k >= 1 and 1 <= j <= k.
    void validate() const;
};

// Symmetric k-NN graph: edge {u,v} present iff v is among u's k nearest
// neighbours or u is among v's (union symmetrization).  Nodes can therefore
// end up with more than k links; with n > k every degree is at least k.
// k >= n-1 yields the complete graph.
UndirectedGraph build_symmetric_knn(const NeighborRanking& ranking, int k);

// Symmetric (k,j)-NN graph: each node keeps only the links to its j-th
// through k-th nearest neighbours (its j-1 shortest links are dropped from
// its own list), and an edge survives if either endpoint keeps it.  A link
// dropped by one endpoint but kept by the other stays in the graph, so with
// n > k every degree is at least k-j+1.  j == 1 is exactly the symmetric
// k-NN graph.
UndirectedGraph build_symmetric_kj(const NeighborRanking& ranking, const TopologyParams& params);

// Random geometric graph: edge {u,v} iff Euclidean distance(u,v) <= r.
UndirectedGraph build_rgg(const PointCloud& cloud, double r);

// Composite (k,j)+disk construction.  Per node u with disk neighbourhood
// D_r(u) = {v : distance(u,v) <= r}:
//   - if |D_r(u)| < k, u keeps links to every node in D_r(u);
//   - otherwise u keeps links to its j-th..k-th nearest neighbours (all of
//     which lie inside the disk, since at least k nodes do).
// An edge is present iff either endpoint keeps it; every edge therefore has
// length <= r.  With r >= sqrt(2) (disk covers the square) and n > k this
// coincides exactly with build_symmetric_kj.
UndirectedGraph build_composite(const NeighborRanking& ranking, const TopologyParams& params,
                                double r);

// Inputs and results of the critical-radius formula, kept together so the
// intermediate xi can be inspected alongside the resulting radius.
struct RadiusParams {
    int n = 0;
    int k = 0;
    double sigma = 0.0;
    double xi = 0.0;
    double r_n = 0.0;  // in (0, sqrt(2)]
};

// Transmission radius that makes a random geometric graph on n uniform
// nodes asymptotically k-connected:
//
//   r_n = sqrt((ln n + (2k - 1) ln ln n + xi) / (pi n))
//
// where xi = -2 ln(sqrt(e^-sigma + pi/4) - sqrt(pi)/2)        for k == 1
//       xi =  2 ln(sqrt(pi) / (2^(k-1) k!)) + 2 sigma         for k  > 1.
//
// All logarithms are natural.  k! uses the exact integer value for k <= 20
// and the log-gamma route above that to avoid overflow.  Radii beyond the
// unit square's diameter are equivalent on the square, so r_n is clamped to
// sqrt(2).  Throws std::invalid_argument for n < 3 or k < 1 and
// std::domain_error when the radicand is non-positive.
RadiusParams critical_radius(int n, int k, double sigma);

}  // namespace kjnn
