#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "kjnn/geometry.hpp"

namespace kjnn {

// Simple undirected graph on nodes 0..n-1.  Edges are canonicalized on
// construction (endpoints ordered, sorted, deduplicated) so structurally
// equal graphs compare equal and iteration order is deterministic.
class UndirectedGraph {
public:
    UndirectedGraph(std::uint32_t node_count,
                    std::vector<std::pair<NodeId, NodeId>> edges);

    std::uint32_t node_count() const noexcept { return node_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    // Canonical edge list: each pair has first < second, ascending order.
    const std::vector<std::pair<NodeId, NodeId>>& edges() const noexcept { return edges_; }

    bool has_edge(NodeId u, NodeId v) const;
    std::vector<std::uint32_t> degrees() const;

    bool operator==(const UndirectedGraph&) const = default;

private:
    std::uint32_t node_count_ = 0;
    std::vector<std::pair<NodeId, NodeId>> edges_;
};

struct DegreeStats {
    double mean = 0.0;          // 2|E|/n, links per node
    std::uint32_t min = 0;
    std::uint32_t max = 0;
    std::map<std::uint32_t, double> histogram;  // degree -> node proportion
};

// True iff the graph is a single connected component (vacuously true for
// n <= 1).  Disjoint-set union with path halving: O(E alpha(n)) and no
// per-call allocation beyond the parent array.
bool is_connected(const UndirectedGraph& g);

// Component label per node; the label is the smallest NodeId in the
// component, so output is canonical.
std::vector<NodeId> connected_components(const UndirectedGraph& g);

// Degree statistics; requires n >= 1.
DegreeStats degree_stats(const UndirectedGraph& g);

}  // namespace kjnn
