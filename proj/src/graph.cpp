#include "kjnn/graph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace kjnn {

UndirectedGraph::UndirectedGraph(std::uint32_t node_count,
                                 std::vector<std::pair<NodeId, NodeId>> edges)
    : node_count_(node_count) {
    for (auto& [u, v] : edges) {
        if (u >= node_count_ || v >= node_count_) {
            throw std::invalid_argument("edge endpoint out of range");
        }
        if (u == v) {
            throw std::invalid_argument("self-loops are not allowed");
        }
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
}

bool UndirectedGraph::has_edge(NodeId u, NodeId v) const {
    if (u == v) return false;
    if (u > v) std::swap(u, v);
    return std::binary_search(edges_.begin(), edges_.end(), std::pair{u, v});
}

std::vector<std::uint32_t> UndirectedGraph::degrees() const {
    std::vector<std::uint32_t> deg(node_count_, 0);
    for (const auto& [u, v] : edges_) {
        ++deg[u];
        ++deg[v];
    }
    return deg;
}

namespace {

// Union-find with path halving and union by size.
class DisjointSet {
public:
    explicit DisjointSet(std::uint32_t n) : parent_(n), size_(n, 1), components_(n) {
        std::iota(parent_.begin(), parent_.end(), NodeId{0});
    }

    NodeId find(NodeId x) {
        while (parent_[x] != x) {
            parent_[x] = parent_[parent_[x]];
            x = parent_[x];
        }
        return x;
    }

    void unite(NodeId a, NodeId b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
        --components_;
    }

    std::uint32_t components() const noexcept { return components_; }

private:
    std::vector<NodeId> parent_;
    std::vector<std::uint32_t> size_;
    std::uint32_t components_;
};

DisjointSet union_edges(const UndirectedGraph& g) {
    DisjointSet dsu(g.node_count());
    for (const auto& [u, v] : g.edges()) dsu.unite(u, v);
    return dsu;
}

}  // namespace

bool is_connected(const UndirectedGraph& g) {
    if (g.node_count() <= 1) return true;
    return union_edges(g).components() == 1;
}

std::vector<NodeId> connected_components(const UndirectedGraph& g) {
    DisjointSet dsu = union_edges(g);
    const std::uint32_t n = g.node_count();
    std::vector<NodeId> label(n, 0);
    // Scanning ids in ascending order makes the first node of each
    // component claim the root, so labels are component minima.
    std::vector<NodeId> root_label(n, n);
    for (NodeId u = 0; u < n; ++u) {
        const NodeId root = dsu.find(u);
        if (root_label[root] == n) root_label[root] = u;
        label[u] = root_label[root];
    }
    return label;
}

DegreeStats degree_stats(const UndirectedGraph& g) {
    const std::uint32_t n = g.node_count();
    if (n == 0) {
        throw std::invalid_argument("degree statistics need at least one node");
    }
    const std::vector<std::uint32_t> deg = g.degrees();
    DegreeStats stats;
    stats.mean = 2.0 * static_cast<double>(g.edge_count()) / static_cast<double>(n);
    stats.min = *std::min_element(deg.begin(), deg.end());
    stats.max = *std::max_element(deg.begin(), deg.end());
    std::map<std::uint32_t, std::uint32_t> counts;
    for (std::uint32_t d : deg) ++counts[d];
    for (const auto& [d, c] : counts) {
        stats.histogram[d] = static_cast<double>(c) / static_cast<double>(n);
    }
    return stats;
}

}  // namespace kjnn
