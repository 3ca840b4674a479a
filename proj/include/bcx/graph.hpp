#ifndef BCX_GRAPH_HPP
#define BCX_GRAPH_HPP

#include <utility>
#include <vector>

#include "bcx/element_set.hpp"

namespace bcx {

// Simple undirected graph; vertices 1..l, edges indexed 1..m in input order
// (the edge index is the matroid element label).
struct SimpleGraph {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;  // u < v after normalization

    SimpleGraph() = default;
    SimpleGraph(int l, std::vector<std::pair<int, int>> e);

    int edge_count() const { return static_cast<int>(edges.size()); }
    // 1-based edge index, 0 if absent.
    int edge_index(int u, int v) const;

    std::vector<std::vector<int>> adjacency() const;  // 1-based, neighbor lists
    int component_count() const;
    bool connected() const;

    // Edge sets of all simple cycles (length >= 3), each found once.
    std::vector<ElementSet> cycle_edge_sets() const;
};

bool graphs_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

// One representative per isomorphism class of connected simple graphs with
// 1..max_edges edges. Grown edge-by-edge, so every class appears exactly once.
std::vector<SimpleGraph> connected_graphs_up_to(int max_edges);

}  // namespace bcx

#endif
