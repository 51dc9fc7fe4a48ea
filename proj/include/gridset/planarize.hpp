#ifndef GRIDSET_PLANARIZE_HPP
#define GRIDSET_PLANARIZE_HPP

#include <optional>
#include <vector>

#include "gridset/graph.hpp"

namespace gridset {

enum class EdgeOrder {
    Input,    // order edges appear in the source
    Degree,   // ascending endpoint-degree sum
    Explicit  // user-supplied priority list; unlisted edges keep input order first
};

struct PlanarizationResult {
    Graph subgraph;                          // (V, E_p), planar
    std::vector<Graph::Edge> removed_edges;  // E \ E_p
    bool maximality_certified = false;
};

/// Spanning tree of a connected graph (|V|-1 edges, BFS tree).
Graph spanning_tree(const Graph& g);

/// Edge-maximal planar subgraph: start from a spanning tree, add edges in the
/// requested order while planarity is preserved, then certify maximality by
/// re-testing every removed edge. Planar inputs pass through untouched.
PlanarizationResult maximal_planar_subgraph(
    const Graph& g, EdgeOrder order = EdgeOrder::Input,
    const std::vector<std::pair<int, int>>& explicit_priority = {});

}  // namespace gridset

#endif
