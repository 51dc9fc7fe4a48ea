#ifndef GRIDSET_BRANCHDECOMP_HPP
#define GRIDSET_BRANCHDECOMP_HPP

#include <array>
#include <iosfwd>
#include <vector>

#include "gridset/planarity.hpp"

namespace gridset {

/// Unrooted binary tree with one leaf per graph edge. Nodes are dense ids;
/// leaf nodes carry the graph edge they represent, internal nodes have
/// degree three.
struct BranchDecomposition {
    struct Node {
        std::vector<int> nbr;
        int leaf_edge = -1;  // graph edge id for leaves
    };
    std::vector<Node> nodes;
    int width = -1;

    int leaf_count() const;
    std::vector<std::array<int, 2>> tree_edges() const;  // (a, b), a < b
};

/// Rooted form T': z subdivides a chosen tree edge, root r hangs off z.
/// Tree edges are keyed by their lower (child-side) node; omega holds the
/// sorted separator of each such edge, and children gives the two child
/// edges of every non-leaf-incident edge.
struct RootedDecomposition {
    int root = -1, z = -1;
    std::vector<int> parent;                  // -1 for root
    std::vector<std::array<int, 2>> children; // child nodes; -1 if absent
    std::vector<int> leaf_edge;               // graph edge id or -1
    std::vector<std::vector<int>> omega;      // separator of edge (parent[n], n)
    int width = -1;
};

/// True iff a connected graph is a star (the branch-width <= 1 family:
/// a tree with at most one vertex of degree >= 2).
bool is_star(const Graph& g);

/// Decision procedure: branch-width <= k? Runs the carving game on the
/// medial graph for k >= 2; k == 1 is the star family.
bool branch_width_at_most(const PlanarEmbedding& emb, int k);

/// Exact branch-width: 0 for at most one edge, 1 for stars, else
/// ascending search with the decision procedure.
int branch_width(const PlanarEmbedding& emb);

/// Optimal branch-decomposition via safe contractions of the medial graph;
/// validated against branch_width before returning.
BranchDecomposition optimal_branch_decomposition(const PlanarEmbedding& emb);

/// Structural validation plus from-scratch width recomputation.
int validate_decomposition(const Graph& g, const BranchDecomposition& bd);

/// Insert z into tree edge (a, b) and root r above z.
RootedDecomposition root_decomposition(const Graph& g, const BranchDecomposition& bd,
                                       std::array<int, 2> split_edge);

/// Split edge incident to the leaf-count centroid, to balance the subtrees.
std::array<int, 2> default_split_edge(const BranchDecomposition& bd);

/// Interchange format: `bd <|E|> <width>` header, `leaf <id> <u> <v>` per
/// leaf (external labels), `tedge <a> <b>` per tree edge. Bit-exact
/// round-trip.
void write_decomposition(std::ostream& os, const Graph& g, const BranchDecomposition& bd);
BranchDecomposition read_decomposition(std::istream& is, const Graph& g);

}  // namespace gridset

#endif
