#ifndef GRIDSET_CARVING_HPP
#define GRIDSET_CARVING_HPP

#include <utility>
#include <vector>

#include "gridset/medial.hpp"

namespace gridset {

/// Plane multigraph with its dual maintained through edge contractions.
/// Contracting a primal edge deletes its dual edge; loops created by a
/// contraction are dropped, which contracts their dual edges. Vertices are
/// merged through union-find; class representatives stay stable ids.
class PlaneMultigraph {
public:
    struct Edge {
        int h0, h1;  // primal endpoints
        int d0, d1;  // dual endpoints (faces)
        bool alive;
    };

    static PlaneMultigraph from_medial(const MedialGraph& m, int source_vertex_count,
                                       int source_face_count);

    int edge_count() const { return static_cast<int>(edges_.size()); }
    const Edge& edge(int i) const { return edges_[i]; }
    std::vector<int> alive_edges() const;

    int original_vertex_count() const { return static_cast<int>(uf_h_.size()); }
    int find_h(int v) const;
    int find_d(int v) const;
    int alive_vertex_count() const;
    int degree(int h_class) const;  // alive non-loop incident edge count

    /// Weight of the cut around the vertex obtained by contracting edge i.
    int merged_degree(int i) const;

    /// Contract alive non-loop edge i; records the merge as (survivor, absorbed).
    void contract(int i);
    const std::vector<std::pair<int, int>>& merges() const { return merges_; }

private:
    std::vector<Edge> edges_;
    mutable std::vector<int> uf_h_, uf_d_;
    std::vector<std::pair<int, int>> merges_;

    static int find(std::vector<int>& uf, int v);
};

/// Pursuit-game decision in the ratcatcher style (Seymour & Thomas): true
/// iff the game's rat survives threshold k, which tracks whether the
/// carving-width of the plane multigraph is >= k. Unit edge weights. A
/// catcher occupies faces of the plane structure and transits across
/// corners or along edges; an edge is noisy for the rat when a closed curve
/// through the catcher's position reaches it with cost < k, where cost
/// counts corner crossings and edge passes. The rat escapes iff the
/// greatest fixpoint keeps a quiet component for every catcher position.
/// Agrees with exhaustive search everywhere it is unit-tested; the
/// branch-width pipeline additionally re-validates every decomposition it
/// builds, so this decision serves there as a guide, not as the final
/// authority.
bool carving_width_at_least(const PlaneMultigraph& g, int k);

/// Carving-width by ascending search over the decision (small instances /
/// tests).
int carving_width(const PlaneMultigraph& g);

/// Unrooted binary tree whose leaves are the original primal vertices.
struct CarvingTree {
    struct Node {
        int child0 = -1, child1 = -1;  // -1,-1 for leaves
    };
    std::vector<Node> nodes;  // leaves first: node i = original vertex i
    int join_a = -1, join_b = -1;  // roots of the two final subtrees
};

/// Build a carving of width <= k by repeated contraction of edges certified
/// safe by the decision procedure. Throws if no safe contraction exists.
CarvingTree carve_to_width(PlaneMultigraph g, int k);

}  // namespace gridset

#endif
