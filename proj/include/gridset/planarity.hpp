#ifndef GRIDSET_PLANARITY_HPP
#define GRIDSET_PLANARITY_HPP

#include <array>
#include <vector>

#include "gridset/graph.hpp"

namespace gridset {

struct NonPlanarError : Error {
    std::vector<Graph::Edge> kuratowski;  // witness subgraph edges (may be empty)
    explicit NonPlanarError(std::vector<Graph::Edge> witness)
        : Error("graph is not planar"), kuratowski(std::move(witness)) {}
};

/// Combinatorial embedding (rotation system) of a planar graph.
/// rot[v] lists the incident edge ids of v in cyclic order; faces are the
/// closed walks traced by the rotation system.
class PlanarEmbedding {
public:
    /// A dart is edge `e` traversed towards its `head` endpoint.
    struct Dart {
        int edge, head;
    };

    static PlanarEmbedding of(const Graph& g);  // throws NonPlanarError

    const Graph& graph() const { return g_; }
    const std::vector<std::vector<int>>& rotation() const { return rot_; }
    const std::vector<std::vector<Dart>>& faces() const { return faces_; }
    int num_faces() const { return static_cast<int>(faces_.size()); }

    /// Face containing the dart arriving at `head` along edge `e`.
    int face_of_dart(int edge, int head) const;

private:
    Graph g_;
    std::vector<std::vector<int>> rot_;
    std::vector<std::vector<Dart>> faces_;
    std::vector<std::array<int, 2>> dart_face_;  // per edge: face at u-head, face at v-head

    void trace_faces();
    void check_euler() const;
};

/// Certified linear-time planarity test (Boyer-Myrvold).
bool is_planar(const Graph& g);

/// Rotation system for a planar graph; throws NonPlanarError (with a
/// Kuratowski subgraph witness) on nonplanar input.
PlanarEmbedding planar_embedding(const Graph& g);

}  // namespace gridset

#endif
