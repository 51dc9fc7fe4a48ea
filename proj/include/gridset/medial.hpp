#ifndef GRIDSET_MEDIAL_HPP
#define GRIDSET_MEDIAL_HPP

#include <vector>

#include "gridset/planarity.hpp"

namespace gridset {

/// Medial graph of a connected plane graph: one vertex per source edge, one
/// edge per face corner. 4-regular (loops at corners of degree-1 vertices
/// count twice). Dual endpoints of each medial edge are recorded for the
/// carving machinery: every corner separates the region around a source
/// vertex from a source face, so the medial's dual is the vertex/face radial
/// structure of the source embedding.
struct MedialGraph {
    int num_vertices = 0;  // == source edge count; medial vertex i is source edge i

    struct MedialEdge {
        int p, q;            // medial vertices (source edge ids); p == q for loops
        int dual_vertex;     // source vertex whose corner this is
        int dual_face;       // source face containing the corner
    };
    std::vector<MedialEdge> edges;

    int degree(int medial_vertex) const;
};

/// Requires a connected embedded source with at least 2 edges.
MedialGraph medial_graph(const PlanarEmbedding& emb);

}  // namespace gridset

#endif
