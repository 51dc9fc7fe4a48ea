#include "gridset/medial.hpp"

namespace gridset {

int MedialGraph::degree(int medial_vertex) const {
    int d = 0;
    for (const auto& e : edges) {
        if (e.p == medial_vertex) ++d;
        if (e.q == medial_vertex) ++d;
    }
    return d;
}

MedialGraph medial_graph(const PlanarEmbedding& emb) {
    const Graph& g = emb.graph();
    if (g.num_edges() < 2) throw Error("medial undefined");
    if (!is_connected(g)) throw Error("medial requires a connected graph");

    MedialGraph m;
    m.num_vertices = g.num_edges();
    for (int v = 0; v < g.num_vertices(); ++v) {
        const auto& r = emb.rotation()[v];
        int d = static_cast<int>(r.size());
        for (int i = 0; i < d; ++i) {
            int e = r[i];
            int enext = r[(i + 1) % d];
            // corner between e and its rotation successor at v lies in the
            // face entered by the dart arriving at v along e
            m.edges.push_back({e, enext, v, emb.face_of_dart(e, v)});
        }
    }
    return m;
}

}  // namespace gridset
