#include "gridset/planarity.hpp"

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/property_map/property_map.hpp>

namespace gridset {

namespace {

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS, boost::no_property,
                          boost::property<boost::edge_index_t, int>>;
using BoostEdge = boost::graph_traits<BoostGraph>::edge_descriptor;

BoostGraph to_boost(const Graph& g) {
    BoostGraph bg(g.num_vertices());
    int idx = 0;
    for (const auto& e : g.edges()) boost::add_edge(e.u, e.v, idx++, bg);
    return bg;
}

}  // namespace

bool is_planar(const Graph& g) {
    BoostGraph bg = to_boost(g);
    return boost::boyer_myrvold_planarity_test(bg);
}

PlanarEmbedding PlanarEmbedding::of(const Graph& g) {
    BoostGraph bg = to_boost(g);
    std::vector<std::vector<BoostEdge>> embedding(g.num_vertices());
    std::vector<BoostEdge> kuratowski;
    bool planar = boost::boyer_myrvold_planarity_test(
        boost::boyer_myrvold_params::graph = bg,
        boost::boyer_myrvold_params::embedding = embedding.data(),
        boost::boyer_myrvold_params::kuratowski_subgraph = std::back_inserter(kuratowski));
    if (!planar) {
        std::vector<Graph::Edge> witness;
        for (const auto& e : kuratowski) {
            int u = static_cast<int>(boost::source(e, bg));
            int v = static_cast<int>(boost::target(e, bg));
            witness.push_back({std::min(u, v), std::max(u, v)});
        }
        throw NonPlanarError(std::move(witness));
    }
    auto edge_index = boost::get(boost::edge_index, bg);
    PlanarEmbedding emb;
    emb.g_ = g;
    emb.rot_.resize(g.num_vertices());
    for (int v = 0; v < g.num_vertices(); ++v)
        for (const auto& e : embedding[v]) emb.rot_[v].push_back(edge_index[e]);
    emb.trace_faces();
    emb.check_euler();
    return emb;
}

PlanarEmbedding planar_embedding(const Graph& g) { return PlanarEmbedding::of(g); }

int PlanarEmbedding::face_of_dart(int edge, int head) const {
    const auto& e = g_.edges().at(edge);
    if (head == e.u) return dart_face_[edge][0];
    if (head == e.v) return dart_face_[edge][1];
    throw Error("face_of_dart: vertex not an endpoint");
}

void PlanarEmbedding::trace_faces() {
    int m = g_.num_edges();
    dart_face_.assign(m, {-1, -1});
    // position of edge e in rot[v], for O(1) successor lookup
    std::vector<std::array<int, 2>> pos(m, {-1, -1});
    for (int v = 0; v < g_.num_vertices(); ++v)
        for (int i = 0; i < static_cast<int>(rot_[v].size()); ++i) {
            int e = rot_[v][i];
            pos[e][g_.edges()[e].u == v ? 0 : 1] = i;
        }
    auto side = [&](int e, int head) { return g_.edges()[e].u == head ? 0 : 1; };
    for (int e0 = 0; e0 < m; ++e0) {
        for (int s0 = 0; s0 < 2; ++s0) {
            if (dart_face_[e0][s0] != -1) continue;
            int face = static_cast<int>(faces_.size());
            faces_.push_back({});
            int e = e0;
            int head = s0 == 0 ? g_.edges()[e0].u : g_.edges()[e0].v;
            while (dart_face_[e][side(e, head)] == -1) {
                dart_face_[e][side(e, head)] = face;
                faces_.back().push_back({e, head});
                const auto& r = rot_[head];
                int i = pos[e][side(e, head)];
                int enext = r[(i + 1) % r.size()];
                const auto& en = g_.edges()[enext];
                head = en.u == head ? en.v : en.u;
                e = enext;
            }
        }
    }
}

void PlanarEmbedding::check_euler() const {
    // per-component Euler formula; faces counted by tracing darts of that component
    if (g_.num_edges() == 0) return;
    auto comps = connected_components(g_);
    if (comps.size() == 1) {
        if (g_.num_vertices() - g_.num_edges() + num_faces() != 2)
            throw Error("embedding violates Euler's formula");
        return;
    }
    std::vector<int> comp(g_.num_vertices(), -1);
    int nc = 0;
    for (const auto& c : comps) {
        for (int v = 0; v < c.num_vertices(); ++v) comp[g_.index_of_label(c.label(v))] = nc;
        ++nc;
    }
    std::vector<int> vcnt(nc, 0), ecnt(nc, 0), fcnt(nc, 0);
    for (int v = 0; v < g_.num_vertices(); ++v) ++vcnt[comp[v]];
    for (const auto& e : g_.edges()) ++ecnt[comp[e.u]];
    for (const auto& f : faces_)
        if (!f.empty()) ++fcnt[comp[f.front().head]];
    for (int c = 0; c < nc; ++c)
        if (ecnt[c] > 0 && vcnt[c] - ecnt[c] + fcnt[c] != 2)
            throw Error("embedding violates Euler's formula");
}

}  // namespace gridset
