#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gridset/medial.hpp"
#include "oracles.hpp"

using namespace gridset;

namespace {

Graph cycle(int n) {
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < n; ++i) e.push_back({i, (i + 1) % n});
    return build_graph(e);
}

std::vector<int> degrees(const MedialGraph& m) {
    std::vector<int> deg(m.num_vertices, 0);
    for (const auto& e : m.edges) {
        deg[e.p]++;
        deg[e.q]++;
    }
    return deg;
}

}  // namespace

TEST_CASE("medial of a triangle is a doubled triangle") {
    MedialGraph m = medial_graph(PlanarEmbedding::of(cycle(3)));
    CHECK(m.num_vertices == 3);
    CHECK(m.edges.size() == 6);
    // every pair of medial vertices joined exactly twice
    std::vector<std::vector<int>> mult(3, std::vector<int>(3, 0));
    for (const auto& e : m.edges) {
        mult[e.p][e.q]++;
        mult[e.q][e.p]++;
    }
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            if (i != j) CHECK(mult[i][j] == 2);
}

TEST_CASE("medial of C4 is 4-regular with 8 edges") {
    MedialGraph m = medial_graph(PlanarEmbedding::of(cycle(4)));
    CHECK(m.num_vertices == 4);
    CHECK(m.edges.size() == 8);
    for (int d : degrees(m)) CHECK(d == 4);
}

TEST_CASE("medial is undefined below 2 edges") {
    CHECK_THROWS_WITH_AS(medial_graph(PlanarEmbedding::of(build_graph({{0, 1}}))),
                         "medial undefined", Error);
}

TEST_CASE("medial graphs of random planar graphs are 4-regular") {
    std::mt19937 rng(21);
    for (int i = 0; i < 60; ++i) {
        Graph g = test::random_planar_connected(rng, 12);
        PlanarEmbedding emb = PlanarEmbedding::of(g);
        MedialGraph m = medial_graph(emb);
        CHECK(m.num_vertices == g.num_edges());
        CHECK(static_cast<int>(m.edges.size()) == 2 * g.num_edges());
        for (int d : degrees(m)) CHECK(d == 4);
        // dual endpoints reference source vertices and faces
        for (const auto& e : m.edges) {
            CHECK(e.dual_vertex >= 0);
            CHECK(e.dual_vertex < g.num_vertices());
            CHECK(e.dual_face >= 0);
            CHECK(e.dual_face < emb.num_faces());
        }
    }
}
