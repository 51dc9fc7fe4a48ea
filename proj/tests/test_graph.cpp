#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "gridset/graph.hpp"

using namespace gridset;

TEST_CASE("build_graph deduplicates and drops self-loops") {
    Graph g = build_graph({{1, 2}, {2, 3}, {2, 3}, {3, 3}});
    CHECK(g.num_vertices() == 3);
    CHECK(g.num_edges() == 2);
    CHECK(g.has_edge(g.index_of_label(1), g.index_of_label(2)));
    CHECK(g.has_edge(g.index_of_label(2), g.index_of_label(3)));
    CHECK_FALSE(g.has_edge(g.index_of_label(1), g.index_of_label(3)));
}

TEST_CASE("empty input is rejected") {
    CHECK_THROWS_WITH_AS(build_graph({}), "empty graph", Error);
}

TEST_CASE("adjacency is symmetric and degree-consistent") {
    Graph g = build_graph({{0, 1}, {1, 2}, {2, 0}, {2, 3}});
    int degsum = 0;
    for (int v = 0; v < g.num_vertices(); ++v) {
        degsum += g.degree(v);
        for (int u : g.neighbors(v)) {
            const auto& back = g.neighbors(u);
            CHECK(std::find(back.begin(), back.end(), v) != back.end());
        }
    }
    CHECK(degsum == 2 * g.num_edges());
}

TEST_CASE("labels survive relabeling round-trip") {
    Graph g = build_graph({{100, 7}, {7, 42}});
    for (int v = 0; v < g.num_vertices(); ++v)
        CHECK(g.index_of_label(g.label(v)) == v);
    CHECK_THROWS_AS((void)g.index_of_label(999), Error);
}

TEST_CASE("edge ids are stable and order-independent") {
    Graph g = build_graph({{0, 1}, {1, 2}});
    for (int e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edges()[e];
        CHECK(g.edge_id(u, v) == e);
        CHECK(g.edge_id(v, u) == e);
    }
    CHECK(g.edge_id(0, 2) == -1);
}

TEST_CASE("rebuilding from extracted edges is idempotent") {
    Graph g = build_graph({{5, 9}, {9, 11}, {11, 5}, {11, 20}});
    std::vector<std::pair<int, int>> pairs;
    for (const auto& e : g.edges()) pairs.push_back({g.label(e.u), g.label(e.v)});
    Graph h = build_graph(pairs);
    CHECK(h.num_vertices() == g.num_vertices());
    CHECK(h.num_edges() == g.num_edges());
    for (const auto& e : g.edges())
        CHECK(h.has_edge(h.index_of_label(g.label(e.u)), h.index_of_label(g.label(e.v))));
}

TEST_CASE("connected components partition the graph") {
    // two disjoint triangles
    Graph g = build_graph({{0, 1}, {1, 2}, {2, 0}, {10, 11}, {11, 12}, {12, 10}});
    auto comps = connected_components(g);
    REQUIRE(comps.size() == 2);
    CHECK(comps[0].num_vertices() == 3);
    CHECK(comps[1].num_vertices() == 3);
    CHECK_FALSE(is_connected(g));
    CHECK(is_connected(comps[0]));
}

TEST_CASE("isolated labels become singleton components") {
    Graph g = Graph::from_edges({{1, 2}}, {7, 8, 9});
    CHECK(g.num_vertices() == 5);
    auto comps = connected_components(g);
    CHECK(comps.size() == 4);
    int singletons = 0;
    for (const auto& c : comps)
        if (c.num_vertices() == 1) ++singletons;
    CHECK(singletons == 3);
}
