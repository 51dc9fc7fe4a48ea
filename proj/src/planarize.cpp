#include "gridset/planarize.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "gridset/planarity.hpp"

namespace gridset {

Graph spanning_tree(const Graph& g) {
    if (!is_connected(g)) throw Error("spanning_tree requires a connected graph");
    int n = g.num_vertices();
    std::vector<bool> seen(n, false);
    std::vector<std::pair<int, int>> tree_edges;
    std::deque<int> queue{0};
    seen[0] = true;
    while (!queue.empty()) {
        int v = queue.front();
        queue.pop_front();
        for (int u : g.neighbors(v))
            if (!seen[u]) {
                seen[u] = true;
                tree_edges.push_back({g.label(v), g.label(u)});
                queue.push_back(u);
            }
    }
    std::vector<int> isolated;
    if (n == 1) isolated.push_back(g.label(0));
    return Graph::from_edges(tree_edges, isolated);
}

PlanarizationResult maximal_planar_subgraph(
    const Graph& g, EdgeOrder order,
    const std::vector<std::pair<int, int>>& explicit_priority) {
    if (!is_connected(g)) throw Error("maximal_planar_subgraph requires a connected graph");
    if (is_planar(g)) return {g, {}, true};

    Graph tree = spanning_tree(g);
    std::set<Graph::Edge> in_sub;
    for (const auto& e : tree.edges())
        in_sub.insert({std::min(g.index_of_label(tree.label(e.u)), g.index_of_label(tree.label(e.v))),
                       std::max(g.index_of_label(tree.label(e.u)), g.index_of_label(tree.label(e.v)))});

    std::vector<Graph::Edge> candidates;
    for (const auto& e : g.edges())
        if (!in_sub.count(e)) candidates.push_back(e);

    switch (order) {
        case EdgeOrder::Input:
            break;
        case EdgeOrder::Degree:
            std::stable_sort(candidates.begin(), candidates.end(),
                             [&](const Graph::Edge& a, const Graph::Edge& b) {
                                 return g.degree(a.u) + g.degree(a.v) <
                                        g.degree(b.u) + g.degree(b.v);
                             });
            break;
        case EdgeOrder::Explicit: {
            std::map<Graph::Edge, int> rank;
            int r = 0;
            for (auto [a, b] : explicit_priority) {
                int u = g.index_of_label(a), v = g.index_of_label(b);
                rank[{std::min(u, v), std::max(u, v)}] = ++r;
            }
            std::stable_sort(candidates.begin(), candidates.end(),
                             [&](const Graph::Edge& a, const Graph::Edge& b) {
                                 auto ra = rank.count(a) ? rank[a] : 0;
                                 auto rb = rank.count(b) ? rank[b] : 0;
                                 return ra < rb;
                             });
            break;
        }
    }

    auto as_label_pairs = [&](const std::set<Graph::Edge>& edges) {
        std::vector<std::pair<int, int>> pairs;
        for (const auto& e : edges) pairs.push_back({g.label(e.u), g.label(e.v)});
        return pairs;
    };

    std::vector<Graph::Edge> removed;
    for (const auto& e : candidates) {
        auto trial = in_sub;
        trial.insert(e);
        // planarity is monotone under edge addition, so one pass suffices
        if (is_planar(Graph::from_edges(as_label_pairs(trial))))
            in_sub = std::move(trial);
        else
            removed.push_back(e);
    }

    PlanarizationResult res;
    std::vector<Graph::Edge> keep(in_sub.begin(), in_sub.end());
    res.subgraph = g.edge_subgraph(keep);
    res.removed_edges = removed;
    res.maximality_certified = true;
    for (const auto& e : removed) {
        auto trial = in_sub;
        trial.insert(e);
        if (is_planar(Graph::from_edges(as_label_pairs(trial))))
            res.maximality_certified = false;
    }
    if (!res.maximality_certified) throw Error("planar subgraph not edge-maximal");
    return res;
}

}  // namespace gridset
