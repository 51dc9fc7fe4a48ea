#include "gridset/graph.hpp"

#include <algorithm>
#include <set>

namespace gridset {

bool Graph::has_edge(int u, int v) const {
    const auto& a = adj_.at(u);
    return std::binary_search(a.begin(), a.end(), v);
}

int Graph::index_of_label(int label) const {
    auto it = label_to_index_.find(label);
    if (it == label_to_index_.end()) throw Error("unknown vertex label " + std::to_string(label));
    return it->second;
}

int Graph::edge_id(int u, int v) const {
    if (u > v) std::swap(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), Edge{u, v});
    if (it == edges_.end() || !(*it == Edge{u, v})) return -1;
    return static_cast<int>(it - edges_.begin());
}

void Graph::build_adjacency() {
    adj_.assign(n_, {});
    for (const auto& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& a : adj_) std::sort(a.begin(), a.end());
}

Graph Graph::from_edges(const std::vector<std::pair<int, int>>& label_pairs) {
    return from_edges(label_pairs, {});
}

Graph Graph::from_edges(const std::vector<std::pair<int, int>>& label_pairs,
                        const std::vector<int>& isolated_labels) {
    std::set<int> labels;
    for (auto [a, b] : label_pairs) {
        labels.insert(a);
        labels.insert(b);
    }
    for (int l : isolated_labels) labels.insert(l);
    if (labels.empty()) throw Error("empty graph");

    Graph g;
    for (int l : labels) {
        g.label_to_index_[l] = static_cast<int>(g.labels_.size());
        g.labels_.push_back(l);
    }
    g.n_ = static_cast<int>(g.labels_.size());

    std::set<Edge> dedup;
    for (auto [a, b] : label_pairs) {
        if (a == b) continue;  // self-loop
        int u = g.label_to_index_[a], v = g.label_to_index_[b];
        if (u > v) std::swap(u, v);
        dedup.insert(Edge{u, v});
    }
    g.edges_.assign(dedup.begin(), dedup.end());
    g.build_adjacency();
    return g;
}

Graph Graph::edge_subgraph(const std::vector<Edge>& keep) const {
    Graph g;
    g.n_ = n_;
    g.labels_ = labels_;
    g.label_to_index_ = label_to_index_;
    std::set<Edge> dedup(keep.begin(), keep.end());
    for (const auto& e : dedup)
        if (edge_id(e.u, e.v) < 0) throw Error("edge_subgraph: edge not in graph");
    g.edges_.assign(dedup.begin(), dedup.end());
    g.build_adjacency();
    return g;
}

Graph build_graph(const std::vector<std::pair<int, int>>& edge_pairs) {
    return Graph::from_edges(edge_pairs);
}

std::vector<Graph> connected_components(const Graph& g) {
    int n = g.num_vertices();
    std::vector<int> comp(n, -1);
    int nc = 0;
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (comp[s] >= 0) continue;
        comp[s] = nc;
        stack.push_back(s);
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : g.neighbors(v))
                if (comp[u] < 0) {
                    comp[u] = nc;
                    stack.push_back(u);
                }
        }
        ++nc;
    }
    std::vector<std::vector<std::pair<int, int>>> edges(nc);
    std::vector<std::vector<int>> isolated(nc);
    for (const auto& e : g.edges())
        edges[comp[e.u]].push_back({g.label(e.u), g.label(e.v)});
    for (int v = 0; v < n; ++v)
        if (g.degree(v) == 0) isolated[comp[v]].push_back(g.label(v));
    std::vector<Graph> out;
    for (int c = 0; c < nc; ++c) out.push_back(Graph::from_edges(edges[c], isolated[c]));
    return out;
}

bool is_connected(const Graph& g) {
    return g.num_vertices() > 0 && connected_components(g).size() == 1;
}

}  // namespace gridset
