#ifndef GRIDSET_GRAPH_HPP
#define GRIDSET_GRAPH_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gridset {

struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Undirected simple graph with dense vertex indices 0..n-1 and optional
/// external labels (bus numbers). Self-loops and parallel edges are removed
/// at construction.
class Graph {
public:
    struct Edge {
        int u, v;  // u < v
        bool operator==(const Edge& o) const { return u == o.u && v == o.v; }
        bool operator<(const Edge& o) const { return u < o.u || (u == o.u && v < o.v); }
    };

    Graph() = default;

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    bool has_edge(int u, int v) const;

    /// External label of a dense index (defaults to the index itself).
    int label(int v) const { return labels_.at(v); }
    const std::vector<int>& labels() const { return labels_; }
    int index_of_label(int label) const;

    /// Edge id in [0, num_edges()) for endpoints u, v; -1 if absent.
    int edge_id(int u, int v) const;

    static Graph from_edges(const std::vector<std::pair<int, int>>& label_pairs);
    static Graph from_edges(const std::vector<std::pair<int, int>>& label_pairs,
                            const std::vector<int>& isolated_labels);

    /// Subgraph on the same vertex set keeping only the given edges.
    Graph edge_subgraph(const std::vector<Edge>& keep) const;

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<int>> adj_;
    std::vector<int> labels_;
    std::map<int, int> label_to_index_;

    void build_adjacency();
};

/// build_graph relabels arbitrary integer labels to dense indices, dropping
/// self-loops and duplicate edges.
Graph build_graph(const std::vector<std::pair<int, int>>& edge_pairs);

/// Vertex-disjoint connected components, each as a graph carrying the
/// original external labels.
std::vector<Graph> connected_components(const Graph& g);

bool is_connected(const Graph& g);

}  // namespace gridset

#endif
