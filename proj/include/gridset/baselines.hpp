#ifndef GRIDSET_BASELINES_HPP
#define GRIDSET_BASELINES_HPP

#include <vector>

#include "gridset/graph.hpp"

namespace gridset {

struct DominatingSet {
    std::vector<int> members;  // dense vertex indices, ascending
    bool valid = false;
    int cardinality() const { return static_cast<int>(members.size()); }
};

/// Greedy heuristic: repeatedly add the vertex dominating the most
/// currently-undominated vertices (itself included); ties to the smallest
/// index. Always returns a valid dominating set.
DominatingSet greedy_ds(const Graph& g);

struct BnBResult {
    DominatingSet set;
    bool optimal = false;  // proven minimum within the time budget
};

/// Exact branch-and-bound. Branches on the undominated vertex with the
/// fewest remaining candidate dominators; admissible lower bound from a
/// packing of vertices with disjoint candidate sets. On budget exhaustion
/// returns the best incumbent with optimal = false.
BnBResult exact_bnb_ds(const Graph& g, double time_budget_seconds = 60.0);

/// Oracle: subsets enumerated in increasing cardinality; first dominating
/// subset returned. Refuses |V| > 25.
DominatingSet brute_force_ds(const Graph& g);

}  // namespace gridset

#endif
