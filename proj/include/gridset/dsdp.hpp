#ifndef GRIDSET_DSDP_HPP
#define GRIDSET_DSDP_HPP

#include <array>
#include <utility>
#include <vector>

#include "gridset/branchdecomp.hpp"
#include "gridset/planarize.hpp"
#include "gridset/report.hpp"

namespace gridset {

/// Separator vertex states: WHITE is dominated but outside the set, GREY is
/// outside the set with domination still open, BLACK is a set member.
enum Color : int { WHITE = 0, GREY = 1, BLACK = 2 };

/// Infinity sentinel for unreachable colorings; saturating addition keeps
/// INF + finite from wrapping. Strictly larger than any vertex count in play.
constexpr int kInfCost = 1 << 28;
inline int sat_add(int a, int b) { return std::min(a + b, kInfCost); }

/// Cost-to-go table A_e over colorings of the sorted separator. Colorings are
/// base-3 indices (digit i = color of verts[i]); `from` carries the traceback
/// payload: a leaf stores its chosen set as a 2-bit endpoint mask in [0],
/// an internal table stores the argmin child index pair.
struct ColorTable {
    std::vector<int> verts;  // sorted separator
    std::vector<int> cost;   // size 3^|verts|
    std::vector<std::array<int, 2>> from;

    int size() const { return static_cast<int>(cost.size()); }
};

/// Table for a leaf-incident tree edge. The leaf's graph edge is {u, v};
/// omega must be a subset of {u, v}. Endpoints outside omega are hidden below
/// the edge and must be dominated or chosen.
ColorTable leaf_table(const Graph& g, int graph_edge, const std::vector<int>& omega);

/// Combine the two child tables of an internal tree edge. Consistency of a
/// child coloring pair follows the X1-X4 partition of the separators; the
/// result subtracts set members counted on both sides. Argmin ties go to the
/// lexicographically smallest (c1, c2) index pair.
ColorTable merge_tables(const std::vector<int>& parent_omega, const ColorTable& a,
                        const ColorTable& b);

/// Final combination at the root: both children carry the same separator;
/// each vertex is chosen on both sides or dominated on exactly one.
/// Returns the optimum and the argmin child index pair.
std::pair<int, std::array<int, 2>> root_combine(const ColorTable& a,
                                                const ColorTable& b);

bool verify_dominating(const Graph& g, const std::vector<int>& d);

/// Run the DP over a rooted decomposition; returns a minimum dominating set
/// as dense vertex indices. max_table_size, when given, receives the largest
/// table built (runtime bound check).
std::vector<int> dp_minimum_dominating_set(const Graph& g, const RootedDecomposition& rd,
                                           int* max_table_size = nullptr);

/// Full pipeline: per connected component, planarity gate, planarization if
/// needed, optimal branch-decomposition, DP, traceback; the result is
/// verified on the original graph. exact is true iff every component was
/// planar. Members in the report use external labels, ascending.
SolveReport solve_planar_mds(const Graph& g, EdgeOrder order = EdgeOrder::Input,
                             const std::vector<std::pair<int, int>>& explicit_priority = {});

}  // namespace gridset

#endif
