#include "gridset/branchdecomp.hpp"

#include <numeric>

#include <algorithm>
#include <istream>
#include <map>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "gridset/carving.hpp"
#include "gridset/medial.hpp"

namespace gridset {

int BranchDecomposition::leaf_count() const {
    int c = 0;
    for (const auto& n : nodes)
        if (n.leaf_edge >= 0) ++c;
    return c;
}

std::vector<std::array<int, 2>> BranchDecomposition::tree_edges() const {
    std::vector<std::array<int, 2>> out;
    for (int a = 0; a < static_cast<int>(nodes.size()); ++a)
        for (int b : nodes[a].nbr)
            if (a < b) out.push_back({a, b});
    return out;
}

bool is_star(const Graph& g) {
    if (!is_connected(g)) return false;
    if (g.num_edges() != g.num_vertices() - 1) return false;  // must be a tree
    int centers = 0;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (g.degree(v) >= 2) ++centers;
    return centers <= 1;
}

namespace {

// Path-shaped tree over the edges; width 1 on a star (every separator is
// the center).
BranchDecomposition path_tree(const std::vector<int>& edge_order) {
    BranchDecomposition bd;
    int m = static_cast<int>(edge_order.size());
    bd.nodes.resize(m);
    for (int i = 0; i < m; ++i) bd.nodes[i].leaf_edge = edge_order[i];
    auto link = [&](int a, int b) {
        bd.nodes[a].nbr.push_back(b);
        bd.nodes[b].nbr.push_back(a);
    };
    if (m == 2) {
        link(0, 1);
        return bd;
    }
    int prev = -1;
    for (int i = 0; i + 2 < m; ++i) {
        int internal = static_cast<int>(bd.nodes.size());
        bd.nodes.push_back({});
        link(internal, i == 0 ? 0 : prev);
        if (i == 0) link(internal, 1);
        else link(internal, i + 1);
        prev = internal;
    }
    link(prev, m - 1);
    return bd;
}

// A graph has branch-width at most 2 exactly when it has no K4 minor, i.e.
// when the series-parallel reduction (drop degree-<=1 vertices, suppress
// degree-2 vertices, collapse parallel edges) eliminates every vertex.
bool k4_minor_free(const Graph& g) {
    int n = g.num_vertices();
    std::vector<std::set<int>> adj(n);
    for (const auto& e : g.edges())
        if (e.u != e.v) {
            adj[e.u].insert(e.v);
            adj[e.v].insert(e.u);
        }
    std::vector<char> gone(n, 0);
    bool progress = true;
    while (progress) {
        progress = false;
        for (int v = 0; v < n; ++v) {
            if (gone[v] || adj[v].size() > 2) continue;
            if (adj[v].size() == 2) {
                auto it = adj[v].begin();
                int a = *it++;
                int b = *it;
                adj[a].insert(b);
                adj[b].insert(a);
            }
            for (int u : adj[v]) adj[u].erase(v);
            adj[v].clear();
            gone[v] = 1;
            progress = true;
        }
    }
    for (int v = 0; v < n; ++v)
        if (!gone[v]) return false;
    return true;
}

struct MinorPattern {
    int n;
    std::vector<std::pair<int, int>> edges;
};

MinorPattern octahedron_pattern() {
    // K_{2,2,2}: vertices 2i and 2i+1 form the non-adjacent pairs
    MinorPattern p{6, {}};
    for (int a = 0; a < 6; ++a)
        for (int b = a + 1; b < 6; ++b)
            if ((a ^ 1) != b) p.edges.push_back({a, b});
    return p;
}

MinorPattern cube_pattern() {
    MinorPattern p{8, {}};
    for (int a = 0; a < 8; ++a)
        for (int bit : {1, 2, 4})
            if (a < (a ^ bit)) p.edges.push_back({a, a ^ bit});
    return p;
}

// Exhaustive minor test: grows a connected branch set for each pattern
// vertex in turn, requiring adjacency to the sets of all earlier pattern
// neighbours.  Each connected set is enumerated once via the standard
// include/exclude discipline on the frontier.
struct MinorSearch {
    const std::vector<std::vector<int>>& adj;
    const MinorPattern& p;
    std::vector<std::vector<char>> want;
    std::vector<int> label;  // host vertex -> pattern vertex, or -1
    int n;
    long budget = 4000000;  // search nodes; exhaustion reads as "not found"

    MinorSearch(const std::vector<std::vector<int>>& a, const MinorPattern& pat)
        : adj(a), p(pat), n(static_cast<int>(a.size())) {
        want.assign(p.n, std::vector<char>(p.n, 0));
        for (auto [x, y] : p.edges) want[x][y] = want[y][x] = 1;
        label.assign(n, -1);
    }

    bool satisfied(int i, const std::vector<int>& setv) const {
        for (int j = 0; j < i; ++j) {
            if (!want[i][j]) continue;
            bool touch = false;
            for (size_t a = 0; a < setv.size() && !touch; ++a)
                for (int u : adj[setv[a]])
                    if (label[u] == j) {
                        touch = true;
                        break;
                    }
            if (!touch) return false;
        }
        return true;
    }

    bool extend(int i, std::vector<int>& setv, std::vector<int>& cand, size_t ci,
                std::vector<char>& ban) {
        if (--budget < 0) return false;
        if (satisfied(i, setv) && place(i + 1)) return true;
        std::vector<int> banned_here;
        bool found = false;
        for (size_t j = ci; j < cand.size() && !found; ++j) {
            int u = cand[j];
            if (label[u] != -1 || ban[u]) continue;
            label[u] = i;
            setv.push_back(u);
            size_t old = cand.size();
            for (int w : adj[u])
                if (label[w] == -1 && !ban[w]) cand.push_back(w);
            found = extend(i, setv, cand, j + 1, ban);
            cand.resize(old);
            setv.pop_back();
            label[u] = -1;
            if (!found) {
                ban[u] = 1;
                banned_here.push_back(u);
            }
        }
        for (int u : banned_here) ban[u] = 0;
        return found;
    }

    bool place(int i) {
        if (i == p.n) return true;
        int free_cnt = 0;
        for (int v = 0; v < n; ++v) free_cnt += label[v] == -1;
        if (free_cnt < p.n - i) return false;
        for (int r = 0; r < n; ++r) {
            if (label[r] != -1) continue;
            label[r] = i;
            std::vector<int> setv{r}, cand;
            for (int w : adj[r])
                if (label[w] == -1) cand.push_back(w);
            std::vector<char> ban(n, 0);
            if (extend(i, setv, cand, 0, ban)) return true;
            label[r] = -1;
        }
        return false;
    }
};

bool embeds_into(const MinorPattern& p, const std::vector<std::vector<char>>& radj,
                 std::vector<int>& map, std::vector<char>& used, int i) {
    if (i == p.n) return true;
    int k = static_cast<int>(radj.size());
    for (int r = 0; r < k; ++r) {
        if (used[r]) continue;
        bool ok = true;
        for (auto [x, y] : p.edges) {
            int other = x == i ? y : (y == i ? x : -1);
            if (other >= 0 && other < i && !radj[r][map[other]]) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        map[i] = r;
        used[r] = 1;
        if (embeds_into(p, radj, map, used, i + 1)) return true;
        used[r] = 0;
    }
    return false;
}

// Randomized minor test for larger hosts: partition the vertices into
// connected regions by multi-source search from random seeds and look for
// the pattern among the region adjacencies.  A hit is a certified minor
// model; misses are inconclusive and only cost construction attempts.
bool minor_by_partition(const Graph& g, const MinorPattern& p, std::mt19937& rng,
                        int tries) {
    int n = g.num_vertices();
    if (n < p.n) return false;
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> label(n), queue;
    for (int t = 0; t < tries; ++t) {
        int k = std::min(n, p.n + (t % 4) * 2);
        std::shuffle(order.begin(), order.end(), rng);
        label.assign(n, -1);
        queue.clear();
        for (int s = 0; s < k; ++s) {
            label[order[s]] = s;
            queue.push_back(order[s]);
        }
        for (size_t qi = 0; qi < queue.size(); ++qi) {
            int v = queue[qi];
            for (int u : adj[v])
                if (label[u] == -1) {
                    label[u] = label[v];
                    queue.push_back(u);
                }
        }
        std::vector<std::vector<char>> radj(k, std::vector<char>(k, 0));
        for (const auto& e : g.edges()) {
            int a = label[e.u], b = label[e.v];
            if (a >= 0 && b >= 0 && a != b) radj[a][b] = radj[b][a] = 1;
        }
        std::vector<int> map(p.n, -1);
        std::vector<char> used(k, 0);
        if (embeds_into(p, radj, map, used, 0)) return true;
    }
    return false;
}

// In a planar graph, branch-width >= 4 exactly when an octahedron or cube
// minor is present (the other obstructions, K5 and V8, are non-planar).
bool has_bw4_obstruction(const Graph& g) {
    static const MinorPattern octa = octahedron_pattern();
    static const MinorPattern cube = cube_pattern();
    std::mt19937 rng(20123);
    if (minor_by_partition(g, octa, rng, 1500) ||
        minor_by_partition(g, cube, rng, 1500))
        return true;
    if (g.num_vertices() > 14) return false;
    std::vector<std::vector<int>> adj(g.num_vertices());
    for (const auto& e : g.edges()) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    return MinorSearch(adj, octa).place(0) || MinorSearch(adj, cube).place(0);
}

// Exact branch-width with the decomposition itself as the upper-bound
// certificate.  Lower bounds come from minor theory; construction attempts
// ascend from there, and a validated decomposition of width w proves the
// answer once w meets the lower bound.
BranchDecomposition build_optimal(const PlanarEmbedding& emb) {
    const Graph& g = emb.graph();
    int m = g.num_edges();
    if (m < 2 || is_star(g)) {
        std::vector<int> order(m);
        std::iota(order.begin(), order.end(), 0);
        BranchDecomposition bd = path_tree(order);
        bd.width = validate_decomposition(g, bd);
        return bd;
    }
    int lower = k4_minor_free(g) ? 2 : 3;
    MedialGraph mg = medial_graph(emb);
    PlaneMultigraph pm =
        PlaneMultigraph::from_medial(mg, g.num_vertices(), emb.num_faces());
    for (int w = lower;; ++w) {
        CarvingTree ct;
        try {
            ct = carve_to_width(pm, 2 * w);
        } catch (const Error&) {
            // No carving of this width found; certify the failure at 3 by an
            // obstruction minor when possible, then widen.
            if (w == 3 && lower == 3 && has_bw4_obstruction(g)) lower = 4;
            continue;
        }
        BranchDecomposition bd;
        bd.nodes.resize(ct.nodes.size());
        for (int i = 0; i < m; ++i) bd.nodes[i].leaf_edge = i;
        auto link = [&](int a, int b) {
            bd.nodes[a].nbr.push_back(b);
            bd.nodes[b].nbr.push_back(a);
        };
        for (int i = 0; i < static_cast<int>(ct.nodes.size()); ++i)
            if (ct.nodes[i].child0 >= 0) {
                link(i, ct.nodes[i].child0);
                link(i, ct.nodes[i].child1);
            }
        link(ct.join_a, ct.join_b);
        int vw = validate_decomposition(g, bd);
        if (vw > w) continue;
        if (vw < lower)
            throw Error("constructed decomposition has width " + std::to_string(vw) +
                        ", below the proven lower bound " + std::to_string(lower));
        bd.width = vw;
        return bd;
    }
}

}  // namespace

bool branch_width_at_most(const PlanarEmbedding& emb, int k) {
    const Graph& g = emb.graph();
    if (g.num_edges() < 2) throw Error("width trivially 0/1, no decision needed");
    if (k <= 0) return false;
    if (k == 1) return is_star(g);
    if (k4_minor_free(g)) return true;  // width exactly 2 here
    if (k == 2) return false;
    return branch_width(emb) <= k;
}

int branch_width(const PlanarEmbedding& emb) {
    const Graph& g = emb.graph();
    if (g.num_edges() <= 1) return 0;
    if (is_star(g)) return 1;
    if (k4_minor_free(g)) return 2;
    return build_optimal(emb).width;
}

BranchDecomposition optimal_branch_decomposition(const PlanarEmbedding& emb) {
    if (emb.graph().num_edges() < 2)
        throw Error("decomposition requires at least 2 edges");
    return build_optimal(emb);
}

namespace {

// leaves reachable from `node` without crossing to `avoid`
void collect_leaves(const BranchDecomposition& bd, int node, int avoid,
                    std::vector<int>& out) {
    if (bd.nodes[node].leaf_edge >= 0) out.push_back(bd.nodes[node].leaf_edge);
    for (int u : bd.nodes[node].nbr)
        if (u != avoid) collect_leaves(bd, u, node, out);
}

std::vector<int> separator(const Graph& g, const std::vector<int>& side_edges) {
    std::vector<int> inside(g.num_vertices(), 0);
    for (int e : side_edges) {
        inside[g.edges()[e].u]++;
        inside[g.edges()[e].v]++;
    }
    std::vector<int> omega;
    for (int v = 0; v < g.num_vertices(); ++v)
        if (inside[v] > 0 && inside[v] < g.degree(v)) omega.push_back(v);
    return omega;
}

}  // namespace

int validate_decomposition(const Graph& g, const BranchDecomposition& bd) {
    int m = g.num_edges();
    std::vector<int> seen(m, 0);
    int leaves = 0;
    for (const auto& node : bd.nodes) {
        if (node.leaf_edge >= 0) {
            ++leaves;
            if (node.leaf_edge >= m) throw Error("decomposition: leaf maps outside edge set");
            seen[node.leaf_edge]++;
            if (node.nbr.size() != 1 && bd.nodes.size() > 1)
                throw Error("decomposition: leaf degree must be 1");
        } else if (node.nbr.size() != 3) {
            throw Error("decomposition: internal node degree must be 3");
        }
    }
    if (leaves != m) throw Error("decomposition: leaf count mismatch");
    for (int e = 0; e < m; ++e)
        if (seen[e] != 1) throw Error("decomposition: tau is not a bijection");

    int width = 0;
    for (auto [a, b] : bd.tree_edges()) {
        std::vector<int> side;
        collect_leaves(bd, b, a, side);
        width = std::max(width, static_cast<int>(separator(g, side).size()));
    }
    return width;
}

std::array<int, 2> default_split_edge(const BranchDecomposition& bd) {
    int best_cost = -1;
    std::array<int, 2> best{-1, -1};
    for (auto [a, b] : bd.tree_edges()) {
        std::vector<int> side;
        collect_leaves(bd, b, a, side);
        int sb = static_cast<int>(side.size());
        int sa = bd.leaf_count() - sb;
        int cost = std::max(sa, sb);
        if (best_cost < 0 || cost < best_cost) {
            best_cost = cost;
            best = {a, b};
        }
    }
    return best;
}

RootedDecomposition root_decomposition(const Graph& g, const BranchDecomposition& bd,
                                       std::array<int, 2> split_edge) {
    auto [u, v] = split_edge;
    int nn = static_cast<int>(bd.nodes.size());
    auto valid = [&](int a, int b) {
        return a >= 0 && a < nn &&
               std::find(bd.nodes[a].nbr.begin(), bd.nodes[a].nbr.end(), b) !=
                   bd.nodes[a].nbr.end();
    };
    if (!valid(u, v)) throw Error("root_decomposition: split edge not in tree");

    RootedDecomposition rd;
    int z = nn, r = nn + 1;
    rd.z = z;
    rd.root = r;
    int total = nn + 2;
    rd.parent.assign(total, -1);
    rd.children.assign(total, {-1, -1});
    rd.leaf_edge.assign(total, -1);
    for (int i = 0; i < nn; ++i) rd.leaf_edge[i] = bd.nodes[i].leaf_edge;

    // orient away from r:  r -> z -> {u, v} -> ...
    rd.parent[z] = r;
    rd.children[r] = {z, -1};
    rd.parent[u] = z;
    rd.parent[v] = z;
    rd.children[z] = {u, v};
    // BFS orientation of the remaining tree
    std::vector<int> stack{u, v};
    while (!stack.empty()) {
        int n = stack.back();
        stack.pop_back();
        int ci = 0;
        for (int w : bd.nodes[n].nbr) {
            if (w == rd.parent[n] || (n == u && w == v) || (n == v && w == u)) continue;
            rd.parent[w] = n;
            if (ci > 1) throw Error("root_decomposition: node with more than 2 children");
            rd.children[n][ci++] = w;
            stack.push_back(w);
        }
    }

    // omega' per edge (parent[n], n), from inside-degree counts of subtrees
    std::vector<std::vector<int>> inside(total, std::vector<int>(g.num_vertices(), 0));
    // process nodes bottom-up: order by DFS post-order from r
    std::vector<int> order, st{r};
    while (!st.empty()) {
        int n = st.back();
        st.pop_back();
        order.push_back(n);
        for (int c : rd.children[n])
            if (c >= 0) st.push_back(c);
    }
    std::reverse(order.begin(), order.end());
    rd.omega.assign(total, {});
    int width = 0;
    for (int n : order) {
        if (rd.leaf_edge[n] >= 0) {
            const auto& e = g.edges()[rd.leaf_edge[n]];
            inside[n][e.u]++;
            inside[n][e.v]++;
        } else {
            for (int c : rd.children[n])
                if (c >= 0)
                    for (int x = 0; x < g.num_vertices(); ++x) inside[n][x] += inside[c][x];
        }
        if (n == r) continue;
        for (int x = 0; x < g.num_vertices(); ++x)
            if (inside[n][x] > 0 && inside[n][x] < g.degree(x)) rd.omega[n].push_back(x);
        width = std::max(width, static_cast<int>(rd.omega[n].size()));
    }
    rd.width = width;
    return rd;
}

void write_decomposition(std::ostream& os, const Graph& g, const BranchDecomposition& bd) {
    os << "bd " << bd.leaf_count() << " " << bd.width << "\n";
    for (int i = 0; i < static_cast<int>(bd.nodes.size()); ++i)
        if (bd.nodes[i].leaf_edge >= 0) {
            const auto& e = g.edges()[bd.nodes[i].leaf_edge];
            os << "leaf " << i << " " << g.label(e.u) << " " << g.label(e.v) << "\n";
        }
    for (auto [a, b] : bd.tree_edges()) os << "tedge " << a << " " << b << "\n";
}

BranchDecomposition read_decomposition(std::istream& is, const Graph& g) {
    std::string tag;
    int m = -1, width = -1;
    if (!(is >> tag >> m >> width) || tag != "bd")
        throw Error("decomposition file: bad header");
    BranchDecomposition bd;
    bd.width = width;
    std::map<int, std::pair<int, int>> leaf_defs;
    std::vector<std::array<int, 2>> tedges;
    int max_node = -1;
    while (is >> tag) {
        if (tag == "leaf") {
            int id, lu, lv;
            if (!(is >> id >> lu >> lv)) throw Error("decomposition file: bad leaf line");
            leaf_defs[id] = {lu, lv};
            max_node = std::max(max_node, id);
        } else if (tag == "tedge") {
            int a, b;
            if (!(is >> a >> b)) throw Error("decomposition file: bad tedge line");
            tedges.push_back({a, b});
            max_node = std::max(max_node, std::max(a, b));
        } else {
            throw Error("decomposition file: unknown tag " + tag);
        }
    }
    if (static_cast<int>(leaf_defs.size()) != m)
        throw Error("decomposition file: leaf count mismatch");
    bd.nodes.resize(max_node + 1);
    for (auto& [id, lbl] : leaf_defs) {
        int e = g.edge_id(g.index_of_label(lbl.first), g.index_of_label(lbl.second));
        if (e < 0) throw Error("decomposition file: leaf edge not in graph");
        bd.nodes[id].leaf_edge = e;
    }
    for (auto [a, b] : tedges) {
        bd.nodes[a].nbr.push_back(b);
        bd.nodes[b].nbr.push_back(a);
    }
    return bd;
}

}  // namespace gridset
