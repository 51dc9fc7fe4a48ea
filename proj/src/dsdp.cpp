#include "gridset/dsdp.hpp"

#include <algorithm>
#include <chrono>
#include <set>

namespace gridset {

namespace {

int pow3(int k) {
    int p = 1;
    while (k-- > 0) p *= 3;
    return p;
}

void decode(int index, int len, int* digits) {
    for (int i = 0; i < len; ++i) {
        digits[i] = index % 3;
        index /= 3;
    }
}

}  // namespace

ColorTable leaf_table(const Graph& g, int graph_edge, const std::vector<int>& omega) {
    const auto& e = g.edges().at(graph_edge);
    for (int w : omega)
        if (w != e.u && w != e.v)
            throw Error("leaf_table: separator vertex is not an edge endpoint");
    int len = static_cast<int>(omega.size());
    ColorTable t;
    t.verts = omega;
    t.cost.assign(pow3(len), kInfCost);
    t.from.assign(t.cost.size(), {-1, -1});

    int ends[2] = {e.u, e.v};
    for (int c = 0; c < t.size(); ++c) {
        int digits[2];
        decode(c, len, digits);
        for (int mask = 0; mask < 4; ++mask) {
            bool ok = true;
            for (int s = 0; s < 2 && ok; ++s) {
                bool in_d = mask & (1 << s);
                bool other_in_d = mask & (1 << (1 - s));
                auto it = std::find(omega.begin(), omega.end(), ends[s]);
                if (it != omega.end()) {
                    switch (digits[it - omega.begin()]) {
                        case BLACK: ok = in_d; break;
                        case WHITE: ok = !in_d && other_in_d; break;
                        case GREY: ok = !in_d; break;
                    }
                } else {
                    // hidden below the leaf: must be settled here
                    ok = in_d || other_in_d;
                }
            }
            int card = (mask & 1) + (mask >> 1);
            if (ok && card < t.cost[c]) {
                t.cost[c] = card;
                t.from[c] = {mask, -1};
            }
        }
    }
    return t;
}

ColorTable merge_tables(const std::vector<int>& parent_omega, const ColorTable& a,
                        const ColorTable& b) {
    // classify every involved vertex by membership in (parent, a, b)
    struct Slot {
        int kind;  // bitmask: 1 = parent, 2 = a, 4 = b
        int pp = -1, pa = -1, pb = -1;
    };
    std::set<int> all(parent_omega.begin(), parent_omega.end());
    all.insert(a.verts.begin(), a.verts.end());
    all.insert(b.verts.begin(), b.verts.end());
    std::vector<Slot> slots;
    auto pos = [](const std::vector<int>& vs, int v) {
        auto it = std::find(vs.begin(), vs.end(), v);
        return it == vs.end() ? -1 : static_cast<int>(it - vs.begin());
    };
    for (int v : all) {
        Slot s;
        s.pp = pos(parent_omega, v);
        s.pa = pos(a.verts, v);
        s.pb = pos(b.verts, v);
        s.kind = (s.pp >= 0 ? 1 : 0) | (s.pa >= 0 ? 2 : 0) | (s.pb >= 0 ? 4 : 0);
        if (s.kind == 1 || s.kind == 2 || s.kind == 4)
            throw Error("merge_tables: vertex in exactly one separator");
        slots.push_back(s);
    }

    int plen = static_cast<int>(parent_omega.size());
    int alen = static_cast<int>(a.verts.size());
    int blen = static_cast<int>(b.verts.size());
    ColorTable t;
    t.verts = parent_omega;
    t.cost.assign(pow3(plen), kInfCost);
    t.from.assign(t.cost.size(), {-1, -1});

    std::vector<int> d1(std::max(alen, 1)), d2(std::max(blen, 1)), dp(std::max(plen, 1));
    for (int i1 = 0; i1 < a.size(); ++i1) {
        if (a.cost[i1] >= kInfCost) continue;
        decode(i1, alen, d1.data());
        for (int i2 = 0; i2 < b.size(); ++i2) {
            if (b.cost[i2] >= kInfCost) continue;
            decode(i2, blen, d2.data());
            int corr = 0;
            bool ok = true;
            for (const Slot& s : slots) {
                int c1 = s.pa >= 0 ? d1[s.pa] : -1;
                int c2 = s.pb >= 0 ? d2[s.pb] : -1;
                switch (s.kind) {
                    case 3:  // parent + a: colors copied through
                        dp[s.pp] = c1;
                        break;
                    case 5:  // parent + b
                        dp[s.pp] = c2;
                        break;
                    case 7:  // in all three
                        if (c1 == BLACK && c2 == BLACK) dp[s.pp] = BLACK;
                        else if (c1 == GREY && c2 == GREY) dp[s.pp] = GREY;
                        else if ((c1 == WHITE && c2 == GREY) || (c1 == GREY && c2 == WHITE))
                            dp[s.pp] = WHITE;
                        else ok = false;
                        if (c1 == BLACK) ++corr;
                        break;
                    case 6:  // a + b only: resolved below the parent edge
                        if (!((c1 == BLACK && c2 == BLACK) ||
                              (c1 == WHITE && c2 == GREY) ||
                              (c1 == GREY && c2 == WHITE)))
                            ok = false;
                        if (c1 == BLACK) ++corr;
                        break;
                }
                if (!ok) break;
            }
            if (!ok) continue;
            int ip = 0;
            for (int i = plen - 1; i >= 0; --i) ip = ip * 3 + dp[i];
            int cost = sat_add(a.cost[i1], b.cost[i2]) - corr;
            if (cost < t.cost[ip]) {  // strict: keeps lexicographically first pair
                t.cost[ip] = cost;
                t.from[ip] = {i1, i2};
            }
        }
    }
    return t;
}

std::pair<int, std::array<int, 2>> root_combine(const ColorTable& a, const ColorTable& b) {
    if (a.verts != b.verts) throw Error("root_combine: separator mismatch");
    int len = static_cast<int>(a.verts.size());
    std::vector<int> d1(std::max(len, 1)), d2(std::max(len, 1));
    int best = kInfCost;
    std::array<int, 2> arg{-1, -1};
    for (int i1 = 0; i1 < a.size(); ++i1) {
        if (a.cost[i1] >= kInfCost) continue;
        decode(i1, len, d1.data());
        for (int i2 = 0; i2 < b.size(); ++i2) {
            if (b.cost[i2] >= kInfCost) continue;
            decode(i2, len, d2.data());
            bool ok = true;
            int corr = 0;
            for (int i = 0; i < len && ok; ++i) {
                if (d1[i] == BLACK && d2[i] == BLACK) ++corr;
                else if (!((d1[i] == WHITE && d2[i] == GREY) ||
                           (d1[i] == GREY && d2[i] == WHITE)))
                    ok = false;
            }
            if (!ok) continue;
            int cost = sat_add(a.cost[i1], b.cost[i2]) - corr;
            if (cost < best) {
                best = cost;
                arg = {i1, i2};
            }
        }
    }
    if (best >= kInfCost) throw Error("root_combine: no feasible coloring");
    return {best, arg};
}

bool verify_dominating(const Graph& g, const std::vector<int>& d) {
    std::vector<char> covered(g.num_vertices(), 0);
    for (int v : d) {
        covered[v] = 1;
        for (int u : g.neighbors(v)) covered[u] = 1;
    }
    return std::all_of(covered.begin(), covered.end(), [](char c) { return c != 0; });
}

std::vector<int> dp_minimum_dominating_set(const Graph& g, const RootedDecomposition& rd,
                                           int* max_table_size) {
    int total = static_cast<int>(rd.parent.size());
    // bottom-up order (children before parents)
    std::vector<int> order, st{rd.root};
    while (!st.empty()) {
        int n = st.back();
        st.pop_back();
        order.push_back(n);
        for (int c : rd.children[n])
            if (c >= 0) st.push_back(c);
    }
    std::reverse(order.begin(), order.end());

    std::vector<ColorTable> tables(total);
    int mts = 0;
    for (int n : order) {
        if (n == rd.root || n == rd.z) continue;
        if (rd.leaf_edge[n] >= 0)
            tables[n] = leaf_table(g, rd.leaf_edge[n], rd.omega[n]);
        else
            tables[n] = merge_tables(rd.omega[n], tables[rd.children[n][0]],
                                     tables[rd.children[n][1]]);
        mts = std::max(mts, tables[n].size());
    }
    if (max_table_size) *max_table_size = mts;

    auto [opt, root_arg] = root_combine(tables[rd.children[rd.z][0]],
                                        tables[rd.children[rd.z][1]]);

    std::set<int> members;
    std::vector<std::pair<int, int>> stack{{rd.children[rd.z][0], root_arg[0]},
                                           {rd.children[rd.z][1], root_arg[1]}};
    while (!stack.empty()) {
        auto [n, idx] = stack.back();
        stack.pop_back();
        const auto& from = tables[n].from.at(idx);
        if (rd.leaf_edge[n] >= 0) {
            if (from[0] < 0) throw Error("tables built without traceback");
            const auto& e = g.edges()[rd.leaf_edge[n]];
            if (from[0] & 1) members.insert(e.u);
            if (from[0] & 2) members.insert(e.v);
        } else {
            if (from[0] < 0 || from[1] < 0) throw Error("tables built without traceback");
            stack.push_back({rd.children[n][0], from[0]});
            stack.push_back({rd.children[n][1], from[1]});
        }
    }
    std::vector<int> d(members.begin(), members.end());
    if (static_cast<int>(d.size()) != opt)
        throw Error("dominating-set DP: traceback size disagrees with table optimum");
    if (!verify_dominating(g, d))
        throw Error("dominating-set DP: traceback result is not dominating");
    return d;
}

SolveReport solve_planar_mds(const Graph& g, EdgeOrder order,
                             const std::vector<std::pair<int, int>>& explicit_priority) {
    using clock = std::chrono::steady_clock;
    auto seconds = [](clock::time_point a, clock::time_point b) {
        return std::chrono::duration<double>(b - a).count();
    };
    auto t_start = clock::now();

    SolveReport rep;
    rep.solver = "bd";
    double t_planarize = 0, t_decomp = 0, t_dp = 0;
    int bw_max = 0;
    std::vector<int> member_labels;

    for (const Graph& comp : connected_components(g)) {
        if (comp.num_edges() == 0) {  // isolated vertex
            member_labels.push_back(comp.label(0));
            continue;
        }
        if (comp.num_edges() == 1) {  // single edge: either endpoint
            const auto& e = comp.edges()[0];
            member_labels.push_back(std::min(comp.label(e.u), comp.label(e.v)));
            continue;
        }

        auto t0 = clock::now();
        Graph sub;
        if (is_planar(comp)) {
            sub = comp;
        } else {
            rep.planar = false;
            rep.exact = false;
            auto pr = maximal_planar_subgraph(comp, order, explicit_priority);
            sub = pr.subgraph;
            for (const auto& e : pr.removed_edges)
                rep.removed_edges.push_back({std::min(comp.label(e.u), comp.label(e.v)),
                                             std::max(comp.label(e.u), comp.label(e.v))});
        }
        auto t1 = clock::now();
        t_planarize += seconds(t0, t1);

        PlanarEmbedding emb = PlanarEmbedding::of(sub);
        BranchDecomposition bd = optimal_branch_decomposition(emb);
        RootedDecomposition rd = root_decomposition(sub, bd, default_split_edge(bd));
        bw_max = std::max(bw_max, bd.width);
        auto t2 = clock::now();
        t_decomp += seconds(t1, t2);

        int mts = 0;
        std::vector<int> d = dp_minimum_dominating_set(sub, rd, &mts);
        if (mts > pow3(bd.width))
            throw Error("dominating-set DP: table size exceeds 3^width bound");
        if (!verify_dominating(comp, d))
            throw Error("dominating-set DP: result does not dominate the input graph");
        for (int v : d) member_labels.push_back(comp.label(v));
        t_dp += seconds(t2, clock::now());
    }

    std::sort(member_labels.begin(), member_labels.end());
    std::sort(rep.removed_edges.begin(), rep.removed_edges.end());
    rep.members = member_labels;
    rep.cardinality = static_cast<int>(member_labels.size());
    rep.branch_width = bw_max;
    rep.timings["planarize"] = t_planarize;
    rep.timings["decomposition"] = t_decomp;
    rep.timings["dp"] = t_dp;
    rep.timings["total"] = seconds(t_start, clock::now());
    return rep;
}

}  // namespace gridset
