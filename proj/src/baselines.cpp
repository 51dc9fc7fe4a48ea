#include "gridset/baselines.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <climits>
#include <cstdint>

namespace gridset {

namespace {

/// Fixed-width bitset sized at runtime; enough for benchmark-scale graphs.
struct Bits {
    std::vector<std::uint64_t> w;
    explicit Bits(int n = 0) : w((n + 63) / 64, 0) {}
    void set(int i) { w[i >> 6] |= std::uint64_t(1) << (i & 63); }
    bool test(int i) const { return (w[i >> 6] >> (i & 63)) & 1; }
    void operator|=(const Bits& o) {
        for (size_t i = 0; i < w.size(); ++i) w[i] |= o.w[i];
    }
    bool operator==(const Bits& o) const { return w == o.w; }
    bool intersects(const Bits& o) const {
        for (size_t i = 0; i < w.size(); ++i)
            if (w[i] & o.w[i]) return true;
        return false;
    }
    int count_and_not(const Bits& minus) const {  // |this \ minus|
        int c = 0;
        for (size_t i = 0; i < w.size(); ++i)
            c += std::popcount(w[i] & ~minus.w[i]);
        return c;
    }
    Bits and_not(const Bits& minus) const {
        Bits r = *this;
        for (size_t i = 0; i < w.size(); ++i) r.w[i] &= ~minus.w[i];
        return r;
    }
};

bool is_dominating(const Graph& g, const std::vector<int>& d) {
    std::vector<char> cov(g.num_vertices(), 0);
    for (int v : d) {
        cov[v] = 1;
        for (int u : g.neighbors(v)) cov[u] = 1;
    }
    return std::all_of(cov.begin(), cov.end(), [](char c) { return c != 0; });
}

std::vector<Bits> closed_neighborhoods(const Graph& g) {
    std::vector<Bits> nb(g.num_vertices(), Bits(g.num_vertices()));
    for (int v = 0; v < g.num_vertices(); ++v) {
        nb[v].set(v);
        for (int u : g.neighbors(v)) nb[v].set(u);
    }
    return nb;
}

struct BnBSolver {
    const Graph& g;
    int n;
    std::vector<Bits> nb;
    Bits full;
    std::chrono::steady_clock::time_point deadline;
    bool timed_out = false;
    int tick = 0;

    std::vector<int> best;
    std::vector<int> chosen;

    explicit BnBSolver(const Graph& graph, std::chrono::steady_clock::time_point dl)
        : g(graph), n(graph.num_vertices()), nb(closed_neighborhoods(graph)),
          full(n), deadline(dl) {
        for (int v = 0; v < n; ++v) full.set(v);
    }

    void run() {
        best = greedy_ds(g).members;  // warm incumbent
        recurse(Bits(n), Bits(n));
    }

    void recurse(Bits dominated, Bits forbidden) {
        if (timed_out) return;
        if ((++tick & 1023) == 0 && std::chrono::steady_clock::now() > deadline) {
            timed_out = true;
            return;
        }
        if (dominated == full) {
            if (chosen.size() < best.size()) best = chosen;
            return;
        }
        // branch vertex: undominated, fewest remaining candidate dominators
        int bv = -1, bc = INT_MAX;
        for (int v = 0; v < n; ++v) {
            if (dominated.test(v)) continue;
            int c = nb[v].count_and_not(forbidden);
            if (c == 0) return;  // v can no longer be dominated
            if (c < bc) {
                bc = c;
                bv = v;
            }
        }
        // admissible bound: vertices with disjoint candidate sets each need
        // their own dominator
        Bits used(n);
        int lb = 0;
        for (int v = 0; v < n; ++v) {
            if (dominated.test(v)) continue;
            Bits cand = nb[v].and_not(forbidden);
            if (!cand.intersects(used)) {
                ++lb;
                used |= cand;
            }
        }
        if (chosen.size() + lb >= best.size()) return;

        std::vector<int> cands;
        for (int v = 0; v < n; ++v)
            if (nb[bv].test(v) && !forbidden.test(v)) cands.push_back(v);
        std::sort(cands.begin(), cands.end(), [&](int a, int b) {
            int ca = nb[a].count_and_not(dominated), cb = nb[b].count_and_not(dominated);
            return ca != cb ? ca > cb : a < b;
        });
        Bits forb = forbidden;
        for (int u : cands) {
            chosen.push_back(u);
            Bits dom = dominated;
            dom |= nb[u];
            recurse(dom, forb);
            chosen.pop_back();
            forb.set(u);  // later branches pick a different dominator for bv
        }
    }
};

}  // namespace

DominatingSet greedy_ds(const Graph& g) {
    int n = g.num_vertices();
    std::vector<char> dominated(n, 0);
    int remaining = n;
    DominatingSet d;
    while (remaining > 0) {
        int best = -1, best_gain = -1;
        for (int v = 0; v < n; ++v) {
            int gain = dominated[v] ? 0 : 1;
            for (int u : g.neighbors(v)) gain += dominated[u] ? 0 : 1;
            if (gain > best_gain) {
                best_gain = gain;
                best = v;
            }
        }
        d.members.push_back(best);
        if (!dominated[best]) { dominated[best] = 1; --remaining; }
        for (int u : g.neighbors(best))
            if (!dominated[u]) { dominated[u] = 1; --remaining; }
    }
    std::sort(d.members.begin(), d.members.end());
    d.valid = is_dominating(g, d.members);
    return d;
}

BnBResult exact_bnb_ds(const Graph& g, double time_budget_seconds) {
    auto deadline = std::chrono::steady_clock::now() +
                    std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                        std::chrono::duration<double>(time_budget_seconds));
    BnBResult res;
    res.optimal = true;
    for (const Graph& comp : connected_components(g)) {
        BnBSolver solver(comp, deadline);
        solver.run();
        if (solver.timed_out) res.optimal = false;
        for (int v : solver.best)
            res.set.members.push_back(g.index_of_label(comp.label(v)));
    }
    std::sort(res.set.members.begin(), res.set.members.end());
    res.set.valid = is_dominating(g, res.set.members);
    return res;
}

DominatingSet brute_force_ds(const Graph& g) {
    int n = g.num_vertices();
    if (n > 25) throw Error("brute_force_ds: refusing |V| > 25");
    std::vector<std::uint32_t> nb(n);
    for (int v = 0; v < n; ++v) {
        nb[v] = std::uint32_t(1) << v;
        for (int u : g.neighbors(v)) nb[v] |= std::uint32_t(1) << u;
    }
    std::uint32_t full = (n == 32) ? ~0u : ((std::uint32_t(1) << n) - 1);
    for (int k = 1; k <= n; ++k) {
        std::uint32_t sub = (std::uint32_t(1) << k) - 1;
        while (sub < (std::uint32_t(1) << n)) {
            std::uint32_t cov = 0;
            for (std::uint32_t rest = sub; rest;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                cov |= nb[v];
            }
            if (cov == full) {
                DominatingSet d;
                for (int v = 0; v < n; ++v)
                    if (sub & (std::uint32_t(1) << v)) d.members.push_back(v);
                d.valid = true;
                return d;
            }
            std::uint32_t c = sub & -sub, r = sub + c;  // Gosper's hack
            sub = (((r ^ sub) >> 2) / c) | r;
        }
    }
    throw Error("brute_force_ds: no dominating set (unreachable)");
}

}  // namespace gridset
