#include "gridset/carving.hpp"

#include <algorithm>
#include <cstdint>
#include <deque>
#include <numeric>
#include <random>
#include <string>

namespace gridset {

int PlaneMultigraph::find(std::vector<int>& uf, int v) {
    while (uf[v] != v) {
        uf[v] = uf[uf[v]];
        v = uf[v];
    }
    return v;
}

int PlaneMultigraph::find_h(int v) const { return find(uf_h_, v); }
int PlaneMultigraph::find_d(int v) const { return find(uf_d_, v); }

PlaneMultigraph PlaneMultigraph::from_medial(const MedialGraph& m, int source_vertex_count,
                                             int source_face_count) {
    PlaneMultigraph g;
    g.uf_h_.resize(m.num_vertices);
    std::iota(g.uf_h_.begin(), g.uf_h_.end(), 0);
    g.uf_d_.resize(source_vertex_count + source_face_count);
    std::iota(g.uf_d_.begin(), g.uf_d_.end(), 0);
    for (const auto& e : m.edges)
        g.edges_.push_back({e.p, e.q, e.dual_vertex, source_vertex_count + e.dual_face, true});
    // loops (corners at degree-1 source vertices) carry no cut weight; drop
    // them by contracting their dual edges
    for (auto& e : g.edges_)
        if (e.h0 == e.h1) {
            e.alive = false;
            int a = g.find_d(e.d0), b = g.find_d(e.d1);
            if (a != b) g.uf_d_[b] = a;
        }
    return g;
}

std::vector<int> PlaneMultigraph::alive_edges() const {
    std::vector<int> out;
    for (int i = 0; i < edge_count(); ++i)
        if (edges_[i].alive) out.push_back(i);
    return out;
}

int PlaneMultigraph::alive_vertex_count() const {
    std::vector<int> reps;
    for (int v = 0; v < static_cast<int>(uf_h_.size()); ++v)
        if (find_h(v) == v) reps.push_back(v);
    return static_cast<int>(reps.size());
}

int PlaneMultigraph::degree(int h_class) const {
    int d = 0;
    for (const auto& e : edges_)
        if (e.alive && (find_h(e.h0) == h_class || find_h(e.h1) == h_class)) ++d;
    return d;
}

int PlaneMultigraph::merged_degree(int i) const {
    const auto& x = edges_[i];
    int a = find_h(x.h0), b = find_h(x.h1);
    int d = 0;
    for (const auto& e : edges_) {
        if (!e.alive) continue;
        int p = find_h(e.h0), q = find_h(e.h1);
        bool pa = p == a || p == b, qa = q == a || q == b;
        if (pa != qa) ++d;
    }
    return d;
}

void PlaneMultigraph::contract(int i) {
    Edge& x = edges_[i];
    if (!x.alive) throw Error("contract: dead edge");
    int a = find_h(x.h0), b = find_h(x.h1);
    if (a == b) throw Error("contract: loop");
    x.alive = false;
    uf_h_[b] = a;
    merges_.push_back({a, b});
    // drop loops formed by former parallel edges
    for (auto& e : edges_) {
        if (!e.alive) continue;
        if (find_h(e.h0) == find_h(e.h1)) {
            e.alive = false;
            int p = find_d(e.d0), q = find_d(e.d1);
            if (p != q) uf_d_[q] = p;
        }
    }
}

namespace {

// Pursuit game tables for one (graph, threshold) pair.
//
// The plane is divided into rooms (dual face classes). A closed curve is a
// closed room walk: crossing an edge costs 1, and passing over an original
// medial vertex between the two face-side rooms of its source edge costs 2
// (modelled by a gate node with unit half-links). The catcher stands in the
// rooms that contain a source-vertex face (edge(i).d0 is always the
// source-vertex side) and walks over an original medial vertex between its
// two endpoint rooms, sweeping its vertex class. A curve catches the rat on
// vertex class x if it passes over one of x's original vertices or visits
// both endpoint rooms of one of them; during a walk the noise curves must
// additionally pass over the walked vertex.
struct Game {
    int n_orig = 0;                      // original medial vertices
    std::vector<int> vreps;              // alive vertex class reps
    std::vector<int> vidx;               // rep -> compact index (-1 otherwise)
    std::vector<int> rooms;              // dual class reps (compact room ids)
    std::vector<int> ridx;               // rep -> room id
    int nf = 0;                          // room count
    std::vector<std::array<int, 2>> pair_room;  // per original vertex: endpoint rooms
    std::vector<std::array<int, 2>> face_room;  // per original vertex: face-side rooms
    std::vector<int> ring_cost;          // alive corner count (noose around the slab)
    std::vector<int> pass_cost;          // min alive corners on one endpoint side
    std::vector<std::vector<int>> members;      // vertex class -> original vertices
    std::vector<std::vector<int>> dist;  // room all-pairs wall-crossing distance
    std::vector<int> positions;          // catcher rooms
    std::vector<std::array<int, 2>> vadj;
    std::vector<std::array<int, 2>> eroom;       // alive edge -> vertex class pair
};

constexpr int kFar = 1 << 28;

Game build_game(const PlaneMultigraph& g) {
    Game t;
    t.n_orig = g.original_vertex_count();

    t.vidx.assign(t.n_orig, -1);
    for (int v = 0; v < t.n_orig; ++v)
        if (g.find_h(v) == v) {
            t.vidx[v] = static_cast<int>(t.vreps.size());
            t.vreps.push_back(v);
        }
    int nvc = static_cast<int>(t.vreps.size());
    t.members.assign(nvc, {});
    for (int v = 0; v < t.n_orig; ++v) t.members[t.vidx[g.find_h(v)]].push_back(v);

    int nd = 0;
    for (int i = 0; i < g.edge_count(); ++i)
        nd = std::max({nd, g.edge(i).d0 + 1, g.edge(i).d1 + 1});
    t.ridx.assign(nd, -1);
    auto room_of = [&](int dual) {
        int r = g.find_d(dual);
        if (t.ridx[r] < 0) {
            t.ridx[r] = static_cast<int>(t.rooms.size());
            t.rooms.push_back(r);
        }
        return t.ridx[r];
    };
    std::vector<int> ids = g.alive_edges();
    for (int i : ids) {
        room_of(g.edge(i).d0);
        room_of(g.edge(i).d1);
    }
    // per original medial vertex: the source-vertex faces (d0 side) of its
    // original corner edges give the endpoint pair, the source faces (d1
    // side) give the two sides of its source edge (equal for bridges);
    // alive corners are counted per endpoint side for the pass/noose costs
    std::vector<std::array<int, 2>> pair_src(t.n_orig, {-1, -1});
    std::vector<std::array<int, 2>> face_src(t.n_orig, {-1, -1});
    std::vector<std::array<int, 2>> side_alive(t.n_orig, {0, 0});
    auto put = [](std::array<int, 2>& slot, int value, const char* what) {
        if (slot[0] == value) return 0;
        if (slot[1] == value) return 1;
        if (slot[0] < 0) {
            slot[0] = value;
            return 0;
        }
        if (slot[1] < 0) {
            slot[1] = value;
            return 1;
        }
        throw Error(std::string("carving game: medial vertex with three ") + what);
    };
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edge(i);
        for (int h : {e.h0, e.h1}) {
            int side = put(pair_src[h], e.d0, "endpoint faces");
            put(face_src[h], e.d1, "side faces");
            if (e.alive) side_alive[h][side] += 1;
            if (e.h1 == e.h0) break;
        }
    }
    t.pair_room.assign(t.n_orig, {-1, -1});
    t.face_room.assign(t.n_orig, {-1, -1});
    t.ring_cost.assign(t.n_orig, 0);
    t.pass_cost.assign(t.n_orig, 0);
    for (int v = 0; v < t.n_orig; ++v) {
        if (pair_src[v][0] < 0 || pair_src[v][1] < 0)
            throw Error("carving game: medial vertex missing an endpoint face");
        if (face_src[v][0] < 0) throw Error("carving game: medial vertex missing a side face");
        if (face_src[v][1] < 0) face_src[v][1] = face_src[v][0];  // bridge source edge
        t.pair_room[v] = {room_of(pair_src[v][0]), room_of(pair_src[v][1])};
        t.face_room[v] = {room_of(face_src[v][0]), room_of(face_src[v][1])};
        t.ring_cost[v] = side_alive[v][0] + side_alive[v][1];
        t.pass_cost[v] = std::min(side_alive[v][0], side_alive[v][1]);
    }

    t.nf = static_cast<int>(t.rooms.size());

    std::vector<std::vector<int>> adj(t.nf);
    t.vadj.resize(ids.size());
    t.eroom.resize(ids.size());
    for (size_t j = 0; j < ids.size(); ++j) {
        const auto& e = g.edge(ids[j]);
        int a = t.ridx[g.find_d(e.d0)], b = t.ridx[g.find_d(e.d1)];
        adj[a].push_back(b);
        adj[b].push_back(a);
        t.vadj[j] = {t.vidx[g.find_h(e.h0)], t.vidx[g.find_h(e.h1)]};
        t.eroom[j] = {a, b};
    }

    std::vector<char> is_pos(t.nf, 0);
    for (int v = 0; v < t.n_orig; ++v) is_pos[t.pair_room[v][0]] = is_pos[t.pair_room[v][1]] = 1;
    for (int r = 0; r < t.nf; ++r)
        if (is_pos[r]) t.positions.push_back(r);

    t.dist.assign(t.nf, std::vector<int>(t.nf, kFar));
    for (int s = 0; s < t.nf; ++s) {  // unit-cost BFS over wall crossings
        auto& ds = t.dist[s];
        ds[s] = 0;
        std::deque<int> q{s};
        while (!q.empty()) {
            int x = q.front();
            q.pop_front();
            for (int y : adj[x])
                if (ds[y] == kFar) {
                    ds[y] = ds[x] + 1;
                    q.push_back(y);
                }
        }
    }
    return t;
}

}  // namespace

bool carving_width_at_least(const PlaneMultigraph& g, int k) {
    if (k <= 0) return true;
    int nv = g.alive_vertex_count();
    if (nv <= 1) return false;  // carving-width 0
    std::vector<int> ids = g.alive_edges();
    int m = static_cast<int>(ids.size());
    if (nv == 2) return m >= k;
    // every carving cuts each vertex class off on its own, so its cut weight
    // (the class degree) is a lower bound
    for (int v = 0; v < g.original_vertex_count(); ++v)
        if (g.find_h(v) == v && g.degree(v) >= k) return true;

    Game t = build_game(g);
    int nvc = static_cast<int>(t.vreps.size());
    const auto& dist = t.dist;

    // cheapest closed curve through room pin catching the rat on member
    // street v: either cross its source edge transversally (pass cost plus
    // the round trip touching both its side rooms), or run the tight noose
    // around its slab (its alive corners) with a detour to the pin
    auto member_cost = [&](int pin, int v) {
        auto [f0, f1] = t.face_room[v];
        auto [p, q] = t.pair_room[v];
        long best = t.pass_cost[v] + 0L + dist[pin][f0] + dist[pin][f1];
        int reach = std::min({dist[pin][p], dist[pin][q], dist[pin][f0], dist[pin][f1]});
        return std::min(best, t.ring_cost[v] + 2L * reach);
    };
    // the rat hides on some member street of its class, so the class is
    // noisy only when every member is cheaply reachable
    auto catch_cost = [&](int pin, int x) {
        long best = 0;
        for (int v : t.members[x]) best = std::max(best, member_cost(pin, v));
        return best;
    };
    // cheapest closed curve crossing walked vertex w catching member v
    auto member_walk_cost = [&](int w, int v) {
        auto [a, b] = t.face_room[w];
        auto [f0, f1] = t.face_room[v];
        auto [p, q] = t.pair_room[v];
        long best = 2L + t.pass_cost[v] +
                    std::min(dist[b][f0] + 0L + dist[f1][a],
                             dist[b][f1] + 0L + dist[f0][a]);
        long reach = kFar;
        for (int r : {p, q, f0, f1}) reach = std::min(reach, dist[r][a] + 0L + dist[r][b]);
        return std::min(best, t.ring_cost[v] + 2L + reach);
    };
    // the walked street itself is stepped on; the rat needs another member
    auto walk_cost = [&](int w, int x) {
        long best = 0;
        for (int v : t.members[x])
            best = std::max(best, v == w ? 0L : member_walk_cost(w, v));
        return best;
    };

    // quiet sets and their components: the rat runs between streets through
    // a shared corner, and that crossing is audible from room pin when a
    // closed curve through pin over the corner wall is shorter than k
    auto components = [&](int pin, const std::vector<char>& quiet, std::vector<int>& comp) {
        comp.assign(nvc, -1);
        int nc = 0;
        std::vector<std::vector<int>> nbr(nvc);
        for (size_t j = 0; j < t.vadj.size(); ++j) {
            auto [u, w] = t.vadj[j];
            auto [a, b] = t.eroom[j];
            if (u != w && quiet[u] && quiet[w] && 1L + dist[pin][a] + dist[pin][b] >= k) {
                nbr[u].push_back(w);
                nbr[w].push_back(u);
            }
        }
        std::vector<int> stack;
        for (int v = 0; v < nvc; ++v) {
            if (!quiet[v] || comp[v] >= 0) continue;
            comp[v] = nc;
            stack.push_back(v);
            while (!stack.empty()) {
                int x = stack.back();
                stack.pop_back();
                for (int y : nbr[x])
                    if (comp[y] < 0) {
                        comp[y] = nc;
                        stack.push_back(y);
                    }
            }
            ++nc;
        }
        return nc;
    };

    // Catcher states are the rooms; walking a street is an instantaneous
    // pass through its medial vertex between the two endpoint rooms or the
    // two face-side rooms, with the walk noise active during the transit.
    int np = t.nf;

    std::vector<std::vector<char>> quiet_pos(np, std::vector<char>(nvc));
    std::vector<std::vector<int>> comp_pos(np);
    std::vector<int> ncomp_pos(np);
    for (int i = 0; i < np; ++i) {
        for (int x = 0; x < nvc; ++x) quiet_pos[i][x] = catch_cost(i, x) >= k;
        ncomp_pos[i] = components(i, quiet_pos[i], comp_pos[i]);
    }
    std::vector<std::vector<char>> quiet_walk(t.n_orig, std::vector<char>(nvc));
    for (int w = 0; w < t.n_orig; ++w)
        for (int x = 0; x < nvc; ++x) quiet_walk[w][x] = walk_cost(w, x) >= k;
    struct Move {
        int walk, dest;  // walk == -1: wall crossing
    };
    std::vector<std::vector<Move>> moves(np);
    auto add_move = [&](int ia, int ib, int w) {
        if (ia == ib) return;
        for (const Move& m : moves[ia])
            if (m.walk == w && m.dest == ib) return;
        moves[ia].push_back({w, ib});
        moves[ib].push_back({w, ia});
    };
    for (int ei : g.alive_edges())
        add_move(t.ridx[g.find_d(g.edge(ei).d0)], t.ridx[g.find_d(g.edge(ei).d1)], -1);
    for (int w = 0; w < t.n_orig; ++w) {
        add_move(t.pair_room[w][0], t.pair_room[w][1], w);
        add_move(t.face_room[w][0], t.face_room[w][1], w);
    }

    // greatest fixpoint: rat loose in component c of room i's quiet set; a
    // transit is instantaneous, so it needs one vertex quiet through the
    // transit noise and inside the destination's surviving quiet set
    std::vector<std::vector<char>> alive(np);
    for (int i = 0; i < np; ++i) alive[i].assign(ncomp_pos[i], 1);
    bool changed = true;
    while (changed) {
        changed = false;
        for (int i = 0; i < np; ++i)
            for (int c = 0; c < ncomp_pos[i]; ++c) {
                if (!alive[i][c]) continue;
                bool ok_all = true;
                for (const Move& m : moves[i]) {
                    bool ok = false;
                    for (int x = 0; x < nvc && !ok; ++x)
                        ok = comp_pos[i][x] == c &&
                             (m.walk < 0 || quiet_walk[m.walk][x]) &&
                             quiet_pos[m.dest][x] &&
                             alive[m.dest][comp_pos[m.dest][x]];
                    if (!ok) {
                        ok_all = false;
                        break;
                    }
                }
                if (!ok_all) {
                    alive[i][c] = 0;
                    changed = true;
                }
            }
    }
    // the catcher picks the starting room; the rat then picks a component
    for (int i = 0; i < np; ++i) {
        bool any = false;
        for (int c = 0; c < ncomp_pos[i] && !any; ++c) any = alive[i][c];
        if (!any) return false;
    }
    return true;
}
int carving_width(const PlaneMultigraph& g) {
    int k = 0;
    while (carving_width_at_least(g, k + 1)) ++k;
    return k;
}

CarvingTree carve_to_width(PlaneMultigraph g0, int k) {
    if (carving_width_at_least(g0, k + 1))
        throw Error("carve_to_width: carving-width exceeds target");
    int n_leaves = g0.original_vertex_count();
    for (int v = 0; v < n_leaves; ++v)
        if (g0.degree(g0.find_h(v)) > k)
            throw Error("carve_to_width: vertex degree exceeds target");

    // Each contraction merges two blobs; the cut around the merged blob is
    // the merged degree at that moment, and those cuts (plus the leaf
    // degrees) are exactly the cut weights of the resulting carving tree, so
    // keeping every chosen cut <= k guarantees width <= k outright. The
    // decision procedure only guides the edge choice while many classes
    // remain; once few are left, the exact subset DP finishes the tree. A
    // failed attempt (greedy dead end or endgame over budget) restarts with
    // a reshuffled candidate order.
    constexpr int kEndgame = 15;
    // With few enough classes the subset DP below covers the whole graph and
    // is an exact, deterministic decision: one attempt settles it.
    const bool exact_only = g0.alive_vertex_count() <= kEndgame;
    std::mt19937 rng(0x5eed);
    for (int attempt = 0; attempt < 60; ++attempt) {
        PlaneMultigraph g = g0;
        CarvingTree tree;
        tree.nodes.resize(n_leaves);
        std::vector<int> node_of(n_leaves);
        std::iota(node_of.begin(), node_of.end(), 0);
        bool stuck = false;
        while (g.alive_vertex_count() > kEndgame) {
            std::vector<std::pair<int, int>> cand;  // (merged degree, edge id)
            for (int i : g.alive_edges()) {
                int d = g.merged_degree(i);
                if (d <= k) cand.push_back({d, i});
            }
            if (cand.empty()) {
                stuck = true;
                break;
            }
            if (attempt > 0) std::shuffle(cand.begin(), cand.end(), rng);
            std::stable_sort(cand.begin(), cand.end(),
                             [](const auto& a, const auto& b) { return a.first < b.first; });
            int chosen = -1;
            int guided = 0;
            for (auto [d, i] : cand) {
                if (++guided > 8) break;  // cap the guide's scan; gamble beyond it
                PlaneMultigraph trial = g;
                trial.contract(i);
                if (!carving_width_at_least(trial, k + 1)) {
                    chosen = i;
                    break;
                }
            }
            // the guide can misjudge heavily contracted graphs; gamble on the
            // cheapest cut and let the restart loop absorb a bad roll
            if (chosen < 0) chosen = cand.front().second;
            int a = g.find_h(g.edge(chosen).h0), b = g.find_h(g.edge(chosen).h1);
            g.contract(chosen);
            int fresh = static_cast<int>(tree.nodes.size());
            tree.nodes.push_back({node_of[a], node_of[b]});
            node_of[a] = fresh;
            node_of[b] = fresh;  // survivor is find_h(a) == a
        }
        if (stuck) continue;

        // endgame: exact carving of the remaining classes by subset DP
        std::vector<int> reps;
        std::vector<int> map(n_leaves, -1);
        for (int v = 0; v < n_leaves; ++v)
            if (g.find_h(v) == v) {
                map[v] = static_cast<int>(reps.size());
                reps.push_back(v);
            }
        int nv = static_cast<int>(reps.size());
        std::vector<std::array<int, 2>> es;
        for (int i : g.alive_edges())
            es.push_back({map[g.find_h(g.edge(i).h0)], map[g.find_h(g.edge(i).h1)]});
        int full = (1 << nv) - 1;
        std::vector<int> cut(full + 1, 0);
        for (int S = 1; S <= full; ++S)
            for (auto [x, y] : es) cut[S] += ((S >> x) & 1) != ((S >> y) & 1);
        std::vector<int> f(full + 1, kFar);
        std::vector<int> pick(full + 1, 0);
        for (int v = 0; v < nv; ++v) f[1 << v] = cut[1 << v];
        for (int S = 1; S <= full; ++S) {
            if (!(S & (S - 1))) continue;
            int best = kFar, at = 0;
            for (int A = (S - 1) & S; A; A = (A - 1) & S) {
                int B = S ^ A;
                if (A < B) continue;
                int m2 = std::max(f[A], f[B]);
                if (m2 < best) {
                    best = m2;
                    at = A;
                }
            }
            f[S] = std::max(best, cut[S]);
            pick[S] = at;
        }
        if (f[full] > k) {
            if (exact_only)  // f[full] is the exact carving-width here
                throw Error("carve_to_width: carving-width exceeds target");
            continue;  // an earlier gamble overshot; retry
        }

        // materialize the DP splits as tree nodes (iterative, root last)
        std::vector<int> sub_node(full + 1, -1);
        std::vector<int> order, work{pick[full], full ^ pick[full]};
        while (!work.empty()) {
            int S = work.back();
            work.pop_back();
            order.push_back(S);
            if (S & (S - 1)) {
                work.push_back(pick[S]);
                work.push_back(S ^ pick[S]);
            }
        }
        std::reverse(order.begin(), order.end());
        for (int S : order) {
            if (!(S & (S - 1))) {
                int v = 0;
                while (!((S >> v) & 1)) ++v;
                sub_node[S] = node_of[reps[v]];
            } else {
                int fresh = static_cast<int>(tree.nodes.size());
                tree.nodes.push_back({sub_node[pick[S]], sub_node[S ^ pick[S]]});
                sub_node[S] = fresh;
            }
        }
        tree.join_a = sub_node[pick[full]];
        tree.join_b = sub_node[full ^ pick[full]];
        return tree;
    }
    throw Error("carve_to_width: no carving of width " + std::to_string(k) + " found");
}

}  // namespace gridset
