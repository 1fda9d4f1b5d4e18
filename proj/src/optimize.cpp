#include "rotsys/optimize.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rotsys/augment.hpp"
#include "rotsys/plane.hpp"

namespace rotsys {

int ConflictGraph::index_of(Edge e) const {
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || !(*it == e)) return -1;
    return static_cast<int>(it - edges.begin());
}

ConflictGraph build_conflict_graph(const Drawing& d) {
    ConflictGraph g;
    for (VertexId u = 1; u <= d.n(); ++u)
        for (VertexId v = u + 1; v <= d.n(); ++v) g.edges.emplace_back(u, v);
    const int E = static_cast<int>(g.edges.size());
    g.conflicts.assign(E, std::vector<char>(E, 0));
    for (int i = 0; i < E; ++i)
        for (int j = i + 1; j < E; ++j)
            if (crosses(d, g.edges[i], g.edges[j]))
                g.conflicts[i][j] = g.conflicts[j][i] = 1;
    return g;
}

// ════════════════════════════════════════════════════════════════════════
// exact_max: maximum independent set in the conflict graph
// ════════════════════════════════════════════════════════════════════════

namespace {

struct Searcher {
    const ConflictGraph* g = nullptr;
    std::vector<int> cur, best;

    // P is the set of still-free candidates, ascending.  cur holds the
    // committed picks; everything conflicting with them has already been
    // dropped from P.
    void run(std::vector<int> P) {
        const auto& cf = g->conflicts;
        const std::size_t entry = cur.size();

        // ── Step 1: candidates with at most one remaining conflict can
        // always be taken without losing cardinality ──
        for (bool changed = true; changed;) {
            changed = false;
            for (std::size_t a = 0; a < P.size(); ++a) {
                int deg = 0, nb = -1;
                for (int o : P) {
                    if (o == P[a]) continue;
                    if (cf[P[a]][o]) {
                        ++deg;
                        nb = o;
                        if (deg > 1) break;
                    }
                }
                if (deg > 1) continue;
                const int me = P[a];
                cur.push_back(me);
                std::vector<int> Q;
                Q.reserve(P.size());
                for (int o : P)
                    if (o != me && o != nb) Q.push_back(o);
                P = std::move(Q);
                changed = true;
                break;
            }
        }

        if (P.empty()) {
            if (cur.size() > best.size()) best = cur;
        } else {
            // ── Step 2: greedy clique cover of P; an independent set
            // takes at most one node per clique ──
            std::vector<std::vector<int>> cliques;
            for (int v : P) {
                bool placed = false;
                for (auto& c : cliques) {
                    bool all = true;
                    for (int m : c)
                        if (!cf[v][m]) {
                            all = false;
                            break;
                        }
                    if (all) {
                        c.push_back(v);
                        placed = true;
                        break;
                    }
                }
                if (!placed) cliques.push_back({v});
            }
            if (cur.size() + cliques.size() > best.size()) {
                // ── Step 3: branch on a most-conflicting candidate,
                // first including it, then excluding it ──
                int b = P[0], bd = -1;
                for (int v : P) {
                    int deg = 0;
                    for (int o : P)
                        if (o != v && cf[v][o]) ++deg;
                    if (deg > bd) {
                        bd = deg;
                        b = v;
                    }
                }
                std::vector<int> Pin, Pout;
                Pout.reserve(P.size());
                for (int o : P)
                    if (o != b) {
                        Pout.push_back(o);
                        if (!cf[b][o]) Pin.push_back(o);
                    }
                cur.push_back(b);
                run(std::move(Pin));
                cur.pop_back();
                run(std::move(Pout));
            }
        }
        cur.resize(entry);
    }
};

}  // namespace

EdgeList exact_max(const Drawing& d, const EdgeList& must_include,
                   int limit_n) {
    if (d.n() > limit_n)
        throw std::invalid_argument(
            "exact_max: n exceeds limit_n (the search is exponential; "
            "raise the limit explicitly if you mean it)");
    ConflictGraph g = build_conflict_graph(d);
    const int E = static_cast<int>(g.edges.size());

    std::vector<char> forced(E, 0), banned(E, 0);
    for (Edge e : must_include) {
        int i = g.index_of(e);
        if (i < 0)
            throw std::invalid_argument(
                "exact_max: must_include edge out of range");
        forced[i] = 1;
    }
    for (int i = 0; i < E; ++i) {
        if (!forced[i]) continue;
        for (int j = 0; j < E; ++j)
            if (g.conflicts[i][j]) {
                if (forced[j])
                    throw std::invalid_argument(
                        "exact_max: must_include has a crossing pair");
                banned[j] = 1;
            }
    }

    Searcher s;
    s.g = &g;
    for (int i = 0; i < E; ++i)
        if (forced[i]) s.cur.push_back(i);
    // incumbent: a greedy completion of the forced set
    for (Edge e : greedy_maximal(d, must_include))
        s.best.push_back(g.index_of(e));

    std::vector<int> P;
    for (int i = 0; i < E; ++i)
        if (!forced[i] && !banned[i]) P.push_back(i);
    s.run(std::move(P));

    EdgeList out;
    out.reserve(s.best.size());
    for (int i : s.best) out.push_back(g.edges[i]);
    std::sort(out.begin(), out.end());
    return out;
}

// ════════════════════════════════════════════════════════════════════════
// maximize_connected: optimal completion of a spanning connected subgraph
// ════════════════════════════════════════════════════════════════════════
//
// Addable edges partition by the face of F they lie in, and edges in
// different faces never cross, so each face is optimized alone.  A face
// with boundary corners 0..k-1 (in walk order) is a disc: a candidate
// chord occupies the two corners its ends attach at, and two chords cross
// iff their corner pairs interleave around the walk.  Chords ending at two
// occurrences of the same cut vertex share that point of the drawing and
// therefore never cross anything from its other occurrence; corner pairs
// of such a phantom "chord" get weight 1 below and are never reported.
//
// Picking a maximum non-interleaving set of available chords is solved as
// a minimum-weight polygon triangulation over the corner polygon: every
// triangulation has exactly k-3 diagonals, each diagonal costs 0 when it
// is an available chord and 1 otherwise, so the minimum-weight
// triangulation maximizes the number of available chords used.

namespace {

struct FaceDP {
    int k = 0;
    // avail[i*k+j] for i<j: index into the face's candidate list, -1 none
    std::vector<int> avail;

    int weight(int x, int y) const {
        if (y == x + 1) return 0;  // boundary side
        return avail[x * k + y] >= 0 ? 0 : 1;
    }
};

}  // namespace

EdgeList maximize_connected(const Drawing& d, const EdgeList& F) {
    if (!is_plane(d, F))
        throw std::invalid_argument("maximize_connected: F has crossings");
    if (!is_edgewise_connected(d.n(), F))
        throw std::invalid_argument(
            "maximize_connected: F must be edgewise connected");
    if (!connectivity(d.n(), F).spanning)
        throw std::invalid_argument("maximize_connected: F must be spanning");

    FaceStructure fs(d, F);
    std::vector<EdgeList> bucket(fs.face_count());
    for (VertexId u = 1; u <= d.n(); ++u)
        for (VertexId v = u + 1; v <= d.n(); ++v) {
            Edge e(u, v);
            Location loc = locate_edge(fs, e);
            if (loc.kind == EdgeLocation::InsideFace)
                bucket[loc.face].push_back(e);
        }

    EdgeList out = fs.members();
    for (int f = 0; f < fs.face_count(); ++f) {
        const EdgeList& cands = bucket[f];
        if (cands.empty()) continue;
        const int k = static_cast<int>(fs.walk(f).size());
        if (k < 4)
            throw std::logic_error(
                "maximize_connected: candidate inside a face without room");

        // ── Step 1: attach each candidate to its corner pair ──
        FaceDP dp;
        dp.k = k;
        dp.avail.assign(static_cast<std::size_t>(k) * k, -1);
        for (std::size_t ci = 0; ci < cands.size(); ++ci) {
            const Edge e = cands[ci];
            int sa = 0, sb = 0;
            for (int end = 0; end < 2; ++end) {
                const VertexId x = end ? e.v : e.u;
                const VertexId y = end ? e.u : e.v;
                const int j = fs.corner_at(x, d.position(x, y));
                if (fs.corner_face(x, j) != f)
                    throw std::logic_error(
                        "maximize_connected: corner off the located face");
                (end ? sb : sa) = fs.corner_walk_index(x, j);
            }
            if (sa > sb) std::swap(sa, sb);
            if (sb == sa + 1 || (sa == 0 && sb == k - 1))
                throw std::logic_error(
                    "maximize_connected: chord on a boundary side");
            if (dp.avail[sa * k + sb] >= 0)
                throw std::logic_error(
                    "maximize_connected: two chords on one corner pair");
            dp.avail[sa * k + sb] = static_cast<int>(ci);
        }

        // ── Step 2: interval DP over the corner polygon ──
        std::vector<int> M(static_cast<std::size_t>(k) * k, 0);
        std::vector<int> choice(static_cast<std::size_t>(k) * k, -1);
        for (int span = 2; span < k; ++span)
            for (int i = 0; i + span < k; ++i) {
                const int j = i + span;
                int bestv = -1, bestt = -1;
                for (int t = i + 1; t < j; ++t) {
                    const int v = M[i * k + t] + M[t * k + j] +
                                  dp.weight(i, t) + dp.weight(t, j);
                    if (bestt < 0 || v < bestv) {
                        bestv = v;
                        bestt = t;
                    }
                }
                M[i * k + j] = bestv;
                choice[i * k + j] = bestt;
            }

        // ── Step 3: read the zero-weight diagonals back off ──
        std::vector<std::pair<int, int>> stack{{0, k - 1}};
        while (!stack.empty()) {
            auto [i, j] = stack.back();
            stack.pop_back();
            if (j <= i + 1) continue;
            const int t = choice[i * k + j];
            if (t > i + 1 && dp.avail[i * k + t] >= 0)
                out.push_back(cands[dp.avail[i * k + t]]);
            if (j > t + 1 && dp.avail[t * k + j] >= 0)
                out.push_back(cands[dp.avail[t * k + j]]);
            stack.push_back({i, t});
            stack.push_back({t, j});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace rotsys
