#include "rotsys/augment.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

namespace rotsys {

EdgeList uncrossed_rays_brute(const Drawing& d, const EdgeList& F,
                              VertexId v) {
    std::vector<char> inF(d.n() + 1, 0);
    for (const Edge& e : F) {
        inF[e.u] = 1;
        inF[e.v] = 1;
    }
    EdgeList out;
    for (VertexId u = 1; u <= d.n(); ++u) {
        if (u == v || !inF[u]) continue;
        Edge e(v, u);
        int cr = 0;
        for (const Edge& f : F)
            if (crosses(d, e, f)) ++cr;
        if (cr == 0) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// the directed occurrence of crossed edge f whose right side faces u,
// for a ray u -> w crossing f
std::pair<VertexId, VertexId> side_occurrence(const Drawing& d, Edge f,
                                              VertexId u, VertexId w) {
    if (d.cyclic_cw(f.u, u, f.v, w)) return {f.v, f.u};
    return {f.u, f.v};
}

struct Cand {
    VertexId c;
    int face;  // face and walk position of the ray's attachment corner
    int pos;
};

Cand make_cand(const FaceStructure& fs, VertexId v, VertexId c) {
    int j = fs.corner_at(c, fs.drawing().position(c, v));
    return {c, fs.corner_face(c, j), fs.corner_walk_index(c, j)};
}

// One sweep of the candidate rays along the face boundary, starting at
// walk position k0.  Forward walks the occurrences as stored and accepts
// at the corner after an occurrence; backward walks them reversed and
// accepts at the corner before.  A candidate is dropped as soon as an
// occurrence crosses its ray from this face's side, or when its target is
// not on the face at all; otherwise the boundary advances until the
// candidate's attachment corner comes up.
std::vector<Cand> boundary_sweep(const FaceStructure& fs, VertexId v,
                                 int face, int k0,
                                 const std::vector<Cand>& cands,
                                 bool forward) {
    const Drawing& d = fs.drawing();
    const auto& walk = fs.walk(face);
    const int M = static_cast<int>(walk.size());
    std::vector<char> onface(d.n() + 1, 0);
    for (const auto& [x, y] : walk) onface[x] = 1;
    std::vector<Cand> out;
    int i = 0, k = 0;
    while (i < static_cast<int>(cands.size()) && k < M) {
        const int t = forward ? (k0 + k) % M : ((k0 - 1 - k) % M + M) % M;
        const auto& [x, y] = walk[t];
        const Cand& cd = cands[i];
        const Edge mem(x, y), ray(v, cd.c);
        bool cross_occ = false;
        if (crosses(d, ray, mem)) {
            auto so = side_occurrence(d, mem, v, cd.c);
            cross_occ = so.first == x && so.second == y;
        }
        if (cross_occ || !onface[cd.c]) {
            ++i;
            continue;
        }
        const int accept_pos = forward ? (t + 1) % M : t;
        if (cd.face == face && cd.pos == accept_pos) {
            out.push_back(cd);
            ++i;
            ++k;
            continue;
        }
        ++k;
    }
    // candidates the boundary ran out on are crossed rays whose exit
    // points all lie behind; they are dropped like any other
    return out;
}

// both sweeps back to back; returns accepted targets
std::vector<VertexId> settle(const FaceStructure& fs, VertexId v, int face,
                             int k0, std::vector<Cand> cands) {
    auto fwd = boundary_sweep(fs, v, face, k0, cands, true);
    // the reverse pass needs its input in backward-encounter order, which
    // is the acceptance order reversed cyclically around the walk, not
    // linearly: a survivor's corner at position p comes up at backward
    // step (k0 - 1 - p) mod M
    const int M = static_cast<int>(fs.walk(face).size());
    std::sort(fwd.begin(), fwd.end(), [&](const Cand& a, const Cand& b) {
        return (k0 - 1 - a.pos % M + 2 * M) % M <
               (k0 - 1 - b.pos % M + 2 * M) % M;
    });
    auto bwd = boundary_sweep(fs, v, face, k0, fwd, false);
    std::vector<VertexId> out;
    out.reserve(bwd.size());
    for (const Cand& cd : bwd) out.push_back(cd.c);
    return out;
}

}  // namespace

EdgeList uncrossed_rays_fast(const FaceStructure& fs, VertexId v) {
    const Drawing& d = fs.drawing();
    EdgeList out;
    if (fs.degree(v) == 0) {
        VertexId w1 = 0;
        for (VertexId t : d.rotation(v))
            if (fs.degree(t) > 0) {
                w1 = t;
                break;
            }
        auto hit = first_crossed_edge(d, v, w1, fs.members());
        int face, k0;
        bool seeded = false;
        if (hit) {
            auto so = side_occurrence(d, *hit, v, w1);
            face = fs.walk_face(so.first, so.second);
            k0 = fs.walk_index(so.first, so.second);
        } else {
            int j = fs.corner_at(w1, d.position(w1, v));
            face = fs.corner_face(w1, j);
            k0 = fs.corner_walk_index(w1, j);
            seeded = true;
        }
        std::vector<Cand> cands;
        const int p1 = d.position(v, w1);
        for (int s = seeded ? 1 : 0; s < d.n() - 1; ++s) {
            VertexId c = d.at(v, p1 + s);
            if (fs.degree(c) > 0) cands.push_back(make_cand(fs, v, c));
        }
        for (VertexId c : settle(fs, v, face, k0, std::move(cands)))
            out.emplace_back(v, c);
        if (seeded) out.emplace_back(v, w1);
    } else {
        const auto& pos = fs.incident_pos(v);
        const int degv = static_cast<int>(pos.size());
        const int m = d.n() - 1;
        for (int j = 0; j < degv; ++j) {
            const int a = pos[j];
            const int len =
                degv == 1 ? m : (pos[(j + 1) % degv] - a + m) % m;
            std::vector<Cand> cands;
            for (int s = 1; s < len; ++s) {
                VertexId c = d.at(v, a + s);
                if (fs.degree(c) > 0) cands.push_back(make_cand(fs, v, c));
            }
            if (cands.empty()) continue;
            const int face = fs.corner_face(v, j);
            const int k0 = fs.corner_walk_index(v, j);
            for (VertexId c : settle(fs, v, face, k0, std::move(cands)))
                out.emplace_back(v, c);
        }
        for (VertexId u : fs.incident(v)) out.emplace_back(v, u);
    }
    std::sort(out.begin(), out.end());
#ifdef ROTSYS_SELFCHECK
    if (out != uncrossed_rays_brute(d, fs.members(), v))
        throw std::logic_error("uncrossed_rays_fast: reference mismatch");
#endif
    return out;
}

EdgeList uncrossed_rays_fast(const Drawing& d, const EdgeList& F,
                             VertexId v) {
    FaceStructure fs(d, F);
    return uncrossed_rays_fast(fs, v);
}

FreeRanges free_ranges(const Drawing& d, Edge f, VertexId v, VertexId r) {
    if (f.contains(v) || f.contains(r) || v == r)
        throw std::invalid_argument("free_ranges: vertices not distinct");
    if (!crosses(d, Edge(v, r), f))
        throw std::invalid_argument("free_ranges: probe does not cross f");
    VertexId p = f.u, q = f.v;
    if (!d.cyclic_cw(v, r, p, q)) std::swap(p, q);
    const Edge probe(v, r);

    // scan the vertices beyond f (clockwise open range p..q around v) for
    // rays that cross f closer to the reference end than the probe does
    const int span = d.cw_dist(v, p, q);
    const int pp = d.position(v, p), pq = d.position(v, q);
    VertexId last_cw = 0, last_ccw = 0;
    for (int k = 1; k < span; ++k) {
        VertexId scw = d.at(v, pp + k);
        if (crosses(d, Edge(v, scw), f) &&
            crossing_order(d, f, p, Edge(v, scw), probe) == Edge(v, scw))
            last_cw = scw;
        VertexId sccw = d.at(v, pq - k);
        if (crosses(d, Edge(v, sccw), f) &&
            crossing_order(d, f, q, Edge(v, sccw), probe) == Edge(v, sccw))
            last_ccw = sccw;
    }
    FreeRanges out;
    const VertexId stop_cw = last_cw ? last_cw : p;
    const VertexId stop_ccw = last_ccw ? last_ccw : q;
    const int pr = d.position(v, r);
    for (int k = 1;; ++k) {
        VertexId s = d.at(v, pr + k);
        out.cw.emplace_back(v, s);
        if (s == stop_cw) break;
    }
    for (int k = 1;; ++k) {
        VertexId s = d.at(v, pr - k);
        out.ccw.emplace_back(v, s);
        if (s == stop_ccw) break;
    }
    return out;
}

EdgeList greedy_maximal(const Drawing& d, EdgeList seed) {
    if (!is_plane(d, seed))
        throw std::invalid_argument("greedy_maximal: seed has crossings");
    const int n = d.n();
    EdgeList F = std::move(seed);
    std::sort(F.begin(), F.end());
    F.erase(std::unique(F.begin(), F.end()), F.end());
    if (F.empty()) F.emplace_back(1, 2);
    std::vector<std::vector<char>> in(n + 1, std::vector<char>(n + 1, 0));
    for (const Edge& e : F) in[e.u][e.v] = in[e.v][e.u] = 1;
    for (VertexId v = 1; v <= n; ++v) {
        for (VertexId u : d.rotation(v)) {
            if (in[v][u]) continue;
            Edge e(v, u);
            bool blocked = false;
            for (const Edge& f : F)
                if (crosses(d, e, f)) {
                    blocked = true;
                    break;
                }
            if (!blocked) {
                F.push_back(e);
                in[v][u] = in[u][v] = 1;
            }
        }
    }
    std::sort(F.begin(), F.end());
    return F;
}

EdgeList maximal_connected_fast(const Drawing& d, EdgeList F) {
    if (F.empty())
        throw std::invalid_argument(
            "maximal_connected_fast: need a nonempty subgraph");
    if (!is_edgewise_connected(d.n(), F))
        throw std::invalid_argument(
            "maximal_connected_fast: subgraph must be edgewise connected");
    std::sort(F.begin(), F.end());
    F.erase(std::unique(F.begin(), F.end()), F.end());
    for (VertexId v = 1; v <= d.n(); ++v) {
        FaceStructure fs(d, F);
        EdgeList add;
        for (const Edge& e : uncrossed_rays_fast(fs, v))
            if (!fs.is_member(e)) add.push_back(e);
        F.insert(F.end(), add.begin(), add.end());
        std::sort(F.begin(), F.end());
    }
    return F;
}

EdgeList star_plus_tree(const Drawing& d, VertexId center) {
    const int n = d.n();
    if (center < 1 || center > n)
        throw std::invalid_argument("star_plus_tree: center out of range");
    EdgeList star;
    for (VertexId u = 1; u <= n; ++u)
        if (u != center) star.emplace_back(center, u);
    EdgeList maximal = maximal_connected_fast(d, star);

    std::vector<std::vector<VertexId>> adj(n + 1);
    for (const Edge& e : maximal)
        if (!e.contains(center)) {
            adj[e.u].push_back(e.v);
            adj[e.v].push_back(e.u);
        }
    const VertexId root = center == 1 ? 2 : 1;
    std::vector<VertexId> parent(n + 1, 0), queue{root};
    parent[root] = root;
    for (std::size_t h = 0; h < queue.size(); ++h) {
        VertexId v = queue[h];
        for (VertexId u : adj[v])
            if (parent[u] == 0) {
                parent[u] = v;
                queue.push_back(u);
            }
    }
    if (static_cast<int>(queue.size()) != n - 1)
        throw std::logic_error(
            "star_plus_tree: maximal subgraph minus center fell apart");
    EdgeList out = std::move(star);
    for (VertexId u = 1; u <= n; ++u)
        if (u != center && u != root) out.emplace_back(u, parent[u]);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace rotsys
