#include "rotsys/plane.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <stdexcept>

namespace rotsys {

bool is_plane(const Drawing& d, const EdgeList& F) {
    for (std::size_t i = 0; i < F.size(); ++i)
        for (std::size_t j = i + 1; j < F.size(); ++j)
            if (crosses(d, F[i], F[j])) return false;
    return true;
}

bool is_maximal(const Drawing& d, const EdgeList& F) {
    if (!is_plane(d, F)) return false;
    EdgeList sorted = F;
    std::sort(sorted.begin(), sorted.end());
    for (VertexId a = 1; a <= d.n(); ++a)
        for (VertexId b = a + 1; b <= d.n(); ++b) {
            Edge e(a, b);
            if (std::binary_search(sorted.begin(), sorted.end(), e)) continue;
            bool blocked = false;
            for (const Edge& f : F)
                if (crosses(d, e, f)) {
                    blocked = true;
                    break;
                }
            if (!blocked) return false;
        }
    return true;
}

namespace {

// component id per vertex from the member edges alone; -1 for isolated
std::pair<std::vector<int>, int> edge_components(int n, const EdgeList& F) {
    std::vector<int> parent(n + 1);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const Edge& e : F) parent[find(e.u)] = find(e.v);
    std::vector<int> deg(n + 1, 0);
    for (const Edge& e : F) {
        ++deg[e.u];
        ++deg[e.v];
    }
    std::vector<int> comp(n + 1, -1);
    int count = 0;
    for (VertexId v = 1; v <= n; ++v) {
        if (deg[v] == 0) continue;
        int root = find(v);
        if (comp[root] == -1) comp[root] = count++;
        comp[v] = comp[root];
    }
    for (VertexId v = 1; v <= n; ++v)
        if (deg[v] > 0) comp[v] = comp[find(v)];
    return {comp, count};
}

}  // namespace

bool is_edgewise_connected(int n, const EdgeList& F) {
    if (F.empty()) return false;
    return edge_components(n, F).second == 1;
}

ConnectivityReport connectivity(int n, const EdgeList& F) {
    ConnectivityReport r;
    r.edge_count = static_cast<int>(F.size());
    std::vector<std::vector<VertexId>> adj(n + 1);
    for (const Edge& e : F) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    r.min_degree = n;
    for (VertexId v = 1; v <= n; ++v)
        r.min_degree = std::min(r.min_degree,
                                static_cast<int>(adj[v].size()));
    r.spanning = r.min_degree >= 1;

    auto count_components = [&](Edge skip1, Edge skip2) {
        // components over all n vertices, ignoring up to two edges
        std::vector<char> vis(n + 1, 0);
        int comps = 0;
        std::vector<VertexId> stack;
        for (VertexId sv = 1; sv <= n; ++sv) {
            if (vis[sv]) continue;
            ++comps;
            stack.assign(1, sv);
            vis[sv] = 1;
            while (!stack.empty()) {
                VertexId v = stack.back();
                stack.pop_back();
                for (VertexId u : adj[v]) {
                    Edge e(v, u);
                    if (e == skip1 || e == skip2) continue;
                    if (!vis[u]) {
                        vis[u] = 1;
                        stack.push_back(u);
                    }
                }
            }
        }
        return comps;
    };
    const Edge none;
    r.connected = count_components(none, none) == 1;

    // articulation vertices by rooted DFS low points
    if (r.connected && n >= 3) {
        std::vector<int> num(n + 1, -1), low(n + 1, 0);
        int timer = 0;
        bool articulation = false;
        std::function<void(VertexId, VertexId)> dfs = [&](VertexId v,
                                                          VertexId from) {
            num[v] = low[v] = timer++;
            int children = 0;
            for (VertexId u : adj[v]) {
                if (num[u] == -1) {
                    ++children;
                    dfs(u, v);
                    low[v] = std::min(low[v], low[u]);
                    if (from != 0 && low[u] >= num[v]) articulation = true;
                } else if (u != from) {
                    low[v] = std::min(low[v], num[u]);
                }
            }
            if (from == 0 && children > 1) articulation = true;
        };
        dfs(1, 0);
        r.two_connected = !articulation;
    }

    if (r.connected) {
        r.essentially_3ec = true;
        std::vector<int> deg(n + 1, 0);
        for (const Edge& e : F) {
            ++deg[e.u];
            ++deg[e.v];
        }
        for (std::size_t i = 0; i < F.size() && r.essentially_3ec; ++i)
            for (std::size_t j = i + 1; j < F.size() && r.essentially_3ec;
                 ++j) {
                // pairs meeting in a degree-2 vertex are exempt: they can
                // only clip that vertex off
                bool exempt = false;
                for (VertexId v : {F[i].u, F[i].v})
                    if (F[j].contains(v) && deg[v] == 2) exempt = true;
                if (exempt) continue;
                if (count_components(F[i], F[j]) != 1)
                    r.essentially_3ec = false;
            }
    }
    return r;
}

// ════════════════════════════════════════════════════════════════════════
// FaceStructure
// ════════════════════════════════════════════════════════════════════════

FaceStructure::FaceStructure(const Drawing& d, EdgeList members)
    : d_(&d), members_(std::move(members)) {
    const int n = d.n();
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()),
                   members_.end());
    if (members_.empty())
        throw std::invalid_argument("faces: need at least one member edge");
    for (const Edge& e : members_)
        if (e.u < 1 || e.v > n || e.u == e.v)
            throw std::invalid_argument("faces: member edge out of range");
    auto cc = edge_components(n, members_);
    comp_ = std::move(cc.first);
    comp_count_ = cc.second;
    if (comp_count_ != 1)
        throw std::invalid_argument("faces: members must form one component");

    inc_far_.assign(n + 1, {});
    inc_pos_.assign(n + 1, {});
    for (const Edge& e : members_) {
        inc_far_[e.u].push_back(e.v);
        inc_far_[e.v].push_back(e.u);
    }
    for (VertexId v = 1; v <= n; ++v) {
        auto& far = inc_far_[v];
        std::sort(far.begin(), far.end(), [&](VertexId a, VertexId b) {
            return d.position(v, a) < d.position(v, b);
        });
        inc_pos_[v].reserve(far.size());
        for (VertexId u : far) inc_pos_[v].push_back(d.position(v, u));
    }

    const int mcount = static_cast<int>(members_.size());
    dir_face_.assign(mcount, {-1, -1});
    dir_pos_.assign(mcount, {-1, -1});
    corner_face_.assign(n + 1, {});
    corner_pos_.assign(n + 1, {});
    for (VertexId v = 1; v <= n; ++v) {
        corner_face_[v].assign(inc_far_[v].size(), -1);
        corner_pos_[v].assign(inc_far_[v].size(), -1);
    }

    auto dir_slot = [&](VertexId x, VertexId y) {
        // slot 0 carries u->v of the canonical edge, slot 1 carries v->u
        int mi = member_index(Edge(x, y));
        return std::pair<int, int>(mi, x < y ? 0 : 1);
    };
    auto next_of = [&](VertexId u, VertexId w) {
        // leave w toward the clockwise predecessor of u
        const auto& pos = inc_pos_[w];
        int p = d.position(w, u);
        int j = static_cast<int>(
            std::lower_bound(pos.begin(), pos.end(), p) - pos.begin());
        int jm = (j - 1 + static_cast<int>(pos.size())) %
                 static_cast<int>(pos.size());
        return std::pair<int, VertexId>(jm, inc_far_[w][jm]);
    };

    for (int mi = 0; mi < mcount; ++mi) {
        for (int slot = 0; slot < 2; ++slot) {
            if (dir_face_[mi][slot] != -1) continue;
            const int fid = static_cast<int>(faces_.size());
            std::vector<std::pair<VertexId, VertexId>> walk;
            VertexId su = slot == 0 ? members_[mi].u : members_[mi].v;
            VertexId sv = slot == 0 ? members_[mi].v : members_[mi].u;
            const std::pair<VertexId, VertexId> start{su, sv};
            std::pair<VertexId, VertexId> cur = start;
            while (true) {
                auto [cmi, cslot] = dir_slot(cur.first, cur.second);
                dir_face_[cmi][cslot] = fid;
                dir_pos_[cmi][cslot] = static_cast<int>(walk.size());
                walk.push_back(cur);
                auto [jm, t] = next_of(cur.first, cur.second);
                std::pair<VertexId, VertexId> nxt{cur.second, t};
                corner_face_[cur.second][jm] = fid;
                corner_pos_[cur.second][jm] =
                    nxt == start ? 0 : static_cast<int>(walk.size());
                if (nxt == start) break;
                cur = nxt;
            }
            faces_.push_back(std::move(walk));
        }
    }

    // sphere count: one component cuts it into edges - vertices + 2 faces
    int used = 0;
    for (VertexId v = 1; v <= n; ++v)
        if (!inc_far_[v].empty()) ++used;
    if (used - mcount + static_cast<int>(faces_.size()) != 2)
        throw std::logic_error("faces: walk structure is inconsistent");
}

int FaceStructure::member_index(Edge e) const {
    auto it = std::lower_bound(members_.begin(), members_.end(), e);
    if (it == members_.end() || !(*it == e))
        throw std::invalid_argument("faces: not a member edge");
    return static_cast<int>(it - members_.begin());
}

bool FaceStructure::is_member(Edge e) const {
    return std::binary_search(members_.begin(), members_.end(), e);
}

int FaceStructure::walk_face(VertexId x, VertexId y) const {
    int mi = member_index(Edge(x, y));
    return dir_face_[mi][x < y ? 0 : 1];
}

int FaceStructure::walk_index(VertexId x, VertexId y) const {
    int mi = member_index(Edge(x, y));
    return dir_pos_[mi][x < y ? 0 : 1];
}

int FaceStructure::corner_at(VertexId w, int p) const {
    const auto& pos = inc_pos_[w];
    if (pos.empty())
        throw std::invalid_argument("faces: vertex has no member edges");
    // largest member position <= p, wrapping below the smallest
    auto it = std::upper_bound(pos.begin(), pos.end(), p);
    if (it == pos.begin()) return static_cast<int>(pos.size()) - 1;
    return static_cast<int>(it - pos.begin()) - 1;
}

int FaceStructure::face_containing_vertex(VertexId v) const {
    const Drawing& d = *d_;
    if (degree(v) > 0)
        throw std::invalid_argument("faces: vertex has member edges");
    VertexId w = 0;
    for (VertexId t : d.rotation(v))
        if (degree(t) > 0) {
            w = t;
            break;
        }
    auto hit = first_crossed_edge(d, v, w, members_);
    if (hit) return crossing_side(*this, *hit, v, w);
    return corner_face(w, corner_at(w, d.position(w, v)));
}

int crossing_side(const FaceStructure& fs, Edge f, VertexId u, VertexId w) {
    // seen from f.u, the ray's ends straddle f.v; which side u falls on
    // picks the walk direction whose right side faces u
    if (fs.drawing().cyclic_cw(f.u, u, f.v, w)) return fs.walk_face(f.v, f.u);
    return fs.walk_face(f.u, f.v);
}

Location locate_edge(const FaceStructure& fs, Edge e) {
    if (fs.is_member(e)) return {EdgeLocation::Member, -1};
    const Drawing& d = fs.drawing();
    for (const Edge& f : fs.members())
        if (crosses(d, e, f)) return {EdgeLocation::CrossesSubgraph, -1};
    auto side_of = [&](VertexId x, VertexId y) {
        // attachment of e at endpoint x, looking toward y
        if (fs.degree(x) == 0) return fs.face_containing_vertex(x);
        return fs.corner_face(x, fs.corner_at(x, d.position(x, y)));
    };
    int fu = side_of(e.u, e.v);
    int fv = side_of(e.v, e.u);
    if (fu != fv)
        throw std::logic_error(
            "locate_edge: endpoints of an uncrossing edge attach to "
            "different faces");
    return {EdgeLocation::InsideFace, fu};
}

}  // namespace rotsys
