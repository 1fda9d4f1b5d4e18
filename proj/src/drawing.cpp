#include "rotsys/drawing.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>

#include "rotsys/geometry.hpp"

namespace rotsys {

// ════════════════════════════════════════════════════════════════════════
// Drawing
// ════════════════════════════════════════════════════════════════════════

Drawing::Drawing(int n, std::vector<std::vector<VertexId>> rows) : n_(n) {
    if (n < 3) throw std::invalid_argument("drawing: need at least 3 vertices");
    if (static_cast<int>(rows.size()) != n)
        throw std::invalid_argument("drawing: expected one rotation per vertex");
    for (int i = 0; i < n; ++i)
        if (static_cast<int>(rows[i].size()) != n - 1)
            throw std::invalid_argument(
                "drawing: rotation of vertex " + std::to_string(i + 1) +
                " must have " + std::to_string(n - 1) + " entries");
    rot_.assign(n + 1, {});
    pos_.assign(n + 1, std::vector<int>(n + 1, -1));
    for (VertexId v = 1; v <= n; ++v) {
        rot_[v] = std::move(rows[v - 1]);
        for (int i = 0; i < n - 1; ++i) {
            VertexId u = rot_[v][i];
            // out-of-range or duplicate entries are caught by validate();
            // keep pos_ safe to index regardless
            if (u >= 1 && u <= n && u != v) pos_[v][u] = i;
        }
    }
}

void Drawing::set_coords(std::vector<Point> pts) {
    if (static_cast<int>(pts.size()) != n_)
        throw std::invalid_argument("coords: expected one point per vertex");
    pts_.assign(n_ + 1, Point{});
    for (VertexId v = 1; v <= n_; ++v) pts_[v] = pts[v - 1];
}

std::vector<std::string> Drawing::validate() const {
    std::vector<std::string> issues;
    for (VertexId v = 1; v <= n_; ++v) {
        std::vector<bool> seen(n_ + 1, false);
        for (VertexId u : rot_[v]) {
            if (u < 1 || u > n_) {
                issues.push_back("vertex " + std::to_string(v) + ": entry " +
                                 std::to_string(u) + " out of range");
            } else if (u == v) {
                issues.push_back("vertex " + std::to_string(v) +
                                 ": lists itself");
            } else if (seen[u]) {
                issues.push_back("vertex " + std::to_string(v) + ": lists " +
                                 std::to_string(u) + " twice");
            } else {
                seen[u] = true;
            }
        }
    }
    if (!issues.empty()) return issues;  // pattern checks need sane rows
    for (VertexId a = 1; a <= n_; ++a)
        for (VertexId b = a + 1; b <= n_; ++b)
            for (VertexId c = b + 1; c <= n_; ++c)
                for (VertexId d = c + 1; d <= n_; ++d)
                    if (k4_pattern(k4_index(*this, a, b, c, d)).kind ==
                        K4Pattern::NonRealizable)
                        issues.push_back(
                            "vertices " + std::to_string(a) + " " +
                            std::to_string(b) + " " + std::to_string(c) + " " +
                            std::to_string(d) +
                            " induce a pattern no drawing of K4 has");
    return issues;
}

Drawing Drawing::restrict_to(const std::vector<VertexId>& subset) const {
    const int k = static_cast<int>(subset.size());
    if (k < 3)
        throw std::invalid_argument("restrict_to: need at least 3 vertices");
    std::vector<VertexId> newid(n_ + 1, 0);
    for (int i = 0; i < k; ++i) {
        VertexId v = subset[i];
        if (v < 1 || v > n_)
            throw std::invalid_argument("restrict_to: vertex out of range");
        if (i > 0 && subset[i] <= subset[i - 1])
            throw std::invalid_argument(
                "restrict_to: subset must be sorted ascending");
        newid[v] = i + 1;
    }
    std::vector<std::vector<VertexId>> rows(k);
    for (int i = 0; i < k; ++i)
        for (VertexId u : rot_[subset[i]])
            if (newid[u] != 0) rows[i].push_back(newid[u]);
    Drawing out(k, std::move(rows));
    if (has_coords()) {
        std::vector<Point> pts(k);
        for (int i = 0; i < k; ++i) pts[i] = pts_[subset[i]];
        out.set_coords(std::move(pts));
    }
    return out;
}

Drawing Drawing::relabel(const std::vector<VertexId>& perm) const {
    if (static_cast<int>(perm.size()) != n_ + 1)
        throw std::invalid_argument("relabel: perm must map 1..n (size n+1)");
    std::vector<bool> hit(n_ + 1, false);
    for (VertexId v = 1; v <= n_; ++v) {
        if (perm[v] < 1 || perm[v] > n_ || hit[perm[v]])
            throw std::invalid_argument("relabel: not a permutation of 1..n");
        hit[perm[v]] = true;
    }
    std::vector<std::vector<VertexId>> rows(n_);
    for (VertexId v = 1; v <= n_; ++v) {
        rows[perm[v] - 1].reserve(n_ - 1);
        for (VertexId u : rot_[v]) rows[perm[v] - 1].push_back(perm[u]);
    }
    Drawing out(n_, std::move(rows));
    if (has_coords()) {
        std::vector<Point> pts(n_);
        for (VertexId v = 1; v <= n_; ++v) pts[perm[v] - 1] = pts_[v];
        out.set_coords(std::move(pts));
    }
    return out;
}

// ════════════════════════════════════════════════════════════════════════
// K4 pattern table
// ════════════════════════════════════════════════════════════════════════
//
// Built once by brute force: place four labeled points either in convex
// position or as a triangle with one point inside, read off the clockwise
// rotations, and record which edge pairing crosses.  Every labeling of both
// shapes and both mirror images is fed in; the samples must agree wherever
// they produce the same pattern, and together they realize exactly eight of
// the sixteen patterns.

namespace {

// the 4-bit pattern of four labeled points, clockwise convention
int pattern_of_points(const std::array<Point, 4>& p) {
    int idx = 0;
    for (int i = 0; i < 4; ++i) {
        std::array<int, 3> o{};
        int k = 0;
        for (int j = 0; j < 4; ++j)
            if (j != i) o[k++] = j;
        std::array<double, 3> ang{};
        for (int j = 0; j < 3; ++j)
            ang[j] = std::atan2(p[o[j]].y - p[i].y, p[o[j]].x - p[i].x);
        std::array<int, 3> ord{0, 1, 2};
        std::sort(ord.begin(), ord.end(),
                  [&](int x, int y) { return ang[x] > ang[y]; });
        std::array<int, 3> pos{};
        for (int r = 0; r < 3; ++r) pos[ord[r]] = r;
        // (o0, o1, o2) clockwise around p[i]?
        bool bit = (pos[1] - pos[0] + 3) % 3 < (pos[2] - pos[0] + 3) % 3;
        idx = idx * 2 + (bit ? 1 : 0);
    }
    return idx;
}

// which pairing crosses: 0 = 01|23, 1 = 02|13, 2 = 03|12, -1 = none
int crossing_pair_of_points(const std::array<Point, 4>& p) {
    static const int pairing[3][4] = {{0, 1, 2, 3}, {0, 2, 1, 3}, {0, 3, 1, 2}};
    int found = -1;
    for (int t = 0; t < 3; ++t) {
        if (segments_properly_cross(p[pairing[t][0]], p[pairing[t][1]],
                                    p[pairing[t][2]], p[pairing[t][3]])) {
            if (found != -1)
                throw std::logic_error("k4 table: two pairings cross");
            found = t;
        }
    }
    return found;
}

const std::array<K4Pattern, 16>& k4_table() {
    static const std::array<K4Pattern, 16> table = [] {
        std::array<K4Pattern, 16> t{};
        std::array<bool, 16> seen{};
        for (auto& e : t) e = {K4Pattern::NonRealizable, -1};

        auto feed = [&](const std::array<Point, 4>& p) {
            int idx = pattern_of_points(p);
            int pr = crossing_pair_of_points(p);
            K4Pattern entry{pr < 0 ? K4Pattern::Planar : K4Pattern::Crossing,
                            pr};
            if (seen[idx]) {
                if (t[idx].kind != entry.kind || t[idx].pair != entry.pair)
                    throw std::logic_error("k4 table: samples disagree");
            } else {
                t[idx] = entry;
                seen[idx] = true;
            }
        };

        const std::array<Point, 4> square{{{0, 0}, {2, 0}, {2, 2}, {0, 2}}};
        const std::array<Point, 4> spiked{{{0, 0}, {4, 0}, {1, 3}, {1.5, 1}}};
        std::array<int, 4> perm{0, 1, 2, 3};
        do {
            for (int mirror = 0; mirror < 2; ++mirror) {
                auto place = [&](const std::array<Point, 4>& base) {
                    std::array<Point, 4> p{};
                    for (int i = 0; i < 4; ++i) {
                        p[perm[i]] = base[i];
                        if (mirror) p[perm[i]].y = -p[perm[i]].y;
                    }
                    feed(p);
                };
                place(square);
                place(spiked);
            }
        } while (std::next_permutation(perm.begin(), perm.end()));

        int nreal = 0, ncross = 0, nplanar = 0;
        for (int i = 0; i < 16; ++i) {
            if (seen[i]) {
                ++nreal;
                (t[i].kind == K4Pattern::Crossing ? ncross : nplanar) += 1;
                if (std::popcount(static_cast<unsigned>(i)) % 2 != 0)
                    throw std::logic_error("k4 table: odd pattern realized");
            }
            int mi = i ^ 0xF;  // mirroring flips every bit
            if (seen[i] != seen[mi] ||
                (seen[i] && (t[i].kind != t[mi].kind || t[i].pair != t[mi].pair)))
                throw std::logic_error("k4 table: mirror asymmetry");
        }
        if (nreal != 8 || ncross != 6 || nplanar != 2)
            throw std::logic_error("k4 table: wrong pattern counts");
        return t;
    }();
    return table;
}

}  // namespace

const K4Pattern& k4_pattern(int index) { return k4_table()[index]; }

int k4_index(const Drawing& d, VertexId a, VertexId b, VertexId c,
             VertexId dd) {
    std::array<VertexId, 4> s{a, b, c, dd};
    std::sort(s.begin(), s.end());
    int idx = 0;
    for (int i = 0; i < 4; ++i) {
        std::array<VertexId, 3> o{};
        int k = 0;
        for (int j = 0; j < 4; ++j)
            if (j != i) o[k++] = s[j];
        bool bit = d.cyclic_cw(s[i], o[0], o[1], o[2]);
        idx = idx * 2 + (bit ? 1 : 0);
    }
    return idx;
}

// ════════════════════════════════════════════════════════════════════════
// Crossing predicates
// ════════════════════════════════════════════════════════════════════════

bool crosses(const Drawing& d, Edge e, Edge f) {
    if (e.shares_vertex(f)) return false;
    std::array<VertexId, 4> s{e.u, e.v, f.u, f.v};
    std::sort(s.begin(), s.end());
    const K4Pattern& pat = k4_pattern(k4_index(d, s[0], s[1], s[2], s[3]));
    if (pat.kind == K4Pattern::NonRealizable)
        throw std::logic_error("crosses: non-realizable 4-tuple");
    if (pat.kind == K4Pattern::Planar) return false;
    Edge first;
    switch (pat.pair) {
        case 0: first = Edge(s[0], s[1]); break;
        case 1: first = Edge(s[0], s[2]); break;
        default: first = Edge(s[0], s[3]); break;
    }
    // e and f partition {s0..s3}, so e matches the pairing iff f does
    return e == first || f == first;
}

namespace {

// Edges (w,c) and (w,d) both cross e without crossing each other; true iff
// (w,c) crosses e nearer the endpoint `from`.  Of the four ends a = from,
// b, c, d in the rotation of w, the one cyclically opposite a decides: it
// must be c or d (b opposite a would separate e's ends, impossible here),
// and the crossing of the opposite one comes second.
bool shared_first(const Drawing& dr, Edge e, VertexId from, VertexId w,
                  VertexId c, VertexId d) {
    const VertexId a = from, b = e.other(from);
    const int tb = dr.cw_dist(w, a, b);
    const int tc = dr.cw_dist(w, a, c);
    const int td = dr.cw_dist(w, a, d);
    const int mn = std::min({tb, tc, td});
    const int mx = std::max({tb, tc, td});
    if (tb != mn && tb != mx)
        throw std::logic_error(
            "crossing_order: ends of the crossed edge separated at the "
            "shared vertex");
    return td != mn && td != mx;
}

}  // namespace

Edge crossing_order(const Drawing& d, Edge e, VertexId from, Edge f, Edge g) {
    if (!e.contains(from))
        throw std::invalid_argument("crossing_order: from is not on e");
    if (f == g) throw std::invalid_argument("crossing_order: f equals g");
    if (!crosses(d, e, f) || !crosses(d, e, g))
        throw std::invalid_argument("crossing_order: edge does not cross e");
    if (crosses(d, f, g))
        throw std::invalid_argument("crossing_order: f crosses g");

    if (f.shares_vertex(g)) {
        VertexId w = g.contains(f.u) ? f.u : f.v;
        return shared_first(d, e, from, w, f.other(w), g.other(w)) ? f : g;
    }

    // Six distinct vertices.  Close a curve out of e up to its crossing
    // with f, the piece of f from there to c = f.u, and the edge back from
    // c to a.  Whether g's ends fall on the same side of that curve, and
    // whether g crosses the returning edge, together decide which crossing
    // on e comes first.
    const VertexId a = from, b = e.other(from), c = f.u;
    auto wedge = [&](VertexId t) {
        return d.cw_dist(a, b, t) < d.cw_dist(a, b, c);
    };
    auto hits_fc = [&](VertexId t) {
        // does edge (a,t) cross f on the piece between e's crossing and c?
        return crosses(d, Edge(a, t), f) && shared_first(d, f, c, a, t, b);
    };
    bool g_first = wedge(g.u) ^ hits_fc(g.u) ^ wedge(g.v) ^ hits_fc(g.v) ^
                   crosses(d, Edge(a, c), g);
    return g_first ? g : f;
}

std::optional<Edge> first_crossed_edge(const Drawing& d, VertexId from,
                                       VertexId to, const EdgeList& fence) {
    const Edge ray(from, to);
    std::optional<Edge> champ;
    for (const Edge& e : fence) {
        if (e.shares_vertex(ray) || !crosses(d, ray, e)) continue;
        if (!champ)
            champ = e;
        else
            champ = crossing_order(d, ray, from, *champ, e);
    }
    return champ;
}

}  // namespace rotsys
