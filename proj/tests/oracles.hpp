#pragma once

// Reference implementations the tests compare the library against.  All of
// them are deliberately naive, favor the defining property over speed, and
// share nothing with the library beyond the basic types.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "rotsys/types.hpp"

namespace oracle {

using rotsys::Edge;
using rotsys::EdgeList;
using rotsys::Point;
using rotsys::VertexId;

// ════════════════════════════════════════════════════════════════════════
// Straight-line geometry
// ════════════════════════════════════════════════════════════════════════

// +1 when c is left of the directed line a -> b, -1 right, 0 collinear.
inline int orient(const Point& a, const Point& b, const Point& c) {
    const long double v = (static_cast<long double>(b.x) - a.x) *
                              (static_cast<long double>(c.y) - a.y) -
                          (static_cast<long double>(b.y) - a.y) *
                              (static_cast<long double>(c.x) - a.x);
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

// Proper interior crossing of segments ab and cd.
inline bool segs_cross(const Point& a, const Point& b, const Point& c,
                       const Point& d) {
    return orient(a, b, c) * orient(a, b, d) < 0 &&
           orient(c, d, a) * orient(c, d, b) < 0;
}

// Parameter t in (0,1) of the crossing point along a -> b.  Segments must
// properly cross.
inline long double cross_param(const Point& a, const Point& b, const Point& c,
                               const Point& d) {
    const long double dax = b.x - a.x, day = b.y - a.y;
    const long double dcx = d.x - c.x, dcy = d.y - c.y;
    const long double den = dax * dcy - day * dcx;
    return ((static_cast<long double>(c.x) - a.x) * dcy -
            (static_cast<long double>(c.y) - a.y) * dcx) /
           den;
}

// Clockwise rotation rows of a point set, one vertex per point, built by
// sorting the others by descending angle.  Labels are 1-based.
inline std::vector<std::vector<VertexId>> rotations_by_angle(
    const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<std::vector<VertexId>> rows(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j)
            if (j != i) rows[i].push_back(j + 1);
        std::sort(rows[i].begin(), rows[i].end(), [&](VertexId a, VertexId b) {
            return std::atan2(pts[a - 1].y - pts[i].y,
                              pts[a - 1].x - pts[i].x) >
                   std::atan2(pts[b - 1].y - pts[i].y, pts[b - 1].x - pts[i].x);
        });
    }
    return rows;
}

// Two rotation rows equal up to cyclic shift.
inline bool cyclic_equal(const std::vector<VertexId>& a,
                         const std::vector<VertexId>& b) {
    if (a.size() != b.size() || a.empty()) return a == b;
    const auto it = std::find(b.begin(), b.end(), a.front());
    if (it == b.end()) return false;
    const std::size_t off = static_cast<std::size_t>(it - b.begin());
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != b[(off + i) % b.size()]) return false;
    return true;
}

// ════════════════════════════════════════════════════════════════════════
// Brute-force combinatorics
// ════════════════════════════════════════════════════════════════════════

// Largest independent set in a symmetric conflict matrix, by plain
// include/exclude recursion.  Only the remaining-count bound prunes.
inline int max_independent(const std::vector<std::vector<char>>& conflicts) {
    const int m = static_cast<int>(conflicts.size());
    std::vector<int> chosen;
    int best = 0;
    auto rec = [&](auto&& self, int i) -> void {
        if (static_cast<int>(chosen.size()) + (m - i) <= best) return;
        if (i == m) {
            best = std::max(best, static_cast<int>(chosen.size()));
            return;
        }
        bool free = true;
        for (int c : chosen)
            if (conflicts[c][i]) {
                free = false;
                break;
            }
        if (free) {
            chosen.push_back(i);
            self(self, i + 1);
            chosen.pop_back();
        }
        self(self, i + 1);
    };
    rec(rec, 0);
    return best;
}

// Size of the largest pairwise-noncrossing edge set on a point set.
inline int max_plane_straight(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    const int m = static_cast<int>(edges.size());
    std::vector<std::vector<char>> conf(m, std::vector<char>(m, 0));
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            auto [a, b] = edges[i];
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) continue;
            if (segs_cross(pts[a], pts[b], pts[c], pts[d]))
                conf[i][j] = conf[j][i] = 1;
        }
    return max_independent(conf);
}

// ── plain graph checks, straight from the definitions ──

inline std::vector<int> components(int n, const EdgeList& F) {
    std::vector<int> comp(n + 1, -1);
    int c = 0;
    for (VertexId s = 1; s <= n; ++s) {
        if (comp[s] != -1) continue;
        comp[s] = c;
        std::vector<VertexId> stack{s};
        while (!stack.empty()) {
            VertexId v = stack.back();
            stack.pop_back();
            for (const Edge& e : F) {
                if (!e.contains(v)) continue;
                VertexId w = e.other(v);
                if (comp[w] == -1) {
                    comp[w] = c;
                    stack.push_back(w);
                }
            }
        }
        ++c;
    }
    return comp;
}

inline bool connected(int n, const EdgeList& F) {
    auto comp = components(n, F);
    for (VertexId v = 1; v <= n; ++v)
        if (comp[v] != 0) return false;
    return true;
}

inline bool spanning(int n, const EdgeList& F) {
    std::vector<char> touched(n + 1, 0);
    for (const Edge& e : F) touched[e.u] = touched[e.v] = 1;
    for (VertexId v = 1; v <= n; ++v)
        if (!touched[v]) return false;
    return true;
}

// Connected on all n vertices and still connected after deleting any one
// vertex (n >= 3).
inline bool two_connected(int n, const EdgeList& F) {
    if (n < 3 || !connected(n, F)) return false;
    for (VertexId cut = 1; cut <= n; ++cut) {
        EdgeList rest;
        for (const Edge& e : F)
            if (!e.contains(cut)) rest.push_back(e);
        // relabel the surviving vertices 1..n-1
        std::vector<VertexId> newid(n + 1, 0);
        int next = 1;
        for (VertexId v = 1; v <= n; ++v)
            if (v != cut) newid[v] = next++;
        EdgeList mapped;
        for (const Edge& e : rest) mapped.emplace_back(newid[e.u], newid[e.v]);
        if (!connected(n - 1, mapped)) return false;
    }
    return true;
}

// Connected, and removing any two edges either keeps the graph connected
// or cuts off a single vertex.
inline bool essentially_3ec(int n, const EdgeList& F) {
    if (!connected(n, F)) return false;
    std::vector<int> deg(n + 1, 0);
    for (const Edge& e : F) {
        ++deg[e.u];
        ++deg[e.v];
    }
    const int m = static_cast<int>(F.size());
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            // removing two edges through a shared degree-2 vertex merely
            // strips that vertex; every other pair must leave the graph
            // in one piece
            bool shared_deg2 = false;
            for (VertexId v : {F[i].u, F[i].v})
                if (F[j].contains(v) && deg[v] == 2) shared_deg2 = true;
            if (shared_deg2) continue;
            EdgeList rest;
            for (int k = 0; k < m; ++k)
                if (k != i && k != j) rest.push_back(F[k]);
            if (!connected(n, rest)) return false;
        }
    return true;
}

// ════════════════════════════════════════════════════════════════════════
// Fixtures
// ════════════════════════════════════════════════════════════════════════

inline double unit_double(std::mt19937_64& rng) {
    return std::ldexp(static_cast<double>(rng() >> 11), -53);
}

inline bool general_position(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            if (pts[i].x == pts[j].x && pts[i].y == pts[j].y) return false;
            for (int k = j + 1; k < n; ++k)
                if (orient(pts[i], pts[j], pts[k]) == 0) return false;
        }
    return true;
}

// n uniform points in the unit square, resampled until in general
// position.  Deterministic in the seed; independent of the library's
// random generator.
inline std::vector<Point> random_points(int n, std::uint64_t seed) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 12345);
    for (;;) {
        std::vector<Point> pts;
        for (int i = 0; i < n; ++i)
            pts.push_back({unit_double(rng), unit_double(rng)});
        if (general_position(pts)) return pts;
    }
}

// n points on the unit circle, labeled clockwise, each nudged by at most
// mag.  Resampled until in general position.
inline std::vector<Point> perturbed_circle(int n, std::uint64_t seed,
                                           double mag) {
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 54321);
    for (;;) {
        std::vector<Point> pts;
        for (int i = 0; i < n; ++i) {
            const double a = std::atan(1.0) * 8 * (0.25 - double(i) / n);
            pts.push_back({std::cos(a) + mag * (2 * unit_double(rng) - 1),
                           std::sin(a) + mag * (2 * unit_double(rng) - 1)});
        }
        if (general_position(pts)) return pts;
    }
}

}  // namespace oracle
