#include "rotsys/generators.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>

#include "rotsys/geometry.hpp"

namespace rotsys {

namespace {

// Clockwise angular order around c, starting from direction angle pi
// (negative x axis) and decreasing.  Splitting into half planes first and
// comparing with the orientation sign inside a half keeps the comparison
// exact wherever orient_sign is, with no transcendentals involved.
bool cw_less(const Point& c, const Point& p, const Point& q) {
    auto half = [&](const Point& t) {
        double y = t.y - c.y, x = t.x - c.x;
        return (y > 0 || (y == 0 && x < 0)) ? 0 : 1;  // angle in (0, pi] first
    };
    int hp = half(p), hq = half(q);
    if (hp != hq) return hp < hq;
    return orient_sign(c, p, q) < 0;
}

}  // namespace

Drawing rotation_from_points(const std::vector<Point>& pts) {
    const int n = static_cast<int>(pts.size());
    if (n < 3)
        throw std::invalid_argument("rotation_from_points: need >= 3 points");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pts[i].x == pts[j].x && pts[i].y == pts[j].y)
                throw std::invalid_argument(
                    "rotation_from_points: duplicate point");
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            for (int k = j + 1; k < n; ++k)
                if (orient_sign(pts[i], pts[j], pts[k]) == 0)
                    throw std::invalid_argument(
                        "rotation_from_points: collinear points");
    std::vector<std::vector<VertexId>> rows(n);
    for (int i = 0; i < n; ++i) {
        rows[i].reserve(n - 1);
        for (int j = 0; j < n; ++j)
            if (j != i) rows[i].push_back(j + 1);
        std::sort(rows[i].begin(), rows[i].end(),
                  [&](VertexId a, VertexId b) {
                      return cw_less(pts[i], pts[a - 1], pts[b - 1]);
                  });
    }
    Drawing d(n, std::move(rows));
    d.set_coords(pts);
    return d;
}

Drawing gen_convex(int n) {
    if (n < 3) throw std::invalid_argument("gen_convex: need n >= 3");
    // labels run clockwise, so around vertex i the others appear as
    // i+1, ..., n, 1, ..., i-1
    std::vector<std::vector<VertexId>> rows(n);
    for (int i = 1; i <= n; ++i) {
        rows[i - 1].reserve(n - 1);
        for (int k = 1; k < n; ++k) rows[i - 1].push_back((i - 1 + k) % n + 1);
    }
    Drawing d(n, std::move(rows));
    std::vector<Point> pts(n);
    for (int i = 0; i < n; ++i) {
        double a = -2.0 * std::numbers::pi * i / n;
        pts[i] = {std::cos(a), std::sin(a)};
    }
    d.set_coords(std::move(pts));
    return d;
}

Drawing gen_random(int n, std::uint64_t seed) {
    if (n < 3) throw std::invalid_argument("gen_random: need n >= 3");
    std::mt19937_64 rng(seed);
    auto uni = [&] {
        // top 53 bits, exact on every platform
        return std::ldexp(static_cast<double>(rng() >> 11), -53);
    };
    for (int attempt = 0; attempt < 100; ++attempt) {
        std::vector<Point> pts(n);
        for (auto& p : pts) p = {uni(), uni()};
        try {
            return rotation_from_points(pts);
        } catch (const std::invalid_argument&) {
            // degenerate sample, roll again
        }
    }
    throw std::runtime_error("gen_random: no general-position sample found");
}

// ════════════════════════════════════════════════════════════════════════
// Tight inextendible subgraphs
// ════════════════════════════════════════════════════════════════════════
//
// Vertices sit on a convex n-gon, ids 1..n clockwise.  A ladder of edges
// (set R below) is rerouted through the outer face.  Seen from the outer
// face the boundary runs counterclockwise, so rerouted edges at a vertex
// attach in reverse hull order, after all straight edges.  The designated
// subgraph (hull, the "vertical" ladder rungs, and one long rerouted edge)
// is crossing-free, and every other edge crosses it, yet it has only about
// 3n/2 edges where crossing-free subgraphs of size 2n - 3 exist.

namespace {

EdgeList tight_rerouted(int n) {
    EdgeList R;
    if (n % 2 == 0) {
        int k = (n - 2) / 2;
        for (int i = 1; i <= k - 1; ++i) R.emplace_back(i + 1, 2 * k + 2 - i);
        for (int i = 1; i <= k - 1; ++i) R.emplace_back(2 * k + 3 - i, i + 2);
        R.emplace_back(1, k + 2);
    } else {
        int k = (n - 3) / 2;
        for (int i = 1; i <= k - 1; ++i) R.emplace_back(i + 2, 2 * k + 3 - i);
        for (int i = 1; i <= k - 1; ++i) R.emplace_back(2 * k + 4 - i, i + 3);
        R.emplace_back(1, k + 3);
    }
    return R;
}

}  // namespace

Drawing gen_tight(int n) {
    if (n < 8) throw std::invalid_argument("gen_tight: need n >= 8");
    EdgeList R = tight_rerouted(n);
    std::sort(R.begin(), R.end());
    auto rerouted = [&](VertexId a, VertexId b) {
        return std::binary_search(R.begin(), R.end(), Edge(a, b));
    };
    std::vector<std::vector<VertexId>> rows(n);
    for (VertexId x = 1; x <= n; ++x) {
        auto& row = rows[x - 1];
        row.reserve(n - 1);
        // straight edges in hull order, then rerouted edges in reverse
        for (int s = 1; s < n; ++s) {
            VertexId y = (x - 1 + s) % n + 1;
            if (!rerouted(x, y)) row.push_back(y);
        }
        for (int s = 1; s < n; ++s) {
            VertexId y = (x - 1 - s % n + n) % n + 1;
            if (rerouted(x, y)) row.push_back(y);
        }
    }
    return Drawing(n, std::move(rows));
}

EdgeList tight_designated(int n) {
    if (n < 8) throw std::invalid_argument("tight_designated: need n >= 8");
    EdgeList F;
    for (int i = 1; i < n; ++i) F.emplace_back(i, i + 1);
    F.emplace_back(n, 1);
    if (n % 2 == 0) {
        int k = (n - 2) / 2;
        for (int i = 1; i <= k; ++i) F.emplace_back(i + 1, 2 * k + 3 - i);
        F.emplace_back(1, k + 2);
    } else {
        int k = (n - 3) / 2;
        F.emplace_back(1, 3);
        for (int i = 1; i <= k; ++i) F.emplace_back(i + 2, 2 * k + 4 - i);
        F.emplace_back(1, k + 3);
    }
    return F;
}

// ════════════════════════════════════════════════════════════════════════
// Segment instances
// ════════════════════════════════════════════════════════════════════════

void validate_segments(const std::vector<Segment>& segs) {
    const int s = static_cast<int>(segs.size());
    if (s < 1) throw std::invalid_argument("segments: need at least one");
    std::vector<Point> ends;
    ends.reserve(2 * s);
    for (const auto& g : segs) {
        ends.push_back(g.a);
        ends.push_back(g.b);
    }
    const int m = 2 * s;
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (ends[i].x == ends[j].x && ends[i].y == ends[j].y)
                throw std::invalid_argument("segments: duplicate endpoint");
    // no duplicates and no collinear triple also rules out endpoints lying
    // on other segments, so any remaining contact is a proper crossing
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            for (int k = j + 1; k < m; ++k)
                if (orient_sign(ends[i], ends[j], ends[k]) == 0)
                    throw std::invalid_argument(
                        "segments: three endpoints collinear");
}

namespace {

bool segs_cross(const Segment& f, const Segment& g) {
    return segments_properly_cross(f.a, f.b, g.a, g.b);
}

}  // namespace

int max_noncrossing_segments(const std::vector<Segment>& segs) {
    const int s = static_cast<int>(segs.size());
    if (s > 22)
        throw std::invalid_argument(
            "max_noncrossing_segments: too many segments for exhaustive "
            "search");
    std::vector<std::uint32_t> conflict(s, 0);
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            if (segs_cross(segs[i], segs[j])) {
                conflict[i] |= 1u << j;
                conflict[j] |= 1u << i;
            }
    int best = 0;
    for (std::uint32_t mask = 0; mask < (1u << s); ++mask) {
        bool ok = true;
        for (int i = 0; i < s && ok; ++i)
            if ((mask >> i & 1) && (mask & conflict[i])) ok = false;
        if (ok) best = std::max(best, std::popcount(mask));
    }
    return best;
}

namespace {

double wrap_angle(double a) {
    while (a <= -std::numbers::pi) a += 2 * std::numbers::pi;
    while (a > std::numbers::pi) a -= 2 * std::numbers::pi;
    return a;
}

double ang_dist(double a, double b) { return std::abs(wrap_angle(a - b)); }

// move entry x so it sits immediately before (cw) the entry `anchor`
void move_before(std::vector<VertexId>& row, VertexId x, VertexId anchor) {
    row.erase(std::find(row.begin(), row.end(), x));
    row.insert(std::find(row.begin(), row.end(), anchor), x);
}

// move entry x so it sits immediately after (cw) the entry `anchor`
void move_after(std::vector<VertexId>& row, VertexId x, VertexId anchor) {
    row.erase(std::find(row.begin(), row.end(), x));
    row.insert(std::find(row.begin(), row.end(), anchor) + 1, x);
}

double cross2(const Point& u, const Point& v) {
    return u.x * v.y - u.y * v.x;
}

double seg_point_dist(const Point& p, const Point& a, const Point& b) {
    Point u{b.x - a.x, b.y - a.y}, w{p.x - a.x, p.y - a.y};
    double t = (u.x * w.x + u.y * w.y) / (u.x * u.x + u.y * u.y);
    t = std::clamp(t, 0.0, 1.0);
    return std::hypot(w.x - t * u.x, w.y - t * u.y);
}

// 0-based indices of the extreme points, by monotone chain
std::vector<int> hull_extremes(const std::vector<Point>& pts) {
    const int k = static_cast<int>(pts.size());
    std::vector<int> idx(k);
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](int a, int b) {
        return pts[a].x < pts[b].x ||
               (pts[a].x == pts[b].x && pts[a].y < pts[b].y);
    });
    if (k <= 2) return idx;
    std::vector<int> h;
    auto grow = [&](int i, std::size_t floor) {
        while (h.size() >= floor + 2 &&
               orient_sign(pts[h[h.size() - 2]], pts[h.back()], pts[i]) <= 0)
            h.pop_back();
        h.push_back(i);
    };
    for (int i : idx) grow(i, 0);
    const std::size_t lower = h.size() - 1;
    for (int t = k - 2; t >= 0; --t) grow(idx[t], lower);
    h.pop_back();
    return h;
}

std::vector<std::vector<char>> cross_pattern(const std::vector<Segment>& segs) {
    const int s = static_cast<int>(segs.size());
    std::vector<std::vector<char>> pat(s, std::vector<char>(s, 0));
    for (int i = 0; i < s; ++i)
        for (int j = i + 1; j < s; ++j)
            if (segs_cross(segs[i], segs[j])) pat[i][j] = pat[j][i] = 1;
    return pat;
}

// The size guarantee of the reduction needs exactly three endpoints on
// the convex hull: every further extreme point adds an outer face corner
// that costs one plane edge.  Pull second endpoints inward until only
// three are extreme, never moving first endpoints (the satellite discs
// live there), re-checking after every move that the instance stays
// valid with an unchanged crossing pattern.  A crossed segment shrinks
// toward its outermost crossing, a crossing-free one folds back beside
// its first endpoint.  Best effort only: a pattern can pin endpoints in
// convex position (the four endpoints of two crossing segments always
// are), in which case the smallest hull reached is kept.
std::vector<Segment> normalize_hull(std::vector<Segment> segs) {
    const int s = static_cast<int>(segs.size());
    const auto pattern = cross_pattern(segs);
    std::vector<char> stuck(s, 0);
    const int cap = 4 * s + 8;
    for (int round = 0; round < cap; ++round) {
        std::vector<Point> ends;
        ends.reserve(2 * s);
        for (const auto& g : segs) {
            ends.push_back(g.a);
            ends.push_back(g.b);
        }
        auto hull = hull_extremes(ends);
        if (hull.size() <= 3) break;
        int pick = -1;
        bool folds = false;
        for (int hq : hull) {
            if (hq % 2 == 0) continue;  // first endpoints stay put
            int i = hq / 2;
            if (stuck[i]) continue;
            bool free = true;
            for (int j = 0; j < s; ++j)
                if (pattern[i][j]) free = false;
            if (free) {
                pick = i;
                folds = true;
                break;
            }
            if (pick < 0) pick = i;
        }
        if (pick < 0) break;  // nothing movable is extreme
        const Point a = segs[pick].a, b = segs[pick].b;
        std::vector<Point> targets;
        if (folds) {
            // aim a short stub at the centroid of the other endpoints,
            // too short to reach any other segment
            Point c{0, 0};
            for (int e = 0; e < 2 * s; ++e) {
                if (e == 2 * pick || e == 2 * pick + 1) continue;
                c.x += ends[e].x;
                c.y += ends[e].y;
            }
            c.x /= 2 * s - 2;
            c.y /= 2 * s - 2;
            double d = point_dist(a, c);
            double step = d;
            for (int e = 0; e < 2 * s; ++e)
                if (e != 2 * pick && e != 2 * pick + 1)
                    step = std::min(step, point_dist(a, ends[e]));
            for (int j = 0; j < s; ++j)
                if (j != pick)
                    step = std::min(step,
                                    seg_point_dist(a, segs[j].a, segs[j].b));
            step /= 4;
            targets.push_back({a.x + step / d * (c.x - a.x),
                               a.y + step / d * (c.y - a.y)});
        } else {
            // cut just past the outermost crossing, at a few depths; if
            // even the deepest cut leaves the endpoint extreme, the
            // crossing itself sits too close to the hull to help
            double tmax = 0;
            for (int j = 0; j < s; ++j) {
                if (!pattern[pick][j]) continue;
                Point u{b.x - a.x, b.y - a.y};
                Point w{segs[j].b.x - segs[j].a.x, segs[j].b.y - segs[j].a.y};
                Point ca{segs[j].a.x - a.x, segs[j].a.y - a.y};
                tmax = std::max(tmax, cross2(ca, w) / cross2(u, w));
            }
            for (double frac : {0.25, 0.25 / 16, 0.25 / 256}) {
                double lam = tmax + frac * (1 - tmax);
                targets.push_back(
                    {a.x + lam * (b.x - a.x), a.y + lam * (b.y - a.y)});
            }
        }
        // commit the first candidate that keeps the instance valid with
        // the same pattern and visibly improves the hull; otherwise the
        // segment is hopeless (two crossing segments, for one, keep all
        // four endpoints extreme no matter what)
        bool committed = false;
        for (const Point& target : targets) {
            for (int jit = 0; jit < 4 && !committed; ++jit) {
                Point cand = target;
                if (jit) {
                    double blur = std::ldexp(point_dist(a, target), jit - 36);
                    cand.x += (jit & 1 ? blur : -blur);
                    cand.y += (jit & 2 ? blur : -blur) * 0.8125;
                }
                std::vector<Segment> trial = segs;
                trial[pick].b = cand;
                try {
                    validate_segments(trial);
                } catch (const std::invalid_argument&) {
                    continue;
                }
                if (cross_pattern(trial) != pattern) continue;
                std::vector<Point> tend;
                tend.reserve(2 * s);
                for (const auto& g : trial) {
                    tend.push_back(g.a);
                    tend.push_back(g.b);
                }
                auto thull = hull_extremes(tend);
                bool off = std::find(thull.begin(), thull.end(),
                                     2 * pick + 1) == thull.end();
                if (thull.size() >= hull.size() && !off) continue;
                segs = std::move(trial);
                committed = true;
            }
            if (committed) break;
        }
        if (!committed) stuck[pick] = 1;
    }
    return segs;
}

}  // namespace

Drawing gen_seg_reduction(const std::vector<Segment>& instance) {
    validate_segments(instance);
    const std::vector<Segment> segs = normalize_hull(instance);
    const int s = static_cast<int>(segs.size());
    const int n = 4 * s;
    const int m = n - 1;

    std::vector<Point> ends;
    ends.reserve(2 * s);
    for (const auto& g : segs) {
        ends.push_back(g.a);
        ends.push_back(g.b);
    }
    double rho = std::numeric_limits<double>::infinity();
    for (int i = 0; i < s; ++i) {
        const Point& v = segs[i].a;
        for (int e = 0; e < 2 * s; ++e)
            if (e != 2 * i) rho = std::min(rho, point_dist(v, ends[e]));
        for (int a = 0; a < 2 * s; ++a)
            for (int b = a + 1; b < 2 * s; ++b)
                if (a != 2 * i && b != 2 * i)
                    rho = std::min(rho, point_line_dist(v, ends[a], ends[b]));
    }

    // The families below are classified on the straight base drawing, but
    // a rerouted edge leaves its far endpoint along the line through v_i
    // rather than along its original chord, so at a given satellite radius
    // the two readings can disagree on marginal edges and the surgery then
    // assembles an inconsistent drawing.  The readings agree once the
    // radius is small enough; rather than bound that radius analytically,
    // build at shrinking r until the result checks out.
    for (int attempt = 0; attempt < 48; ++attempt) {
        const double r = std::ldexp(rho / 4, -attempt);

        // ── Step 1: place the satellites ──
        //
        // Around each first endpoint v_i, satellites u_i and w_i sit at
        // distance r/2, straddling the direction of the segment by a tiny
        // angle.  r keeps every straight edge between other endpoint
        // neighborhoods out of the disc of v_i, and the straddle angle is
        // smaller than every direction gap at v_i (with slack for the
        // neighborhoods of the other perturbed endpoints), so edges
        // leaving u_i or w_i meet exactly the edges a ray along the
        // segment would.
        std::vector<double> eps(s);
        bool eps_ok = true;
        for (int i = 0; i < s && eps_ok; ++i) {
            const Point& v = segs[i].a;
            double theta = std::atan2(segs[i].b.y - v.y, segs[i].b.x - v.x);
            double e = 1.0 / (8 * s);
            for (int x = 0; x < 2 * s; ++x) {
                if (x == 2 * i || x == 2 * i + 1) continue;
                double phi = std::atan2(ends[x].y - v.y, ends[x].x - v.x);
                // perturbed far endpoints get disc slack, bare ones none
                double slack =
                    (x % 2 == 0)
                        ? std::asin(std::min(1.0, r / point_dist(v, ends[x])))
                        : 0.0;
                e = std::min(e, (ang_dist(theta, phi) - slack) / 2);
            }
            eps[i] = e;
            eps_ok = e > 0;
        }
        if (!eps_ok) continue;

        std::optional<Drawing> base_opt;
        for (int nudge = 0; nudge < 8 && !base_opt; ++nudge) {
            double f = std::pow(0.75, nudge);
            std::vector<Point> pts(n);
            for (int i = 0; i < s; ++i) {
                const Point& v = segs[i].a;
                double theta =
                    std::atan2(segs[i].b.y - v.y, segs[i].b.x - v.x);
                double e = eps[i] * f;
                pts[4 * i] = v;
                pts[4 * i + 1] = {v.x + r / 2 * std::cos(theta + e),
                                  v.y + r / 2 * std::sin(theta + e)};
                pts[4 * i + 2] = {v.x + r / 2 * std::cos(theta - e),
                                  v.y + r / 2 * std::sin(theta - e)};
                pts[4 * i + 3] = segs[i].b;
            }
            try {
                base_opt = rotation_from_points(pts);
            } catch (const std::invalid_argument&) {
                // exact degeneracy in the constructed points, tighten
            }
        }
        if (!base_opt) continue;
        const Drawing& base = *base_opt;

        // ── Step 2: families to reroute ──
        //
        // Edges from u_i that cross the straight segment v_i w_i, and
        // edges from w_i that cross u_i v_i.  These are exactly the edges
        // that pass between a satellite and its center.
        std::vector<std::vector<char>> ufam(s, std::vector<char>(n + 1, 0));
        std::vector<std::vector<char>> wfam(s, std::vector<char>(n + 1, 0));
        for (int i = 0; i < s; ++i) {
            const VertexId vi = 4 * i + 1, ui = 4 * i + 2, wi = 4 * i + 3;
            for (VertexId p = 1; p <= n; ++p) {
                if (p != ui && p != vi && p != wi &&
                    segments_properly_cross(base.point(ui), base.point(p),
                                            base.point(vi), base.point(wi)))
                    ufam[i][p] = 1;
                if (p != wi && p != vi && p != ui &&
                    segments_properly_cross(base.point(wi), base.point(p),
                                            base.point(ui), base.point(vi)))
                    wfam[i][p] = 1;
            }
        }

        // ── Step 3: reroute ──
        //
        // Each family edge is pulled out of the pocket and wrapped around
        // v_i instead: at u_i the rerouted bundle leaves immediately
        // clockwise of v_i (w_i innermost), at w_i immediately counter-
        // clockwise of v_i (u_i innermost), and at the far end each edge
        // re-attaches next to v_i.  Wrap order around v_i fixes the bundle
        // order at both satellites.  A far end that is itself a satellite
        // with the edge in its own family keeps the position its own
        // reroute gives it.

        // Nonzero iff the far end p reroutes its edge to x around p's own
        // cluster center.  Such an edge does not come in from p's base
        // direction: it peels off the wrap tangentially, arriving just
        // beside the center, before it (-1, u side) or after it (+1).
        auto released = [&](VertexId x, VertexId p) -> int {
            if (p % 4 == 2 && ufam[(p - 2) / 4][x]) return -1;
            if (p % 4 == 3 && wfam[(p - 3) / 4][x]) return +1;
            return 0;
        };
        // Bundle rank of a family edge x-p around v_i: base direction of
        // p in units of thirds, shifted one third toward the far cluster
        // center when that end is rerouted too.
        auto fam_key = [&](VertexId vi, VertexId x, VertexId p) {
            const int side = released(x, p);
            const VertexId eff = side == 0 ? p : (side < 0 ? p - 1 : p - 2);
            return 3 * base.cw_dist(vi, x, eff) + side;
        };
        std::vector<std::vector<VertexId>> work(n);
        for (VertexId v = 1; v <= n; ++v) work[v - 1] = base.rotation(v);

        for (int i = 0; i < s; ++i) {
            const VertexId vi = 4 * i + 1, ui = 4 * i + 2, wi = 4 * i + 3;

            std::vector<VertexId> fam;
            for (VertexId p = 1; p <= n; ++p)
                if (ufam[i][p]) fam.push_back(p);
            std::sort(fam.begin(), fam.end(), [&](VertexId a, VertexId b) {
                return fam_key(vi, ui, a) < fam_key(vi, ui, b);
            });
            std::vector<char> drop(n + 1, 0);
            for (VertexId p : fam) drop[p] = 1;
            drop[wi] = 1;
            std::vector<VertexId> row;
            row.reserve(m);
            row.push_back(vi);
            row.push_back(wi);
            for (VertexId p : fam) row.push_back(p);
            int pv = base.position(ui, vi);
            for (int k = 1; k < m; ++k) {
                VertexId y = base.rotation(ui)[(pv + k) % m];
                if (!drop[y]) row.push_back(y);
            }
            work[ui - 1] = std::move(row);

            fam.clear();
            for (VertexId q = 1; q <= n; ++q)
                if (wfam[i][q]) fam.push_back(q);
            std::sort(fam.begin(), fam.end(), [&](VertexId a, VertexId b) {
                return fam_key(vi, wi, a) < fam_key(vi, wi, b);
            });
            std::fill(drop.begin(), drop.end(), 0);
            for (VertexId q : fam) drop[q] = 1;
            drop[ui] = 1;
            row.clear();
            row.reserve(m);
            row.push_back(vi);
            pv = base.position(wi, vi);
            for (int k = 1; k < m; ++k) {
                VertexId y = base.rotation(wi)[(pv + k) % m];
                if (!drop[y]) row.push_back(y);
            }
            for (VertexId q : fam) row.push_back(q);
            row.push_back(ui);
            work[wi - 1] = std::move(row);
        }

        for (int i = 0; i < s; ++i) {
            const VertexId vi = 4 * i + 1, ui = 4 * i + 2, wi = 4 * i + 3;
            for (VertexId p = 1; p <= n; ++p) {
                if (ufam[i][p] && released(ui, p) == 0)
                    move_before(work[p - 1], ui, vi);
                if (wfam[i][p] && released(wi, p) == 0)
                    move_after(work[p - 1], wi, vi);
            }
        }

        // ── Step 4: accept or shrink ──
        //
        // The result must be a simple drawing in which every pinch edge
        // v_i u_i, v_i w_i is crossing-free and the loop u_i w_i crosses
        // exactly the edges from v_i to vertices outside its wedge.
        // Anything else means a family was misread at this radius.
        Drawing out(n, std::move(work));
        if (!out.validate().empty()) continue;
        bool good = true;
        for (int i = 0; i < s && good; ++i) {
            const VertexId vi = 4 * i + 1, ui = 4 * i + 2, wi = 4 * i + 3,
                           ti = 4 * i + 4;
            for (VertexId a = 1; a <= n && good; ++a) {
                for (VertexId b = a + 1; b <= n && good; ++b) {
                    Edge ab(a, b);
                    if (crosses(out, Edge(vi, ui), ab) ||
                        crosses(out, Edge(vi, wi), ab))
                        good = false;
                    if (a == ui || a == wi || b == ui || b == wi) continue;
                    bool want = (a == vi && b != ti) || (b == vi && a != ti);
                    if (crosses(out, Edge(ui, wi), ab) != want) good = false;
                }
            }
        }
        if (good) return out;
    }
    throw std::logic_error(
        "segment reduction: construction failed to stabilize");
}

}  // namespace rotsys
