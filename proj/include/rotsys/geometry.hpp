#pragma once

#include <cmath>

#include "rotsys/types.hpp"

namespace rotsys {

// Sign of the signed area of triangle abc: positive when c lies to the
// left of the directed line a -> b (counterclockwise turn).
inline int orient_sign(const Point& a, const Point& b, const Point& c) {
    double x = (b.x - a.x) * (c.y - a.y) - (b.y - a.y) * (c.x - a.x);
    return x > 0 ? 1 : (x < 0 ? -1 : 0);
}

// Proper interior crossing of segments ab and cd; touching does not count.
inline bool segments_properly_cross(const Point& a, const Point& b,
                                    const Point& c, const Point& d) {
    int d1 = orient_sign(a, b, c), d2 = orient_sign(a, b, d);
    int d3 = orient_sign(c, d, a), d4 = orient_sign(c, d, b);
    return d1 * d2 < 0 && d3 * d4 < 0;
}

inline double point_dist(const Point& a, const Point& b) {
    return std::hypot(a.x - b.x, a.y - b.y);
}

inline double point_line_dist(const Point& p, const Point& a, const Point& b) {
    double area2 = std::abs((b.x - a.x) * (p.y - a.y) -
                            (b.y - a.y) * (p.x - a.x));
    return area2 / point_dist(a, b);
}

}  // namespace rotsys
