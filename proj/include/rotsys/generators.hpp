#pragma once

#include <cstdint>
#include <vector>

#include "rotsys/drawing.hpp"
#include "rotsys/types.hpp"

namespace rotsys {

struct Segment {
    Point a, b;
};

// Clockwise rotation system of straight-line edges between the given
// points.  The points must be in general position (no duplicates, no three
// collinear); they are attached to the result as coordinates.
Drawing rotation_from_points(const std::vector<Point>& pts);

// n points on a circle, labeled clockwise around it.
Drawing gen_convex(int n);

// Rotation system of n uniform random points in the unit square;
// deterministic in the seed.
Drawing gen_random(int n, std::uint64_t seed);

// A drawing of K_n (n >= 8) containing a crossing-free subgraph of
// ceil(3n/2) edges that no further edge extends, although strictly larger
// crossing-free subgraphs exist.  Built from a convex drawing by rerouting
// a ladder of edges through the outer face; combinatorial only, carries no
// coordinates.
Drawing gen_tight(int n);

// The inextendible subgraph gen_tight(n) is built around.
EdgeList tight_designated(int n);

// Checks a segment instance: endpoints in general position (pairwise
// distinct, no three collinear, none on another segment), segments
// pairwise disjoint or properly crossing.  Throws std::invalid_argument.
void validate_segments(const std::vector<Segment>& segs);

// Largest number of pairwise non-crossing segments, by exhaustive search
// over subsets.  Instances beyond 22 segments are refused.
int max_noncrossing_segments(const std::vector<Segment>& segs);

// Encodes a segment instance with s segments as a drawing of K_{4s}.
// Segment i (1-based) owns vertices 4i-3 (first endpoint), 4i-2 and 4i-1
// (two satellites pinched next to it), and 4i (second endpoint).  The two
// satellite stubs of every segment are crossed by nothing.  Combinatorial
// only, carries no coordinates.
//
// Writing k = max_noncrossing_segments(segs), the largest crossing-free
// subgraph of the result has at most 11s - 6 + k edges, with equality
// whenever the instance is normalized: the endpoint hull is a triangle and
// no segment has both its endpoints on the hull.  (The input is deformed
// towards that shape automatically where the crossing pattern allows it.)
// Equality can fail otherwise; two segments that cross, for instance, pin
// their four endpoints in convex position, which caps s = 2 crossing
// instances at 16 rather than 17.
Drawing gen_seg_reduction(const std::vector<Segment>& segs);

}  // namespace rotsys
