#pragma once

#include <string>
#include <vector>

#include "rotsys/drawing.hpp"
#include "rotsys/generators.hpp"
#include "rotsys/types.hpp"

namespace rotsys {

// Plain text formats.  In all of them '#' starts a comment line, blank
// lines are skipped, and parse errors throw invalid_argument naming the
// line.  Serialization is canonical, so parse(serialize(x)) == x.
//
//   rotations: first data line n, then one line per vertex
//              "v: u1 u2 ... u_{n-1}"  (clockwise order; any row order)
//   edges:     "u v" per line, written with u < v
//   points:    "x y" per line
//   segments:  "x1 y1 x2 y2" per line
//
// The rotation parser checks shape only (labels 1..n once each, n-1
// entries per row); whether the content is a realizable drawing is
// Drawing::validate()'s business.

Drawing parse_rotations(const std::string& text);
std::string serialize_rotations(const Drawing& d);

EdgeList parse_edges(const std::string& text);
std::string serialize_edges(const EdgeList& edges);

std::vector<Point> parse_points(const std::string& text);
std::string serialize_points(const std::vector<Point>& pts);

std::vector<Segment> parse_segments(const std::string& text);
std::string serialize_segments(const std::vector<Segment>& segs);

}  // namespace rotsys
