#pragma once

#include <string>
#include <vector>

#include "rotsys/types.hpp"

namespace rotsys {

// Straight-line SVG picture of a point set, with base edges drawn thin
// and gray and highlight edges drawn bold on top.  Vertex ids are 1-based
// indices into pts.  Output is deterministic.  Throws invalid_argument on
// an empty point set or an edge id out of range.
std::string render_svg(const std::vector<Point>& pts, const EdgeList& base,
                       const EdgeList& highlight);

}  // namespace rotsys
