#pragma once

#include "rotsys/drawing.hpp"
#include "rotsys/plane.hpp"
#include "rotsys/types.hpp"

namespace rotsys {

// Edges from v to vertices of F that cross no member of F, sorted; for a
// vertex of F this includes its own member edges.  Reference
// implementation, checks every candidate against every member.
EdgeList uncrossed_rays_brute(const Drawing& d, const EdgeList& F,
                              VertexId v);

// Same set, but found by walking the boundary of v's face (per corner
// sector for a vertex of F): candidates and boundary corners appear in
// matching cyclic order, so one forward and one backward sweep settle
// every candidate without testing it against the whole subgraph.
EdgeList uncrossed_rays_fast(const FaceStructure& fs, VertexId v);
EdgeList uncrossed_rays_fast(const Drawing& d, const EdgeList& F, VertexId v);

// The probe v -> r crosses edge f = pq.  Around v, two ranges of rays
// bracket the probe: clockwise from vr up to vp (or further, to the last
// ray whose crossing with f lies nearer p than the probe's), and the
// mirrored counterclockwise range toward q.  Both are ordered moving away
// from vr.  When f is the first member crossed by the probe toward a
// component of a crossing-free subgraph, each range contains a ray
// crossing no member at all.
struct FreeRanges {
    EdgeList cw;
    EdgeList ccw;
};
FreeRanges free_ranges(const Drawing& d, Edge f, VertexId v, VertexId r);

// Grows seed (empty: the single edge 12) into a maximal crossing-free
// subgraph: one sweep over the vertices, adding every edge of the current
// vertex's star that crosses nothing already chosen.  Edges only ever get
// blocked, never unblocked, so one sweep suffices.
EdgeList greedy_maximal(const Drawing& d, EdgeList seed = {});

// Grows a nonempty edgewise-connected crossing-free F into a maximal one
// by adding, per vertex, all its uncrossed rays toward F.  The subgraph
// stays connected throughout, which keeps the fast ray computation
// applicable.
EdgeList maximal_connected_fast(const Drawing& d, EdgeList F);

// A maximal crossing-free subgraph of exactly 2n-3 edges: the star of
// `center`, made maximal, plus a spanning tree of the rest of that
// maximal subgraph.
EdgeList star_plus_tree(const Drawing& d, VertexId center);

}  // namespace rotsys
