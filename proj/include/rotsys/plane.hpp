#pragma once

#include <array>
#include <utility>
#include <vector>

#include "rotsys/drawing.hpp"
#include "rotsys/types.hpp"

namespace rotsys {

// No two members cross.
bool is_plane(const Drawing& d, const EdgeList& F);

// F is crossing-free and every other edge of the complete graph crosses
// some member.
bool is_maximal(const Drawing& d, const EdgeList& F);

// True iff F is nonempty and all non-isolated vertices lie in one
// component.
bool is_edgewise_connected(int n, const EdgeList& F);

struct ConnectivityReport {
    int edge_count = 0;
    int min_degree = 0;      // over all n vertices
    bool spanning = false;   // no isolated vertex
    bool connected = false;  // one component over all n vertices
    bool two_connected = false;
    // connected, and removing any two member edges that do not share a
    // degree-2 vertex keeps the graph connected
    bool essentially_3ec = false;
};
ConnectivityReport connectivity(int n, const EdgeList& F);

// ════════════════════════════════════════════════════════════════════════
// FaceStructure: the faces a crossing-free, edgewise-connected subgraph F
// cuts the sphere into.
// ════════════════════════════════════════════════════════════════════════
//
// Every face is a closed walk of directed member edges with the face on
// the right: after arriving at w along u -> w, the walk leaves toward the
// clockwise predecessor of u among w's member neighbors.  Between arrival
// and departure it sweeps one corner of w: corner j at w is the clockwise
// sector from w's j-th member edge (in rotation order) to the next one,
// and the walk leaves through edge j.  Non-simple boundaries are the norm:
// an edge borders its face twice when both sides belong to the same face,
// and a cut vertex is swept once per corner.
//
// The drawing must outlive the structure.  Planarity of F is the caller's
// responsibility (check with is_plane); edgewise connectivity is enforced.
class FaceStructure {
public:
    FaceStructure(const Drawing& d, EdgeList members);

    const Drawing& drawing() const { return *d_; }
    const EdgeList& members() const { return members_; }
    bool is_member(Edge e) const;

    int face_count() const { return static_cast<int>(faces_.size()); }
    const std::vector<std::pair<VertexId, VertexId>>& walk(int face) const {
        return faces_[face];
    }

    // The face to the right of member edge x -> y, and the position of
    // x -> y in that face's walk.
    int walk_face(VertexId x, VertexId y) const;
    int walk_index(VertexId x, VertexId y) const;

    int degree(VertexId v) const {
        return static_cast<int>(inc_far_[v].size());
    }
    // Member neighbors of v and their rotation positions, both in
    // clockwise rotation order.
    const std::vector<VertexId>& incident(VertexId v) const {
        return inc_far_[v];
    }
    const std::vector<int>& incident_pos(VertexId v) const {
        return inc_pos_[v];
    }

    // The corner of w an edge arriving from rotation position p attaches
    // to: index j of the member edge with the largest position <= p,
    // cyclically.  p must not be a member position.
    int corner_at(VertexId w, int p) const;
    int corner_face(VertexId w, int corner) const {
        return corner_face_[w][corner];
    }
    // Index, in the corner's face walk, of the directed edge leaving
    // through that corner.
    int corner_walk_index(VertexId w, int corner) const {
        return corner_pos_[w][corner];
    }

    int component_count() const { return comp_count_; }
    int component_of(VertexId v) const { return comp_[v]; }  // -1 isolated

    // The face a vertex with no member edges lies in, found by probing
    // toward the first member vertex in its rotation.
    int face_containing_vertex(VertexId v) const;

private:
    const Drawing* d_;
    EdgeList members_;  // sorted
    std::vector<std::vector<VertexId>> inc_far_;
    std::vector<std::vector<int>> inc_pos_;
    std::vector<std::vector<std::pair<VertexId, VertexId>>> faces_;
    std::vector<std::array<int, 2>> dir_face_;  // per member, u->v / v->u
    std::vector<std::array<int, 2>> dir_pos_;
    std::vector<std::vector<int>> corner_face_;
    std::vector<std::vector<int>> corner_pos_;
    std::vector<int> comp_;
    int comp_count_ = 0;

    int member_index(Edge e) const;
};

// The face adjacent to the crossing of member f by the ray u -> w, on the
// u side.  f must cross the ray.
int crossing_side(const FaceStructure& fs, Edge f, VertexId u, VertexId w);

enum class EdgeLocation { Member, CrossesSubgraph, InsideFace };

struct Location {
    EdgeLocation kind;
    int face = -1;  // meaningful for InsideFace
};

// Where edge e lives relative to F.  An uncrossing non-member lies fully
// inside one face, resolved through its endpoints' attachment corners
// (probing for endpoints F does not touch).
Location locate_edge(const FaceStructure& fs, Edge e);

}  // namespace rotsys
