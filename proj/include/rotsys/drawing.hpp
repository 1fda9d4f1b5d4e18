#pragma once

#include <optional>
#include <string>
#include <vector>

#include "rotsys/types.hpp"

namespace rotsys {

// ════════════════════════════════════════════════════════════════════════
// Drawing: a complete-graph drawing given purely combinatorially, as the
// clockwise cyclic order of edges around every vertex.
// ════════════════════════════════════════════════════════════════════════
//
// rotation(v) lists the other n-1 vertices in the clockwise order in which
// the edges to them leave v.  Only the cyclic order matters; the stored
// starting point is arbitrary but preserved.  Vertex ids are 1..n.
//
// Optionally a drawing carries straight-line coordinates (one point per
// vertex); generators that work from points attach them, purely
// combinatorial constructions do not.
class Drawing {
public:
    // rows[i] is the rotation of vertex i+1.  Shape violations (n < 3, row
    // count, row length) throw; content violations (out-of-range entries,
    // duplicates) are kept and reported by validate().
    Drawing(int n, std::vector<std::vector<VertexId>> rows);

    int n() const { return n_; }

    const std::vector<VertexId>& rotation(VertexId v) const {
        return rot_[v];
    }

    // Index of u in rotation(v); -1 if absent (only on unvalidated input).
    int position(VertexId v, VertexId u) const { return pos_[v][u]; }

    // rotation(v) with cyclic wrap-around of the index.
    VertexId at(VertexId v, int i) const {
        const int m = n_ - 1;
        return rot_[v][((i % m) + m) % m];
    }

    // Steps from x to y going clockwise around v; in 0..n-2.
    int cw_dist(VertexId v, VertexId x, VertexId y) const {
        const int m = n_ - 1;
        return (pos_[v][y] - pos_[v][x] + m) % m;
    }

    // True iff a, b, c appear in clockwise cyclic order around v.
    // a, b, c must be distinct and different from v.
    bool cyclic_cw(VertexId v, VertexId a, VertexId b, VertexId c) const {
        return cw_dist(v, a, b) < cw_dist(v, a, c);
    }

    bool has_coords() const { return !pts_.empty(); }
    const Point& point(VertexId v) const { return pts_[v]; }
    // pts[i] is the location of vertex i+1.
    void set_coords(std::vector<Point> pts);

    // Empty result means the drawing is a realizable rotation system: every
    // row is a permutation of the other vertices and every 4-tuple of
    // vertices induces one of the eight patterns a crossing-minimal drawing
    // of K4 can have.
    std::vector<std::string> validate() const;

    // Induced sub-drawing on the given vertices (sorted ascending, size
    // >= 3); subset[i] becomes vertex i+1.
    Drawing restrict_to(const std::vector<VertexId>& subset) const;

    // perm[old] = new; perm must be a permutation of 1..n.
    Drawing relabel(const std::vector<VertexId>& perm) const;

    bool operator==(const Drawing& o) const {
        return n_ == o.n_ && rot_ == o.rot_;
    }

private:
    int n_;
    std::vector<std::vector<VertexId>> rot_;  // [0] unused
    std::vector<std::vector<int>> pos_;       // pos_[v][u], [0] unused
    std::vector<Point> pts_;                  // empty, or [0] unused
};

// ════════════════════════════════════════════════════════════════════════
// K4 patterns
// ════════════════════════════════════════════════════════════════════════
//
// Four vertices a < b < c < d induce a 4-bit pattern: for each of them, one
// bit saying whether the other three appear clockwise (in ascending label
// order) around it.  The pattern determines everything about the K4 they
// induce, in particular which of the three edge pairings crosses, if any.

struct K4Pattern {
    enum Kind { NonRealizable, Planar, Crossing };
    Kind kind;
    int pair;  // 0: ab|cd, 1: ac|bd, 2: ad|bc; meaningful when Crossing
};

// The pattern table entry for index 0..15.  Realizable patterns are exactly
// the eight with an even number of set bits: six crossing, two planar.
const K4Pattern& k4_pattern(int index);

// Pattern index of {a,b,c,d} in d (vertices distinct, in any order).
int k4_index(const Drawing& d, VertexId a, VertexId b, VertexId c,
             VertexId dd);

// True iff edges e and f cross.  Edges sharing a vertex never cross.
// Throws std::logic_error if the induced 4-tuple is non-realizable.
bool crosses(const Drawing& d, Edge e, Edge f);

// Both f and g cross e and do not cross each other.  Returns whichever of
// f, g crosses e nearer the endpoint `from` of e.
Edge crossing_order(const Drawing& d, Edge e, VertexId from, Edge f, Edge g);

// The fence edge crossed first along the ray from -> to, if any.  The fence
// must be crossing-free; edges incident to the ray's endpoints never count.
std::optional<Edge> first_crossed_edge(const Drawing& d, VertexId from,
                                       VertexId to, const EdgeList& fence);

}  // namespace rotsys
