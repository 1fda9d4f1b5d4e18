#pragma once

#include <vector>

#include "rotsys/drawing.hpp"
#include "rotsys/types.hpp"

namespace rotsys {

// Which pairs of complete-graph edges cross each other.  Plane subgraphs
// of the drawing are exactly the independent sets of this graph.
struct ConflictGraph {
    std::vector<Edge> edges;  // all edges, sorted
    // conflicts[i][j] != 0 iff edges[i] and edges[j] cross
    std::vector<std::vector<char>> conflicts;

    int index_of(Edge e) const;  // -1 if absent
};

ConflictGraph build_conflict_graph(const Drawing& d);

// A largest crossing-free subgraph containing must_include, by exhaustive
// branch and bound over the conflict graph.  Deterministic; refuses
// n > limit_n because the search is exponential in the worst case.
// must_include with a crossing pair is rejected (invalid_argument).
EdgeList exact_max(const Drawing& d, const EdgeList& must_include = {},
                   int limit_n = 12);

// A largest crossing-free subgraph containing F, for F crossing-free,
// spanning and edgewise connected (invalid_argument otherwise).  Every
// addable edge then lies inside a single face of F and faces are
// independent, so the optimum is assembled from one polygon
// chord-selection problem per face, solved in O(k^3) for a face with k
// boundary corners.  Runs in polynomial time, unlike exact_max.
EdgeList maximize_connected(const Drawing& d, const EdgeList& F);

}  // namespace rotsys
