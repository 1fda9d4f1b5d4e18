#pragma once

#include <compare>
#include <cstdint>
#include <utility>
#include <vector>

namespace rotsys {

// Vertices are 1-based ids; 0 is never a valid vertex.
using VertexId = int;

// Undirected edge, stored with u < v so equality and ordering are canonical.
struct Edge {
    VertexId u = 0;
    VertexId v = 0;

    Edge() = default;
    Edge(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

    bool contains(VertexId x) const { return x == u || x == v; }
    VertexId other(VertexId x) const { return x == u ? v : u; }
    bool shares_vertex(const Edge& e) const {
        return contains(e.u) || contains(e.v);
    }

    auto operator<=>(const Edge&) const = default;
};

using EdgeList = std::vector<Edge>;

struct Point {
    double x = 0.0;
    double y = 0.0;
};

}  // namespace rotsys
