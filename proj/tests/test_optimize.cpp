#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "oracles.hpp"
#include "rotsys/augment.hpp"
#include "rotsys/drawing.hpp"
#include "rotsys/generators.hpp"
#include "rotsys/optimize.hpp"
#include "rotsys/plane.hpp"

using namespace rotsys;

namespace {

EdgeList hull_cycle(int n) {
    EdgeList F;
    for (VertexId v = 1; v < n; ++v) F.emplace_back(v, v + 1);
    F.emplace_back(1, n);
    return F;
}

bool contains_all(const EdgeList& big, const EdgeList& small) {
    for (const Edge& e : small)
        if (std::find(big.begin(), big.end(), e) == big.end()) return false;
    return true;
}

}  // namespace

// ════════════════════════════════════════════════════════════════════════
// Conflict graph
// ════════════════════════════════════════════════════════════════════════

TEST_CASE("conflict graph lists every edge and every crossing pair") {
    // n points in convex position: each 4-subset contributes exactly one
    // crossing pair, so C(n,4) conflicts in total
    for (int n : {4, 5, 6}) {
        Drawing d = gen_convex(n);
        ConflictGraph cg = build_conflict_graph(d);
        CHECK(static_cast<int>(cg.edges.size()) == n * (n - 1) / 2);
        CHECK(std::is_sorted(cg.edges.begin(), cg.edges.end()));
        int pairs = 0;
        for (std::size_t i = 0; i < cg.edges.size(); ++i) {
            CHECK(cg.index_of(cg.edges[i]) == static_cast<int>(i));
            for (std::size_t j = i + 1; j < cg.edges.size(); ++j) {
                CHECK(cg.conflicts[i][j] == cg.conflicts[j][i]);
                CHECK(static_cast<bool>(cg.conflicts[i][j]) ==
                      crosses(d, cg.edges[i], cg.edges[j]));
                if (cg.conflicts[i][j]) ++pairs;
            }
        }
        const int choose4 = n * (n - 1) * (n - 2) * (n - 3) / 24;
        CHECK(pairs == choose4);
    }
    CHECK(build_conflict_graph(gen_convex(4)).index_of(Edge(1, 5)) == -1);
}

// ════════════════════════════════════════════════════════════════════════
// Exact optimum
// ════════════════════════════════════════════════════════════════════════

TEST_CASE("exact optimum on pinned drawings") {
    // one crossing in convex position kills exactly one of the two
    // diagonals
    CHECK(exact_max(gen_convex(4)).size() == 5);
    // a triangle with one interior point draws K4 crossing-free
    Drawing k4 = rotation_from_points(
        {{0, 3}, {2, -1}, {-2, -1}, {0, 0}});
    CHECK(exact_max(k4).size() == 6);
    // convex position tops out at the triangulated polygon: 2n-3 edges
    CHECK(exact_max(gen_convex(6)).size() == 9);
    CHECK(exact_max(gen_convex(8)).size() == 13);
}

TEST_CASE("exact optimum matches the independent-set and straight-line "
          "oracles on random point sets") {
    for (std::uint64_t seed = 1; seed <= 12; ++seed) {
        const int n = 4 + static_cast<int>(seed % 4);
        auto pts = oracle::random_points(n, seed * 31 + 5);
        Drawing d = rotation_from_points(pts);
        EdgeList best = exact_max(d);
        CHECK(is_plane(d, best));
        CHECK(is_maximal(d, best));
        ConflictGraph cg = build_conflict_graph(d);
        CHECK(static_cast<int>(best.size()) ==
              oracle::max_independent(cg.conflicts));
        CHECK(static_cast<int>(best.size()) ==
              oracle::max_plane_straight(pts));
    }
}

TEST_CASE("exact optimum honors forced edges and rejects impossible "
          "ones") {
    Drawing d = gen_convex(6);
    // a long diagonal still fits into some triangulation of the hexagon
    EdgeList withdiag = exact_max(d, {Edge(1, 4)});
    CHECK(contains_all(withdiag, {Edge(1, 4)}));
    CHECK(withdiag.size() == 9);
    for (std::uint64_t seed = 1; seed <= 6; ++seed) {
        Drawing r = gen_random(7, seed * 19);
        const EdgeList forced{Edge(2, 5), Edge(3, 6)};
        if (crosses(r, forced[0], forced[1])) {
            CHECK_THROWS_AS(exact_max(r, forced), std::invalid_argument);
        } else {
            EdgeList best = exact_max(r, forced);
            CHECK(contains_all(best, forced));
            CHECK(is_maximal(r, best));
        }
    }
    CHECK_THROWS_AS(exact_max(d, {Edge(1, 4), Edge(2, 6)}),
                    std::invalid_argument);
}

TEST_CASE("exact optimum enforces its size limit") {
    CHECK_THROWS_AS(exact_max(gen_random(13, 1)), std::invalid_argument);
    CHECK_THROWS_AS(exact_max(gen_random(8, 1), {}, 7),
                    std::invalid_argument);
    CHECK(exact_max(gen_random(8, 1), {}, 8).size() ==
          exact_max(gen_random(8, 1)).size());
}

TEST_CASE("optimum size is invariant under relabeling") {
    Drawing d = gen_random(8, 321);
    const std::size_t base = exact_max(d).size();
    const std::vector<VertexId> perm{0, 3, 1, 4, 8, 2, 7, 5, 6};
    CHECK(exact_max(d.relabel(perm)).size() == base);
}

// ════════════════════════════════════════════════════════════════════════
// Polynomial augmentation of a connected subgraph
// ════════════════════════════════════════════════════════════════════════

TEST_CASE("connected augmentation rejects bad starting subgraphs") {
    Drawing d = gen_convex(6);
    CHECK_THROWS_AS(maximize_connected(d, {Edge(1, 4), Edge(2, 6)}),
                    std::invalid_argument);  // crossing pair
    CHECK_THROWS_AS(maximize_connected(d, {Edge(1, 2), Edge(2, 3)}),
                    std::invalid_argument);  // not spanning
    EdgeList bad = hull_cycle(6);
    bad.erase(bad.begin());
    bad.erase(bad.begin() + 2);
    CHECK_THROWS_AS(maximize_connected(d, bad),
                    std::invalid_argument);  // spanning but split
}

TEST_CASE("connected augmentation equals the exact optimum over "
          "supersets") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        const int n = 5 + static_cast<int>(seed % 3);
        Drawing d = gen_random(n, seed * 211 + 9);
        // a plane spanning tree grown one uncrossed ray at a time
        EdgeList T{Edge(1, 2)};
        for (bool grew = true; grew;) {
            grew = false;
            for (VertexId v = 1; v <= n && !grew; ++v) {
                bool in = false;
                for (const Edge& e : T)
                    if (e.contains(v)) in = true;
                if (in) continue;
                EdgeList rays = uncrossed_rays_brute(d, T, v);
                if (!rays.empty()) {
                    T.push_back(rays.front());
                    grew = true;
                }
            }
        }
        REQUIRE(oracle::spanning(n, T));
        EdgeList aug = maximize_connected(d, T);
        CHECK(is_plane(d, aug));
        CHECK(contains_all(aug, T));
        CHECK(aug.size() == exact_max(d, T).size());
    }
}

TEST_CASE("connected augmentation of a plane cycle fits at least half "
          "its length in diagonals") {
    for (int n : {6, 7, 8}) {
        Drawing d = gen_convex(n);
        EdgeList aug = maximize_connected(d, hull_cycle(n));
        CHECK(static_cast<int>(aug.size()) - n >= (n + 1) / 2);
        CHECK(aug.size() == exact_max(d, hull_cycle(n)).size());
    }
}
