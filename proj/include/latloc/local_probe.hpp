#pragma once

// Local comparisons against the d-dimensional lattice graph: reference balls,
// the opposite-neighbour pairing induced by coordinate axes, and the vertexwise
// "looks like the lattice up to radius r" predicates.

#include <optional>

#include "latloc/graph.hpp"

namespace latloc {

// Ball of radius r around the origin of the d-dimensional lattice graph,
// indexed like any RootedBall: vertex 0 is the origin, vertices sorted by
// (depth, lex order of coordinates). The lattice is bipartite, so no edge joins
// two depth-r vertices and both modes yield the same graph.
RootedBall lattice_ball(int d, int r, BallMode mode);
// Coordinates of each ball vertex, aligned with the RootedBall indexing.
std::vector<std::vector<int>> lattice_ball_coordinates(int d, int r);

// Pairing of the 2d neighbours of a vertex into d "opposite" pairs: members of
// a pair have exactly one common neighbour (the centre), members of different
// pairs exactly two, and the non-centre second common neighbours of all
// cross-pair combinations are pairwise distinct.
struct OppositePartition {
    std::vector<std::pair<int, int>> pairs;
    int partner(int vertex) const;  // -1 if the vertex is not in any pair
};

// Unique opposite partition at v, or nullopt when none (or several) exist.
// Throws DEGREE_MISMATCH unless deg(v) == 2d.
std::optional<OppositePartition> opposite_partition(const Graph& g, int v, int d);

struct LocalCheck {
    bool holds = true;
    int failing_vertex = -1;  // least vertex violating the condition
};

// Every ball of radius r in g is isomorphic (rooted, depth-preserving) to the
// lattice ball: full induced balls for the strict check, balls without
// edges between two boundary vertices for the weak one.
LocalCheck is_r_locally(const Graph& g, int d, int r, int threads = 1);
LocalCheck is_weakly_r_locally(const Graph& g, int d, int r, int threads = 1);

// 4-regular, and around every vertex the neighbours admit a cyclic ordering
// w1..w4 with four distinct corner vertices z1..z4 such that consecutive
// neighbours share exactly {v, z_i}, opposite neighbours share exactly {v},
// and no edges exist within {v, w*, z*} beyond the twelve required ones.
LocalCheck is_locally_grid(const Graph& g, int threads = 1);

}  // namespace latloc
