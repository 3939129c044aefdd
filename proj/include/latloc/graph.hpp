#pragma once

// Core finite-graph types and operations: balls around a vertex, bipartiteness,
// 4-cycle enumeration, and rooted/plain isomorphism testing. Everything downstream
// (local checks, covering maps, surface gluing) is built on these.

#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "latloc/util.hpp"

namespace latloc {

constexpr int kInfiniteDistance = -1;

// Simple undirected graph on vertices 0..n-1 with sorted adjacency lists.
// Labels are optional display names (empty vector means "use the index").
struct Graph {
    int n = 0;
    std::vector<std::vector<int>> adj;
    std::vector<std::string> labels;

    bool has_edge(int u, int v) const;
    int degree(int v) const { return static_cast<int>(adj[v].size()); }
    long long edge_count() const;
    bool is_regular(int k) const;
    // Sorted intersection of the two adjacency lists.
    std::vector<int> common_neighbors(int u, int v) const;
    std::string label(int v) const;
};

// Builds a graph from an edge list; rejects loops, ignores duplicate edges.
Graph make_graph(int n, const std::vector<std::pair<int, int>>& edges);

// Text format: optional "# vertices N" header line, then one "u v" pair per line.
// Other lines starting with '#' are comments. Vertices past the largest edge
// endpoint exist only if declared by the header.
Graph parse_edge_list(std::istream& in);
void write_edge_list(const Graph& g, std::ostream& out);

std::vector<int> bfs_distances(const Graph& g, int src);
int distance(const Graph& g, int u, int v);  // kInfiniteDistance if disconnected

// Full: induced subgraph on the ball. Minus: same, minus edges joining two
// vertices both at distance exactly r from the root.
enum class BallMode { Full, Minus };

// Ball of radius r, re-indexed so the root is vertex 0 and vertices appear in
// order of (depth, original index). `original[i]` maps back to the host graph.
struct RootedBall {
    int radius = 0;
    BallMode mode = BallMode::Full;
    Graph graph;
    std::vector<int> depth;
    std::vector<int> original;

    int root() const { return 0; }
};

RootedBall extract_ball(const Graph& g, int v, int r, BallMode mode);

struct BipartiteCheck {
    bool bipartite = true;
    std::vector<int> colour;     // 0/1 per vertex when bipartite
    std::vector<int> odd_cycle;  // closed odd walk c0..ck (ck adjacent to c0) otherwise
};

BipartiteCheck is_bipartite(const Graph& g);
int girth(const Graph& g);  // -1 for forests

// A 4-cycle as the canonical vertex sequence of its traversal: lexicographically
// least over the 8 rotations/reflections. Chords are permitted.
using Cycle4 = std::array<int, 4>;
Cycle4 canonical_4cycle(const Cycle4& c);
std::vector<Cycle4> enumerate_4cycles(const Graph& g);

struct RootedIso {
    bool isomorphic = false;
    std::vector<int> mapping;  // ball index in a -> ball index in b
};

// Root- and depth-preserving isomorphism between two balls of the same mode.
// Exact backtracking; prunes on degree, depth, and (for depth-1 vertices)
// pairwise common-neighbour counts, which encodes the coordinate-pair structure
// of lattice balls without any lattice-specific casework.
RootedIso rooted_isomorphic(const RootedBall& a, const RootedBall& b);

// Whole-graph isomorphism (exact backtracking; intended for the modest graphs
// this project compares, e.g. quotients with a few thousand vertices).
std::optional<std::vector<int>> graph_isomorphism(const Graph& a, const Graph& b);

}  // namespace latloc
