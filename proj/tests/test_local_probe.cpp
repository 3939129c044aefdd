#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <random>
#include <set>

#include "latloc/lattice_group.hpp"
#include "latloc/local_probe.hpp"

using namespace latloc;

namespace {

SubgroupSpec translations2(Vec a, Vec b) {
    return make_subgroup(2, {LatticeAut::translation(a), LatticeAut::translation(b)});
}

Graph torus_quotient(int p, int q) {
    return build_quotient(translations2({p, 0}, {0, q})).graph;
}

// Independent construction of a finite patch of the planar grid, large enough
// that balls around the centre are unaffected by the boundary.
Graph grid_patch(int half, int& centre) {
    int side = 2 * half + 1;
    auto id = [side](int x, int y) { return x * side + y; };
    std::vector<std::pair<int, int>> edges;
    for (int x = 0; x < side; ++x)
        for (int y = 0; y < side; ++y) {
            if (x + 1 < side) edges.emplace_back(id(x, y), id(x + 1, y));
            if (y + 1 < side) edges.emplace_back(id(x, y), id(x, y + 1));
        }
    centre = id(half, half);
    return make_graph(side * side, edges);
}

}  // namespace

TEST_CASE("lattice ball shape") {
    // |B_r| in Z^2 is 2r^2+2r+1; edges 4r^2. In Z^3: 1+6+18+38 vertices for r<=3.
    for (int r = 1; r <= 3; ++r) {
        RootedBall ball = lattice_ball(2, r, BallMode::Full);
        CHECK(ball.graph.n == 2 * r * r + 2 * r + 1);
        CHECK(ball.graph.edge_count() == 4 * r * r);
        CHECK(is_bipartite(ball.graph).bipartite);
        CHECK(ball.depth[0] == 0);
    }
    CHECK(lattice_ball(3, 1, BallMode::Full).graph.n == 7);
    CHECK(lattice_ball(3, 2, BallMode::Full).graph.n == 25);
    CHECK(lattice_ball(3, 3, BallMode::Full).graph.n == 63);
    CHECK(lattice_ball(7, 1, BallMode::Full).graph.n == 15);

    // Full and minus agree for the lattice: no edges join two boundary vertices.
    for (int d : {2, 3}) {
        RootedBall full = lattice_ball(d, 2, BallMode::Full);
        RootedBall minus = lattice_ball(d, 2, BallMode::Minus);
        CHECK(full.graph.adj == minus.graph.adj);
    }

    // Coordinates line up with the ball indexing and explain every edge.
    auto coords = lattice_ball_coordinates(2, 2);
    RootedBall ball = lattice_ball(2, 2, BallMode::Full);
    REQUIRE(coords.size() == static_cast<size_t>(ball.graph.n));
    for (int i = 0; i < ball.graph.n; ++i) {
        int norm = 0;
        for (int c : coords[i]) norm += std::abs(c);
        CHECK(norm == ball.depth[i]);
        for (int j : ball.graph.adj[i]) {
            int dist = 0;
            for (size_t k = 0; k < coords[i].size(); ++k)
                dist += std::abs(coords[i][k] - coords[j][k]);
            CHECK(dist == 1);
        }
    }
}

TEST_CASE("lattice ball matches a ball extracted from a big grid patch") {
    int centre = 0;
    Graph patch = grid_patch(6, centre);
    for (int r = 1; r <= 3; ++r)
        for (auto mode : {BallMode::Full, BallMode::Minus}) {
            RootedBall from_patch = extract_ball(patch, centre, r, mode);
            RootedIso iso = rooted_isomorphic(from_patch, lattice_ball(2, r, mode));
            CHECK(iso.isomorphic);
        }
}

TEST_CASE("opposite partition on a healthy torus") {
    QuotientGraph q = build_quotient(translations2({6, 0}, {0, 6}));
    std::map<Vec, int> at;
    for (int v = 0; v < q.graph.n; ++v) at[q.rep_of_vertex[v]] = v;
    auto vertex = [&](long long x, long long y) {
        return at.at(Vec{(x % 6 + 6) % 6, (y % 6 + 6) % 6});
    };
    for (int v = 0; v < q.graph.n; ++v) {
        auto part = opposite_partition(q.graph, v, 2);
        REQUIRE(part.has_value());
        CHECK(part->pairs.size() == 2);
        long long x = q.rep_of_vertex[v][0], y = q.rep_of_vertex[v][1];
        // The pairing must match the coordinate axes.
        CHECK(part->partner(vertex(x + 1, y)) == vertex(x - 1, y));
        CHECK(part->partner(vertex(x, y + 1)) == vertex(x, y - 1));
        CHECK(part->partner(v) == -1);
    }
}

TEST_CASE("opposite partition failure modes") {
    // Wrong degree: hard error.
    Graph c5 = make_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
    CHECK_THROWS_AS(opposite_partition(c5, 0, 2), Error);

    // K5 is 4-regular but no pair of neighbours has a single common neighbour.
    std::vector<std::pair<int, int>> k5;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) k5.emplace_back(i, j);
    CHECK(!opposite_partition(make_graph(5, k5), 0, 2).has_value());

    // 4x4 torus: wrap-around gives opposite axis neighbours two common
    // neighbours, so no valid matching survives.
    CHECK(!opposite_partition(torus_quotient(4, 4), 0, 2).has_value());

    // 6x6 torus in dimension 3 makes no sense: degree mismatch.
    CHECK_THROWS_AS(opposite_partition(torus_quotient(6, 6), 0, 3), Error);
}

TEST_CASE("locality thresholds on square tori") {
    // Square torus of side D: weakly r-locally iff D >= 2r+1, r-locally iff
    // D >= 2r+2.
    for (int D = 3; D <= 8; ++D) {
        Graph g = torus_quotient(D, D);
        for (int r = 1; r <= 3; ++r) {
            CHECK(is_weakly_r_locally(g, 2, r).holds == (D >= 2 * r + 1));
            CHECK(is_r_locally(g, 2, r).holds == (D >= 2 * r + 2));
        }
    }
    // C5 x C5: weakly 2-locally but the odd wrap defeats the strict check.
    Graph c55 = torus_quotient(5, 5);
    CHECK(is_weakly_r_locally(c55, 2, 2).holds);
    CHECK(!is_r_locally(c55, 2, 2).holds);
    CHECK(is_r_locally(c55, 2, 2).failing_vertex == 0);

    // Dimension-3 torus with side 7: 2-locally and weakly 3-locally, not 3-locally.
    SubgroupSpec d3 = make_subgroup(3, {LatticeAut::translation({7, 0, 0}),
                                        LatticeAut::translation({0, 7, 0}),
                                        LatticeAut::translation({0, 0, 7})});
    Graph g3 = build_quotient(d3).graph;
    CHECK(is_r_locally(g3, 3, 2).holds);
    CHECK(is_weakly_r_locally(g3, 3, 3).holds);
    CHECK(!is_r_locally(g3, 3, 3).holds);
    // Wrong dimension fails immediately on degree.
    CHECK(!is_weakly_r_locally(g3, 2, 1).holds);
}

TEST_CASE("locality agrees with displacement thresholds on random groups") {
    std::mt19937 rng(41);
    auto random_vec2 = [&](int bound) {
        std::uniform_int_distribution<int> c(-bound, bound);
        return Vec{c(rng), c(rng)};
    };
    std::vector<int> sigmas_seen;
    int done = 0;
    while (done < 14) {
        std::vector<LatticeAut> gens{LatticeAut::translation(random_vec2(7)),
                                     LatticeAut::translation(random_vec2(7))};
        if (rng() % 2) {
            std::vector<std::vector<int>> pool{{-1, 2}, {2, 1}, {-2, 1}, {-1, -2}};
            SignedPerm s;
            s.images = pool[rng() % pool.size()];
            gens.push_back({s, random_vec2(4)});
        }
        SubgroupSpec spec = make_subgroup(2, gens);
        if (spec.translation_lattice.rank() < 2 || spec.translation_lattice.index() > 500)
            continue;
        ++done;
        Displacement disp = min_displacement(spec);
        Graph g = build_quotient(spec).graph;
        for (int r = 1; r <= 2; ++r) {
            CHECK(is_weakly_r_locally(g, 2, r).holds == (disp.value >= 2 * r + 1));
            CHECK(is_r_locally(g, 2, r).holds == (disp.value >= 2 * r + 2));
        }
    }
}

TEST_CASE("weak locality does not imply the strict grid cell: skew quotient") {
    // Quotient by <(3,2),(0,6)>: displacement 5, so weakly 2-locally but not
    // 2-locally; the wheel corners (x+1,y+1) and (x-1,y-1) differ by (2,2),
    // which is a lattice shift of an axis step, so they are adjacent and the
    // local cell has a thirteenth edge.
    SubgroupSpec skew = translations2({3, 2}, {0, 6});
    CHECK(min_displacement(skew).value == 5);
    Graph g = build_quotient(skew).graph;
    CHECK(is_weakly_r_locally(g, 2, 2).holds);
    CHECK(!is_r_locally(g, 2, 2).holds);
    CHECK(!is_locally_grid(g).holds);
    CHECK(is_locally_grid(g).failing_vertex == 0);

    // C5 x C5 is locally grid (all cells clean) yet still not 2-locally.
    Graph c55 = torus_quotient(5, 5);
    CHECK(is_locally_grid(c55).holds);
    CHECK(!is_r_locally(c55, 2, 2).holds);

    // Large tori satisfy everything.
    Graph big = torus_quotient(7, 8);
    CHECK(is_locally_grid(big).holds);
    CHECK(is_r_locally(big, 2, 2).holds);
}

TEST_CASE("failing vertex is the least one") {
    // Union of a healthy 6x6 torus and a failing 4x4 torus: first bad vertex is
    // the first vertex of the second component.
    Graph a = torus_quotient(6, 6);
    Graph b = torus_quotient(4, 4);
    std::vector<std::pair<int, int>> edges;
    for (int u = 0; u < a.n; ++u)
        for (int v : a.adj[u])
            if (u < v) edges.emplace_back(u, v);
    for (int u = 0; u < b.n; ++u)
        for (int v : b.adj[u])
            if (u < v) edges.emplace_back(a.n + u, a.n + v);
    Graph both = make_graph(a.n + b.n, edges);
    LocalCheck weak = is_weakly_r_locally(both, 2, 2);
    CHECK(!weak.holds);
    CHECK(weak.failing_vertex == a.n);
}

TEST_CASE("thread count does not change results") {
    Graph g = torus_quotient(5, 6);
    for (int threads : {1, 2, 4}) {
        LocalCheck weak = is_weakly_r_locally(g, 2, 2, threads);
        LocalCheck strict = is_r_locally(g, 2, 2, threads);
        LocalCheck grid = is_locally_grid(g, threads);
        CHECK(weak.holds == is_weakly_r_locally(g, 2, 2).holds);
        CHECK(strict.holds == is_r_locally(g, 2, 2).holds);
        CHECK(strict.failing_vertex == is_r_locally(g, 2, 2).failing_vertex);
        CHECK(grid.holds == is_locally_grid(g).holds);
    }
}
