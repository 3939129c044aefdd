// Tests for the graph family builders.  The main weapon here is
// cross-validation: every family on a closed surface is built twice, once
// from its explicit edge formula and once as a lattice quotient by the
// matching automorphism subgroup, and the two results must be isomorphic.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latloc/families.hpp"
#include "latloc/local_probe.hpp"

#include <array>
#include <cstdlib>
#include <set>
#include <string>
#include <vector>

using namespace latloc;

namespace {

// Degree histogram as a sorted multiset, keyed by degree.
std::vector<std::pair<int, int>> degree_histogram(const Graph& g) {
    std::vector<std::pair<int, int>> out;
    std::set<int> degs;
    for (int v = 0; v < g.n; ++v) degs.insert(g.degree(v));
    for (int d : degs) {
        int c = 0;
        for (int v = 0; v < g.n; ++v)
            if (g.degree(v) == d) ++c;
        out.emplace_back(d, c);
    }
    return out;
}

void check_matches_quotient(const Graph& built, const SubgroupSpec& spec) {
    QuotientGraph q = build_quotient(spec);
    CHECK_FALSE(q.loops_found);
    CHECK_FALSE(q.multi_edges_found);
    REQUIRE(built.n == q.graph.n);
    CHECK(built.edge_count() == q.graph.edge_count());
    auto iso = graph_isomorphism(built, q.graph);
    CHECK(iso.has_value());
}

} // namespace

TEST_CASE("grid patches have the right shape") {
    for (auto [p, q] : std::vector<std::pair<int, int>>{{2, 2}, {2, 5}, {3, 5}, {6, 4}, {5, 5}}) {
        Graph g = build_grid(p, q);
        CHECK(g.n == p * q);
        CHECK(g.edge_count() == p * (q - 1) + q * (p - 1));
        CHECK(is_bipartite(g).bipartite);

        // Corners have degree 2, the rest of the boundary 3, interior 4.
        auto hist = degree_histogram(g);
        std::vector<std::pair<int, int>> expect;
        expect.emplace_back(2, 4);
        int boundary = 2 * (p - 2) + 2 * (q - 2);
        if (boundary > 0) expect.emplace_back(3, boundary);
        int interior = (p - 2) * (q - 2);
        if (interior > 0) expect.emplace_back(4, interior);
        CHECK(hist == expect);

        // Edges connect box points at Euclidean distance one.
        for (int v = 0; v < g.n; ++v) {
            int i = v / q, j = v % q;
            for (int w : g.adj[v]) {
                int a = w / q, b = w % q;
                CHECK(std::abs(i - a) + std::abs(j - b) == 1);
            }
        }
    }
    CHECK_THROWS_WITH_AS(build_grid(1, 5), doctest::Contains("BAD_PARAMS"), Error);
}

TEST_CASE("torus graphs are quotients by their translation lattices") {
    std::vector<std::array<int, 3>> cases = {
        {3, 3, 0}, {3, 3, 1}, {4, 4, 0}, {4, 4, 2}, {5, 7, 2},
        {6, 5, 3}, {7, 4, 1}, {5, 5, 0}, {8, 3, 4},
    };
    for (auto [p, q, delta] : cases) {
        CAPTURE(p); CAPTURE(q); CAPTURE(delta);
        Graph t = build_torus(p, q, delta);
        CHECK(t.n == p * q);
        CHECK(t.is_regular(4));
        check_matches_quotient(t, torus_group(p, q, delta));
    }

    CHECK_THROWS_WITH_AS(build_torus(2, 4, 0), doctest::Contains("BAD_PARAMS"), Error);
    CHECK_THROWS_WITH_AS(build_torus(5, 3, 3), doctest::Contains("BAD_PARAMS"), Error);
    CHECK_THROWS_WITH_AS(build_torus(5, 3, -1), doctest::Contains("BAD_PARAMS"), Error);
    CHECK_THROWS_WITH_AS(torus_group(5, 3, 3), doctest::Contains("BAD_PARAMS"), Error);
}

TEST_CASE("klein bottle graphs are glide quotients") {
    for (int p : {4, 6, 8})
        for (int q : {3, 5, 6}) {
            CAPTURE(p); CAPTURE(q);
            Graph k0 = build_klein(p, q, 0);
            CHECK(k0.n == p * q);
            CHECK(k0.is_regular(4));
            check_matches_quotient(k0, klein_group(p, q, 0));

            Graph k2 = build_klein(p, q, 2);
            CHECK(k2.is_regular(4));
            check_matches_quotient(k2, klein_group(p, q, 2));
        }
    for (int p : {3, 5, 7})
        for (int q : {3, 4, 6}) {
            CAPTURE(p); CAPTURE(q);
            Graph k1 = build_klein(p, q, 1);
            CHECK(k1.n == p * q);
            CHECK(k1.is_regular(4));
            check_matches_quotient(k1, klein_group(p, q, 1));
        }

    // Parity and range validation.
    CHECK_THROWS_WITH_AS(build_klein(5, 4, 0), doctest::Contains("BAD_PARAMS"), Error);
    CHECK_THROWS_WITH_AS(build_klein(4, 4, 1), doctest::Contains("BAD_PARAMS"), Error);
    CHECK_THROWS_WITH_AS(build_klein(5, 4, 2), doctest::Contains("BAD_PARAMS"), Error);
    CHECK_THROWS_WITH_AS(build_klein(4, 2, 0), doctest::Contains("BAD_PARAMS"), Error);
    CHECK_THROWS_WITH_AS(build_klein(4, 4, 3), doctest::Contains("BAD_PARAMS"), Error);
    CHECK_THROWS_WITH_AS(klein_group(5, 4, 0), doctest::Contains("BAD_PARAMS"), Error);

    // The glide squares to a vertical translation, so the translation
    // lattice is always the rectangular one of twice the height.
    SubgroupSpec s = klein_group(6, 5, 0);
    CHECK(s.point_group.size() == 2);
    CHECK(s.translation_lattice.index() == 60);
    CHECK(s.translation_lattice.contains({6, 0}));
    CHECK(s.translation_lattice.contains({0, 10}));
    CHECK_FALSE(s.translation_lattice.contains({0, 5}));
}

TEST_CASE("strange graphs are glide quotients") {
    std::vector<std::pair<int, int>> cases = {
        {3, 3}, {3, 5}, {5, 7}, {7, 5}, {4, 6}, {6, 4}, {5, 5}, {4, 4}, {3, 7}, {9, 4},
    };
    for (auto [p, q] : cases) {
        CAPTURE(p); CAPTURE(q);
        Graph s = build_strange(p, q);
        CHECK(s.n == p * q);
        CHECK(s.is_regular(4));
        check_matches_quotient(s, strange_group(p, q));
    }
    CHECK_THROWS_WITH_AS(build_strange(2, 5), doctest::Contains("BAD_PARAMS"), Error);
    CHECK_THROWS_WITH_AS(strange_group(5, 2), doctest::Contains("BAD_PARAMS"), Error);
}

TEST_CASE("procedures reproduce the named families") {
    // Axis-parallel glides: the half-integer corner placement gives the
    // kind 0/1 Klein graphs, the lattice-point placement gives kind 2.
    for (auto [p, q] : std::vector<std::pair<int, int>>{{4, 3}, {6, 5}, {8, 4}}) {
        QuotientGraph g = build_quotient(procedure_i(p, q, ProcICorner::HalfInteger));
        CHECK(graph_isomorphism(g.graph, build_klein(p, q, 0)).has_value());
        QuotientGraph h = build_quotient(procedure_i(p, q, ProcICorner::LatticePoint));
        CHECK(graph_isomorphism(h.graph, build_klein(p, q, 2)).has_value());
    }
    for (auto [p, q] : std::vector<std::pair<int, int>>{{5, 3}, {7, 4}}) {
        QuotientGraph g = build_quotient(procedure_i(p, q, ProcICorner::HalfInteger));
        CHECK(graph_isomorphism(g.graph, build_klein(p, q, 1)).has_value());
    }

    // Diagonal glides: main diagonal for p <= q, anti diagonal for p >= q,
    // with the rectangle sides swapped relative to the box.
    QuotientGraph a = build_quotient(procedure_ii(7, 5, ProcIIDiagonal::Main));
    CHECK(graph_isomorphism(a.graph, build_strange(5, 7)).has_value());
    QuotientGraph b = build_quotient(procedure_ii(5, 7, ProcIIDiagonal::Anti));
    CHECK(graph_isomorphism(b.graph, build_strange(7, 5)).has_value());

    CHECK_THROWS_WITH_AS(procedure_i(0, 3, ProcICorner::HalfInteger),
                         doctest::Contains("BAD_PARAMS"), Error);
    CHECK_THROWS_WITH_AS(procedure_ii(3, 0, ProcIIDiagonal::Main),
                         doctest::Contains("BAD_PARAMS"), Error);
}

TEST_CASE("family displacements match hand-computed values") {
    // Torus displacements are shortest lattice vectors.
    CHECK(min_displacement(torus_group(5, 7, 2)).value == 5);
    CHECK(min_displacement(torus_group(3, 3, 0)).value == 3);
    CHECK(min_displacement(torus_group(8, 3, 4)).value == 6);  // 2*(4,3) - (8,0) = (0,6)

    // Klein kinds 0/1: the glide moves (x,y) by |p-1-2x| + q, minimised at
    // the reflection axis; competing translations give p and 2q.  For odd p
    // the axis passes through a lattice column, so the glide term is q.
    CHECK(min_displacement(klein_group(4, 3, 0)).value == 4);   // min(4, 6, 3+1)
    CHECK(min_displacement(klein_group(6, 5, 0)).value == 6);   // min(6, 10, 5+1)
    CHECK(min_displacement(klein_group(5, 4, 1)).value == 4);   // min(5, 8, 4)
    CHECK(min_displacement(klein_group(7, 9, 1)).value == 7);   // min(7, 18, 9)

    // Klein kind 2: the axis passes through lattice points, so the glide
    // displacement is exactly q there.
    CHECK(min_displacement(klein_group(4, 3, 2)).value == 3);
    CHECK(min_displacement(klein_group(8, 5, 2)).value == 5);

    // Strange graphs.
    CHECK(min_displacement(strange_group(5, 7)).value == 7);
    CHECK(min_displacement(strange_group(7, 5)).value == 5);
    CHECK(min_displacement(strange_group(3, 3)).value == 3);

    // Generalised torus from two skew translations.
    SubgroupSpec gen = gen_torus_group({9, 3}, {3, 6});
    CHECK(min_displacement(gen).value == 9);
    CHECK(build_quotient(gen).graph.n == 45);
    CHECK_THROWS_WITH_AS(min_displacement(gen_torus_group({2, 4}, {1, 2})),
                         doctest::Contains("NON_COCOMPACT"), Error);
}

TEST_CASE("family locality agrees with the displacement thresholds") {
    // D = 5: weakly 2-locally but not 2-locally.
    Graph t572 = build_torus(5, 7, 2);
    CHECK(is_weakly_r_locally(t572, 2, 2).holds);
    CHECK_FALSE(is_r_locally(t572, 2, 2).holds);
    CHECK(is_r_locally(t572, 2, 1).holds);
    CHECK(is_locally_grid(t572).holds);

    // D = 7: 2-locally (hence locally-grid) and weakly 3-locally.
    Graph s57 = build_strange(5, 7);
    CHECK(is_r_locally(s57, 2, 2).holds);
    CHECK(is_weakly_r_locally(s57, 2, 3).holds);
    CHECK_FALSE(is_r_locally(s57, 2, 3).holds);
    CHECK(is_locally_grid(s57).holds);

    // D = 5 again, via the anti-diagonal glide.
    Graph s75 = build_strange(7, 5);
    CHECK(is_weakly_r_locally(s75, 2, 2).holds);
    CHECK_FALSE(is_r_locally(s75, 2, 2).holds);

    // Klein kind 2 with D = 3: weakly 1-locally only.  The vertical wrap
    // at the fixed column creates a triangle, so the full 1-ball is wrong
    // while the edgeless 1-ball is still fine.
    Graph k2 = build_klein(4, 3, 2);
    CHECK(is_weakly_r_locally(k2, 2, 1).holds);
    CHECK_FALSE(is_r_locally(k2, 2, 1).holds);
    CHECK(girth(k2) == 3);

    // Klein kind 0 with D = p = 6.
    Graph k0 = build_klein(6, 5, 0);
    CHECK(is_r_locally(k0, 2, 2).holds);
    CHECK_FALSE(is_weakly_r_locally(k0, 2, 3).holds);
}
