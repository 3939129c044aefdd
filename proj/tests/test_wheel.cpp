// Tests for wheel-family detection and the glued-surface classifier, checked
// against the covering-map pipeline on instances where both apply and against
// hand-built counterexamples (pillows, pinched vertices, tampered
// certificates) where they do not.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "latloc/covering.hpp"
#include "latloc/families.hpp"
#include "latloc/local_probe.hpp"
#include "latloc/wheel.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

using namespace latloc;

namespace {

// Every vertex in exactly four family cycles (matching the stored counts and
// flags), every edge of g in exactly two, every cycle side an edge of g.
void require_valid_certificate(const Graph& g, const WheelCertificate& cert) {
    REQUIRE(static_cast<int>(cert.per_vertex_count.size()) == g.n);
    REQUIRE(static_cast<int>(cert.wheel_check.size()) == g.n);
    std::vector<int> vcount(g.n, 0);
    std::map<std::pair<int, int>, int> ecount;
    for (const Cycle4& c : cert.family)
        for (int k = 0; k < 4; ++k) {
            int u = c[k], v = c[(k + 1) % 4];
            REQUIRE(g.has_edge(u, v));
            ++vcount[u];
            ++ecount[std::minmax(u, v)];
        }
    for (int v = 0; v < g.n; ++v) {
        CHECK(vcount[v] == 4);
        CHECK(cert.per_vertex_count[v] == 4);
        CHECK(static_cast<bool>(cert.wheel_check[v]));
    }
    long long edges_in_two = 0;
    for (const auto& [e, k] : ecount) {
        CHECK(k == 2);
        ++edges_in_two;
    }
    CHECK(edges_in_two == g.edge_count());
}

Graph petersen() {
    std::vector<std::pair<int, int>> edges;
    for (int i = 0; i < 5; ++i) {
        edges.push_back({i, (i + 1) % 5});
        edges.push_back({i, i + 5});
        edges.push_back({i + 5, (i + 2) % 5 + 5});
    }
    return make_graph(10, edges);
}

}  // namespace

TEST_CASE("small tori take all their 4-cycles as the wheel family") {
    Graph t33 = build_torus(3, 3, 0);
    // Zero budget: no backtracking is needed when the full 4-cycle set works.
    auto cert = find_wheel_family(t33, 0);
    REQUIRE(cert.has_value());
    CHECK(cert->family.size() == 9);
    require_valid_certificate(t33, *cert);
    // ... even though the graph is not weakly 2-locally lattice-like, so the
    // wheel property is strictly weaker.
    CHECK_FALSE(is_weakly_r_locally(t33, 2, 2).holds);

    Graph t88 = build_torus(8, 8, 0);
    auto cert88 = find_wheel_family(t88);
    REQUIRE(cert88.has_value());
    std::vector<Cycle4> all = enumerate_4cycles(t88);
    std::sort(all.begin(), all.end());
    CHECK(cert88->family == all);  // exactly the 64 face cycles
    CHECK(cert88->family.size() == 64);
    require_valid_certificate(t88, *cert88);
}

TEST_CASE("backtracking drops the meridian 4-cycles of short tori") {
    // 4x5 torus: 25 4-cycles = 20 faces + 5 meridians of the length-4
    // direction.  The meridians are over-covering, so the search must select
    // exactly the faces; the excluded cycles partition the vertex set.
    Graph t45 = build_torus(4, 5, 0);
    auto cert = find_wheel_family(t45);
    REQUIRE(cert.has_value());
    CHECK(cert->family.size() == 20);
    require_valid_certificate(t45, *cert);
    std::set<Cycle4> chosen(cert->family.begin(), cert->family.end());
    std::vector<Cycle4> excluded;
    for (const Cycle4& c : enumerate_4cycles(t45))
        if (!chosen.count(c)) excluded.push_back(c);
    REQUIRE(excluded.size() == 5);
    std::vector<int> hits(t45.n, 0);
    for (const Cycle4& c : excluded)
        for (int v : c) ++hits[v];
    CHECK(std::count(hits.begin(), hits.end(), 1) == t45.n);

    // 4x4 torus: 24 4-cycles = 16 faces + 8 meridians; the excluded meridians
    // hit every vertex exactly twice (one row, one column).
    Graph t44 = build_torus(4, 4, 0);
    auto cert44 = find_wheel_family(t44);
    REQUIRE(cert44.has_value());
    CHECK(cert44->family.size() == 16);
    require_valid_certificate(t44, *cert44);
    std::set<Cycle4> chosen44(cert44->family.begin(), cert44->family.end());
    std::vector<int> hits44(t44.n, 0);
    for (const Cycle4& c : enumerate_4cycles(t44))
        if (!chosen44.count(c))
            for (int v : c) ++hits44[v];
    CHECK(std::count(hits44.begin(), hits44.end(), 2) == t44.n);

    CHECK(glue_surface(*cert44).classification == SurfaceClass::Torus);
    CHECK(vertex_rotation_check(*cert44, t44));

    // The same instance under a zero node budget cannot finish.
    CHECK_THROWS_WITH_AS(find_wheel_family(t44, 0), doctest::Contains("INDETERMINATE"), Error);
}

TEST_CASE("graphs without a wheel family yield none") {
    Graph k5 = make_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2},
                              {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}});
    CHECK_FALSE(find_wheel_family(k5).has_value());

    std::vector<std::pair<int, int>> k44e;
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < 4; ++b) k44e.push_back({a, 4 + b});
    CHECK_FALSE(find_wheel_family(make_graph(8, k44e)).has_value());

    Graph oct = make_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {1, 2}, {2, 3},
                               {3, 4}, {4, 1}, {5, 1}, {5, 2}, {5, 3}, {5, 4}});
    CHECK_FALSE(find_wheel_family(oct).has_value());

    CHECK_FALSE(find_wheel_family(build_grid(5, 5)).has_value());  // not 4-regular
    CHECK_FALSE(find_wheel_family(petersen()).has_value());        // 3-regular
    CHECK_FALSE(find_wheel_family(Graph{}).has_value());

    // The 3x3 strange graph is 4-regular with nine 4-cycles, but its diagonal
    // wrap-around collapses every candidate wheel figure.
    CHECK_FALSE(find_wheel_family(build_strange(3, 3)).has_value());
}

TEST_CASE("gluing classifies the families and satisfies the counting identities") {
    struct Instance {
        const char* name;
        Graph g;
        SurfaceClass want;
    };
    std::vector<Instance> instances;
    instances.push_back({"t330", build_torus(3, 3, 0), SurfaceClass::Torus});
    instances.push_back({"t440", build_torus(4, 4, 0), SurfaceClass::Torus});
    instances.push_back({"t572", build_torus(5, 7, 2), SurfaceClass::Torus});
    instances.push_back({"t834", build_torus(8, 3, 4), SurfaceClass::Torus});
    instances.push_back({"k650", build_klein(6, 5, 0), SurfaceClass::KleinBottle});
    instances.push_back({"k791", build_klein(7, 9, 1), SurfaceClass::KleinBottle});
    instances.push_back({"k852", build_klein(8, 5, 2), SurfaceClass::KleinBottle});
    instances.push_back({"k541", build_klein(5, 4, 1), SurfaceClass::KleinBottle});
    instances.push_back({"k432", build_klein(4, 3, 2), SurfaceClass::KleinBottle});
    instances.push_back({"s57", build_strange(5, 7), SurfaceClass::KleinBottle});
    instances.push_back({"s75", build_strange(7, 5), SurfaceClass::KleinBottle});

    for (const Instance& inst : instances) {
        CAPTURE(inst.name);
        auto cert = find_wheel_family(inst.g);
        REQUIRE(cert.has_value());
        require_valid_certificate(inst.g, *cert);
        SurfaceReport rep = glue_surface(*cert);
        CHECK(rep.classification == inst.want);
        CHECK(rep.euler == 0);
        CHECK(rep.euler == rep.v - rep.e + rep.f);
        // Four faces per vertex and two faces per edge force these.
        CHECK(rep.v == rep.f);
        CHECK(2 * rep.e == 4 * rep.f);
        CHECK(rep.v == inst.g.n);
        CHECK(vertex_rotation_check(*cert, inst.g));
    }
}

TEST_CASE("the wheel path agrees with the covering path where both apply") {
    struct Instance {
        const char* name;
        Graph g;
    };
    std::vector<Instance> instances;
    instances.push_back({"t572", build_torus(5, 7, 2)});
    instances.push_back({"t880", build_torus(8, 8, 0)});
    instances.push_back({"t330", build_torus(3, 3, 0)});
    instances.push_back({"k650", build_klein(6, 5, 0)});
    instances.push_back({"k791", build_klein(7, 9, 1)});
    instances.push_back({"k852", build_klein(8, 5, 2)});
    instances.push_back({"s57", build_strange(5, 7)});
    instances.push_back({"s75", build_strange(7, 5)});

    for (const Instance& inst : instances) {
        CAPTURE(inst.name);
        auto cert = find_wheel_family(inst.g);
        REQUIRE(cert.has_value());
        SurfaceClass via_wheel = glue_surface(*cert).classification;

        CoverPipelineResult pipe = run_cover_pipeline(inst.g, 2, 0, -1, 2);
        REQUIRE(pipe.cover.valid);
        REQUIRE(pipe.surface.has_value());
        SurfaceClass via_cover = *pipe.surface == Surface2::Torus ? SurfaceClass::Torus
                                                                  : SurfaceClass::KleinBottle;
        CHECK(via_wheel == via_cover);
    }

    // Below the covering threshold the wheel path keeps working while the
    // extension path fails: one obstructed mid-extension, one with no
    // opposite structure at the seed.
    Graph k54 = build_klein(5, 4, 1);
    auto cert54 = find_wheel_family(k54);
    REQUIRE(cert54.has_value());
    CHECK(glue_surface(*cert54).classification == SurfaceClass::KleinBottle);
    PartialCover pc = extend_cover(k54, seed_map(k54, 0, 2), 4);
    CHECK_FALSE(pc.valid);

    Graph k43 = build_klein(4, 3, 2);
    auto cert43 = find_wheel_family(k43);
    REQUIRE(cert43.has_value());
    CHECK(glue_surface(*cert43).classification == SurfaceClass::KleinBottle);
    CHECK_THROWS_WITH_AS(seed_map(k43, 0, 2), doctest::Contains("NO_OPPOSITE_STRUCTURE"), Error);
}

TEST_CASE("malformed certificates are rejected by the gluer") {
    Graph t55 = build_torus(5, 5, 0);
    auto cert = find_wheel_family(t55);
    REQUIRE(cert.has_value());
    CHECK(glue_surface(*cert).classification == SurfaceClass::Torus);

    WheelCertificate missing = *cert;
    missing.family.pop_back();
    CHECK_THROWS_WITH_AS(glue_surface(missing), doctest::Contains("MALFORMED_CERTIFICATE"), Error);

    WheelCertificate doubled = *cert;
    doubled.family.push_back(doubled.family.front());
    CHECK_THROWS_WITH_AS(glue_surface(doubled), doctest::Contains("MALFORMED_CERTIFICATE"), Error);

    WheelCertificate degenerate;
    degenerate.family.push_back({0, 1, 0, 1});
    CHECK_THROWS_WITH_AS(glue_surface(degenerate), doctest::Contains("MALFORMED_CERTIFICATE"),
                         Error);

    WheelCertificate empty;
    CHECK_THROWS_WITH_AS(glue_surface(empty), doctest::Contains("MALFORMED_CERTIFICATE"), Error);
}

TEST_CASE("pillows glue to spheres and pinched vertices fail the rotation check") {
    // One square doubled: a pillowcase, i.e. a sphere.
    Cycle4 a = {0, 1, 2, 3};
    WheelCertificate pillow;
    pillow.family = {a, a};
    SurfaceReport rep = glue_surface(pillow);
    CHECK(rep.v == 4);
    CHECK(rep.e == 4);
    CHECK(rep.f == 2);
    CHECK(rep.euler == 2);
    CHECK(rep.orientable);
    CHECK(rep.classification == SurfaceClass::Other);
    Graph c4 = make_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
    CHECK_FALSE(vertex_rotation_check(pillow, c4));  // two faces per vertex, not four

    // Two pillows sharing vertex 0: four faces meet there but in two disjoint
    // two-face fans, so the gluing pinches instead of forming a disc.
    Cycle4 b = {0, 4, 5, 6};
    Graph bouquet = make_graph(7, {{0, 1}, {1, 2}, {2, 3}, {3, 0},
                                   {0, 4}, {4, 5}, {5, 6}, {6, 0}});
    WheelCertificate pinched;
    pinched.family = {a, a, b, b};
    SurfaceReport pinch_rep = glue_surface(pinched);
    CHECK(pinch_rep.euler == 3);  // two spheres joined at a point
    CHECK(pinch_rep.classification == SurfaceClass::Other);
    CHECK_FALSE(vertex_rotation_check(pinched, bouquet));
}

TEST_CASE("the orientation verdict is independent of traversal order") {
    struct Instance {
        const char* name;
        Graph g;
    };
    std::vector<Instance> instances;
    instances.push_back({"t560", build_torus(5, 6, 0)});
    instances.push_back({"k650", build_klein(6, 5, 0)});

    for (const Instance& inst : instances) {
        CAPTURE(inst.name);
        auto cert = find_wheel_family(inst.g);
        REQUIRE(cert.has_value());
        SurfaceReport base = glue_surface(*cert);

        for (unsigned seed = 1; seed <= 6; ++seed) {
            std::mt19937 rng(seed);
            WheelCertificate shuffled = *cert;
            std::shuffle(shuffled.family.begin(), shuffled.family.end(), rng);
            for (Cycle4& c : shuffled.family) {
                std::rotate(c.begin(), c.begin() + rng() % 4, c.end());
                if (rng() & 1) std::reverse(c.begin(), c.end());
            }
            SurfaceReport rep = glue_surface(shuffled);
            CHECK(rep.v == base.v);
            CHECK(rep.e == base.e);
            CHECK(rep.f == base.f);
            CHECK(rep.euler == base.euler);
            CHECK(rep.orientable == base.orientable);
            CHECK(rep.classification == base.classification);
        }
    }
}
