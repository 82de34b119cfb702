#include "stringcx/construct.hpp"

#include "stringcx/generators.hpp"

#include "doctest.h"
#include "helpers.hpp"

using namespace stringcx;
using namespace testutil;

TEST_CASE("triangulation construction and admissibility") {
    const Triangulation2D tetra = surface_library("sphere");
    CHECK(tetra.vertex_count() == 4);
    CHECK(tetra.edge_count() == 6);
    CHECK(tetra.triangle_count() == 4);
    CHECK(tetra.admissible());

    // A dangling edge breaks admissibility.
    Triangulation2D dangling({"a", "b", "c", "d"},
                             {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}},
                             {{0, 1, 2}, {0, 1, 3}});
    std::string why;
    CHECK_FALSE(dangling.admissible(&why));
    CHECK(why.find("edge") != std::string::npos);

    // An isolated vertex breaks it too.
    Triangulation2D lonely_vertex({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {1, 2}}, {{0, 1, 2}});
    CHECK_FALSE(lonely_vertex.admissible(&why));
    CHECK(why.find("vertex") != std::string::npos);

    CHECK_THROWS_AS(Triangulation2D({"a", "b"}, {{0, 0}}, {}), std::invalid_argument);
    CHECK_THROWS_AS(Triangulation2D({"a", "b", "c"}, {{0, 1}}, {{0, 1, 2}}),
                    std::invalid_argument);  // missing edges of the triangle
    CHECK_THROWS_AS(Triangulation2D({"a", "b"}, {{0, 1}, {1, 0}}, {}), std::invalid_argument);
}

TEST_CASE("flags are vertex-edge-triangle chains") {
    const Triangulation2D tetra = surface_library("sphere");
    const auto flags = flags_of(tetra);
    CHECK(flags.size() == 24);  // 4 triangles x 6 flags
    for (const Flag& f : flags) {
        const auto& e = tetra.edges()[f.edge];
        const auto& t = tetra.triangles()[f.triangle];
        CHECK((e[0] == f.vertex || e[1] == f.vertex));
        CHECK((t[0] == e[0] || t[1] == e[0] || t[2] == e[0]));
        CHECK((t[0] == e[1] || t[1] == e[1] || t[2] == e[1]));
    }
}

TEST_CASE("realization parameters are constrained") {
    CHECK_NOTHROW(RealizationParams::defaults());
    CHECK_NOTHROW(RealizationParams(Scalar::exact(1), Scalar::exact(3, 4), Scalar::exact(3, 4)));
    CHECK_THROWS_AS(RealizationParams(Scalar::exact(0), Scalar::exact(3, 5), Scalar::exact(7, 10)),
                    std::invalid_argument);
    CHECK_THROWS_AS(RealizationParams(Scalar::exact(1), Scalar::exact(1, 2), Scalar::exact(7, 10)),
                    std::invalid_argument);  // u = k/2 is not allowed
    CHECK_THROWS_AS(RealizationParams(Scalar::exact(1), Scalar::exact(3, 5), Scalar::exact(1)),
                    std::invalid_argument);  // v = k is not allowed
}

TEST_CASE("realize the tetrahedron boundary") {
    const Triangulation2D tetra = surface_library("sphere");
    const GapSpace space = realize(tetra);
    CHECK(space.size() == 14);
    CHECK(space.metric());
    CHECK(validate_gaps(space.gaps()).ok);

    // Two vertices of one edge are incomparable simplices: distance k.
    CHECK(space.gap(0, 1) == Scalar::exact(1));
    // Vertex 0 lies in edge {0,1}, the first edge: distance u.
    CHECK(space.gap(0, 4) == Scalar::exact(3, 5));
    // Vertex 0 lies in triangle {0,1,2}, the first triangle: u + v.
    CHECK(space.gap(0, 10) == Scalar::exact(13, 10));
    // Edge {0,1} lies in triangle {0,1,2}: distance v.
    CHECK(space.gap(4, 10) == Scalar::exact(7, 10));
}

TEST_CASE("single triangle realization distances") {
    const GapSpace space = realize(surface_library("disk"));
    CHECK(space.size() == 7);
    // Point order: vertices 0..2, edges {0,1},{0,2},{1,2} at 3..5, the
    // triangle at 6.
    CHECK(space.gap(0, 6) == Scalar::exact(13, 10));  // u + v
    CHECK(space.gap(3, 6) == Scalar::exact(7, 10));   // v
    CHECK(space.gap(0, 3) == Scalar::exact(3, 5));    // u
    CHECK(space.gap(0, 5) == Scalar::exact(1));       // vertex 0 opposite edge {1,2}
}

TEST_CASE("every incidence chain is isometric to {0, u, u+v}") {
    const Triangulation2D tri = surface_library("rp2");
    const GapSpace space = realize(tri);
    const int nv = tri.vertex_count();
    const int ne = tri.edge_count();
    for (const Flag& f : flags_of(tri)) {
        const int pv = f.vertex;
        const int pe = nv + f.edge;
        const int pt = nv + ne + f.triangle;
        CHECK(space.gap(pv, pe) == Scalar::exact(3, 5));
        CHECK(space.gap(pe, pt) == Scalar::exact(7, 10));
        CHECK(space.gap(pv, pt) == Scalar::exact(13, 10));
        CHECK(space.gap(pv, pe) + space.gap(pe, pt) == space.gap(pv, pt));
    }
}

TEST_CASE("verify_realization on the tetrahedron") {
    const Triangulation2D tetra = surface_library("sphere");
    const RealizationReport report = verify_realization(realize(tetra), tetra);
    CHECK(report.ok);
    CHECK(report.three_string_count == 24);
    CHECK(report.flag_count == 24);
    CHECK(report.edge_is_middle);
    CHECK(report.no_longer_strings);
    CHECK(report.isomorphic_to_subdivision);
}

TEST_CASE("verify_realization on the single triangle") {
    const Triangulation2D disk = surface_library("disk");
    const RealizationReport report = verify_realization(realize(disk), disk);
    CHECK(report.ok);
    CHECK(report.flag_count == 6);
}

TEST_CASE("verification fails on a foreign space") {
    const Triangulation2D disk = surface_library("disk");
    const GapSpace wrong = uniform_metric(7);
    const RealizationReport report = verify_realization(wrong, disk);
    CHECK_FALSE(report.ok);
}

TEST_CASE("barycentric subdivision counts") {
    const Triangulation2D one = surface_library("disk");
    const Triangulation2D sub = barycentric_subdivision(one);
    CHECK(sub.vertex_count() == 7);
    CHECK(sub.edge_count() == 12);
    CHECK(sub.triangle_count() == 6);
    CHECK(sub.admissible());

    const Triangulation2D tetra_sub = barycentric_subdivision(surface_library("sphere"));
    CHECK(tetra_sub.vertex_count() == 14);
    CHECK(tetra_sub.edge_count() == 36);
    CHECK(tetra_sub.triangle_count() == 24);
    CHECK(tetra_sub.vertex_count() - tetra_sub.edge_count() + tetra_sub.triangle_count() == 2);
    CHECK(tetra_sub.admissible());
}

TEST_CASE("surface library invariants") {
    struct Expected {
        const char* name;
        int v, e, t, chi;
    };
    const Expected table[] = {
        {"sphere", 4, 6, 4, 2},   {"torus", 7, 21, 14, 0}, {"klein", 9, 27, 18, 0},
        {"rp2", 6, 15, 10, 1},    {"disk", 3, 3, 1, 1},    {"cylinder", 6, 12, 6, 0},
        {"moebius", 5, 10, 5, 0}, {"two-spheres", 8, 12, 8, 4},
    };
    for (const Expected& row : table) {
        const Triangulation2D tri = surface_library(row.name);
        CHECK(tri.vertex_count() == row.v);
        CHECK(tri.edge_count() == row.e);
        CHECK(tri.triangle_count() == row.t);
        CHECK(tri.vertex_count() - tri.edge_count() + tri.triangle_count() == row.chi);
        CHECK(tri.admissible());
    }
    CHECK_THROWS_AS(surface_library("dodecahedron"), std::invalid_argument);
}

TEST_CASE("closed surfaces have every edge in exactly two triangles") {
    for (const char* name : {"sphere", "torus", "klein", "rp2", "two-spheres"}) {
        const Triangulation2D tri = surface_library(name);
        for (const auto& e : tri.edges()) {
            int count = 0;
            for (const auto& t : tri.triangles()) {
                const bool has0 = t[0] == e[0] || t[1] == e[0] || t[2] == e[0];
                const bool has1 = t[0] == e[1] || t[1] == e[1] || t[2] == e[1];
                if (has0 && has1) ++count;
            }
            CHECK(count == 2);
        }
    }
}

TEST_CASE("sphere_four_points yields the 2-sphere complex") {
    const GapSpace s = sphere_four_points();
    const StringComplex c =
        build_complex(enumerate_eps_strings(s, Scalar::exact(0)), s.labels());
    const HomologyResult h = homology(c, Coefficients::mod2);
    CHECK(h.betti == std::vector<long>{1, 0, 1});
}

TEST_CASE("no metric space with three or fewer points is a 2-sphere") {
    const SmallSphereSearch search = search_small_sphere_spaces(6);
    CHECK_FALSE(search.sphere_found);
    CHECK(search.spaces_examined >= 45);
}

TEST_CASE("u = v realization verifies") {
    const Triangulation2D tetra = surface_library("sphere");
    const RealizationParams params(Scalar::exact(1), Scalar::exact(3, 4), Scalar::exact(3, 4));
    const RealizationReport report = verify_realization(realize(tetra, params), tetra);
    CHECK(report.ok);
}

TEST_CASE("realize rejects an inadmissible triangulation") {
    Triangulation2D lonely({"a", "b", "c", "d"}, {{0, 1}, {0, 2}, {1, 2}}, {{0, 1, 2}});
    CHECK_FALSE(lonely.admissible());
    CHECK_THROWS_AS(realize(lonely), std::invalid_argument);
}
