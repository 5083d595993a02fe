#include <catch2/catch_amalgamated.hpp>

#include "mcgl/intersection.hpp"

using namespace mcgl;

namespace {
PolygonSurface torus() { return make_surface(4, {2, 3, 0, 1}); }

// the (1,0)-style loop: one chord through the {0,2} gluing
CurveDiagram loop_a(const PolygonSurface& s) {
    return make_curve(s, {{0, {1, 3}}, {2, {2, 3}}});
}
// the (0,1)-style loop through the {1,3} gluing
CurveDiagram loop_b(const PolygonSurface& s) {
    return make_curve(s, {{1, {1, 3}}, {3, {2, 3}}});
}
}  // namespace

TEST_CASE("transverse loops on the torus meet once") {
    auto s = torus();
    auto a = loop_a(s), b = loop_b(s);
    CHECK(diagram_crossings(a, b) == 1);
    CHECK(geometric_intersection(s, a, b) == 1);
    CHECK(geometric_intersection(s, b, a) == 1);

    int ab = algebraic_intersection(s, a, b);
    int ba = algebraic_intersection(s, b, a);
    CHECK((ab == 1 || ab == -1));
    CHECK(ba == -ab);  // antisymmetry
}

TEST_CASE("parallel copies are disjoint") {
    auto s = torus();
    auto a = loop_a(s);
    auto copy = parallel_copy(s, a);
    CHECK(geometric_intersection(s, a, copy) == 0);
    CHECK(algebraic_intersection(s, a, copy) == 0);
}

TEST_CASE("a curve against its own diagram") {
    auto s = torus();
    auto a = loop_a(s);
    CHECK(geometric_intersection(s, a, a) == 0);
    CHECK(algebraic_intersection(s, a, a) == 0);
}

TEST_CASE("bigon removal on the torus") {
    auto s = torus();
    // a is the (1,0) loop; b the same class taking a detour over the {1,3}
    // gluing and back, crossing a twice in the diagram
    auto a = make_curve(s, {{0, {1, 3}}, {2, {2, 3}}});
    auto b = make_curve(s, {{0, {1, 5}}, {1, {1, 5}}, {3, {4, 5}}, {3, {1, 10}},
                            {1, {9, 10}}, {2, {4, 5}}});
    REQUIRE(is_simple(b));
    CHECK(diagram_crossings(a, b) == 2);

    auto mp = minimal_position(s, a, b);
    CHECK(mp.initial_crossings == 2);
    CHECK(mp.crossings == 0);
    CHECK(mp.bigons_removed == 1);
    CHECK(is_simple(mp.a));
    CHECK(is_simple(mp.b));
    CHECK(geometric_intersection(s, a, b) == 0);
    CHECK(algebraic_intersection(s, a, b) == 0);
}

TEST_CASE("intersection is symmetric and bounds the algebraic count") {
    auto s = standard_surface(3);
    auto c = make_curve(s, {{0, {1, 4}}, {2, {3, 4}}, {9, {1, 4}}, {7, {3, 4}}});
    auto d = make_curve(s, {{1, {1, 3}}, {8, {2, 3}}});
    int geom = geometric_intersection(s, c, d);
    CHECK(geom == geometric_intersection(s, d, c));
    CHECK(std::abs(algebraic_intersection(s, c, d)) <= geom);
}

TEST_CASE("shifted copies of the two-arc curve are laid out disjoint") {
    auto s = standard_surface(3);
    auto c = make_curve(s, {{0, {1, 4}}, {2, {3, 4}}, {9, {1, 4}}, {7, {3, 4}}});
    std::vector<BoundaryPoint> shifted = c.points;
    for (auto& p : shifted) p.side = (p.side + 4) % 14;
    auto image = make_curve(s, shifted);
    CHECK(diagram_crossings(c, image) == 0);
    CHECK(geometric_intersection(s, c, image) == 0);
}

TEST_CASE("overlay region census on the torus") {
    auto s = torus();
    auto a = loop_a(s), b = loop_b(s);
    Overlay ov(s, {&a, &b});
    REQUIRE(ov.crossing_count() == 1);
    // complement of two loops meeting once is a single disk
    REQUIRE(ov.regions().size() == 1);
    CHECK(ov.regions()[0].chi == 1);
    CHECK(ov.regions()[0].boundary_count() == 1);
    CHECK(ov.circles()[0].crossing_visits == 4);
    CHECK(!ov.first_bigon_circle().has_value());

    // complement of one nonseparating loop is an annulus
    Overlay single(s, {&a});
    REQUIRE(single.regions().size() == 1);
    CHECK(single.regions()[0].chi == 0);
    CHECK(single.regions()[0].boundary_count() == 2);
}
