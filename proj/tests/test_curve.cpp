#include <catch2/catch_amalgamated.hpp>

#include <random>
#include <sstream>

#include "mcgl/curve.hpp"

using namespace mcgl;

namespace {
CurveDiagram fig_a(const PolygonSurface& s) {
    // single diagonal chord on the 4-gon torus
    return make_curve(s, {{0, {1, 2}}, {2, {1, 2}}});
}
}  // namespace

TEST_CASE("glue_point is the orientation-reversing identification") {
    auto s3 = standard_surface(3);
    BoundaryPoint p{0, {1, 4}};
    auto q = glue_point(s3, p);
    CHECK(q.side == 7);
    CHECK(q.t == Rational(3, 4));

    auto torus = make_surface(4, {2, 3, 0, 1});
    auto mid = glue_point(torus, {1, {1, 2}});
    CHECK(mid.side == 3);
    CHECK(mid.t == Rational(1, 2));

    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        BoundaryPoint r{static_cast<int>(rng() % 14),
                        Rational(1 + static_cast<int>(rng() % 97), 100)};
        CHECK(glue_point(s3, glue_point(s3, r)) == r);
    }
}

TEST_CASE("closure validation") {
    auto torus = make_surface(4, {2, 3, 0, 1});
    CHECK_NOTHROW(fig_a(torus));
    CHECK_THROWS_AS(make_curve(torus, {{0, {1, 2}}, {2, {1, 3}}}), error);
    CHECK_THROWS_AS(make_curve(torus, {{0, {1, 2}}}), error);
    CHECK_THROWS_AS(make_curve(torus, {{0, {0, 1}}, {2, {1, 1}}}), error);  // t on corner
}

TEST_CASE("simplicity") {
    auto torus = make_surface(4, {2, 3, 0, 1});
    CHECK(is_simple(fig_a(torus)));

    // two-chord curve whose chords interleave
    auto s = standard_surface(3);
    auto crossing = make_curve(s, {{0, {1, 4}}, {2, {1, 2}}, {9, {1, 2}}, {1, {1, 2}},
                                   {8, {1, 2}}, {7, {3, 4}}});
    auto rep = simplicity(crossing);
    CHECK(!rep.simple);
    REQUIRE(rep.offending.has_value());

    // coincident points are reported too
    auto doubled = CurveDiagram{{{0, {1, 2}}, {2, {1, 2}}, {0, {1, 2}}, {2, {1, 2}}}};
    CHECK(!is_simple(doubled));
}

TEST_CASE("parallel copy stays simple and disjoint in position") {
    auto s = standard_surface(3);
    auto c = make_curve(s, {{0, {1, 4}}, {2, {3, 4}}, {9, {1, 4}}, {7, {3, 4}}});
    auto copy = parallel_copy(s, c);
    CHECK(is_simple(copy));
    for (const auto& p : copy.points)
        for (const auto& q : c.points) CHECK(p != q);
    for (int i = 0; i < c.chords(); ++i)
        for (int j = 0; j < copy.chords(); ++j)
            CHECK(!chords_cross(c.chord_a(i), c.chord_b(i), copy.chord_a(j), copy.chord_b(j)));
}

TEST_CASE("curve text round trip") {
    auto s = standard_surface(3);
    auto c = make_curve(s, {{0, {1, 4}}, {2, {3, 4}}, {9, {1, 4}}, {7, {3, 4}}});
    std::ostringstream os;
    format_curve(c, os);
    std::istringstream is(os.str());
    auto back = parse_curve(s, is);
    CHECK(back.points.size() == c.points.size());
    for (std::size_t i = 0; i < c.points.size(); ++i) CHECK(back.points[i] == c.points[i]);

    std::istringstream broken("curve 1\npoint 0 1/2\npoint 2 1/3\n");
    CHECK_THROWS_AS(parse_curve(s, broken), error);  // closure must hold on load
    std::istringstream badcount("curve 2\npoint 0 1/2\npoint 7 1/2\n");
    CHECK_THROWS_AS(parse_curve(s, badcount), error);
}
