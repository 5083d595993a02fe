#include <catch2/catch_amalgamated.hpp>

#include "mcgl/cut.hpp"

using namespace mcgl;

namespace {
PolygonSurface torus() { return make_surface(4, {2, 3, 0, 1}); }

CurveDiagram fig2_curve(const PolygonSurface& s) {
    int g = s.genus;
    return make_curve(s, {{0, {1, 4}},
                          {2, {3, 4}},
                          {2 * g + 3, {1, 4}},
                          {2 * g + 1, {3, 4}}});
}

// small circle crossing one glued edge twice: bounds a disk
CurveDiagram disk_curve(const PolygonSurface& s) {
    return make_curve(s, {{0, {2, 5}}, {0, {3, 5}}, {s.partner(0), {2, 5}},
                          {s.partner(0), {3, 5}}});
}
}  // namespace

TEST_CASE("cutting along a nonseparating curve keeps one piece") {
    auto s = torus();
    auto a = make_curve(s, {{0, {1, 3}}, {2, {2, 3}}});
    auto cut = cut_along(s, {a});
    REQUIRE(cut.profiles.size() == 1);
    CHECK(cut.profiles[0] == ComponentProfile{0, 2});  // annulus

    auto s3 = standard_surface(3);
    auto c = fig2_curve(s3);
    auto cut3 = cut_along(s3, {c});
    REQUIRE(cut3.profiles.size() == 1);
    CHECK(cut3.profiles[0] == ComponentProfile{2, 2});  // genus drops by one
}

TEST_CASE("cutting along a disk-bounding curve splits off a disk") {
    auto s = torus();
    auto cut = cut_along(s, {disk_curve(s)});
    REQUIRE(cut.profiles.size() == 2);
    CHECK(cut.profiles[0] == ComponentProfile{0, 1});
    CHECK(cut.profiles[1] == ComponentProfile{1, 1});
}

TEST_CASE("is_nonseparating agrees with its two characterizations") {
    auto s = torus();
    auto hb = make_homology_basis(s);
    CHECK(is_nonseparating(s, hb, make_curve(s, {{0, {1, 3}}, {2, {2, 3}}})));
    CHECK(!is_nonseparating(s, hb, disk_curve(s)));

    auto s3 = standard_surface(3);
    auto hb3 = make_homology_basis(s3);
    CHECK(is_nonseparating(s3, hb3, fig2_curve(s3)));
    CHECK(!is_nonseparating(s3, hb3, disk_curve(s3)));
}

TEST_CASE("parallel copies are detected through the annulus criterion") {
    auto s3 = standard_surface(3);
    auto c = fig2_curve(s3);
    CHECK(is_parallel(s3, c, parallel_copy(s3, c)));
    CHECK(is_parallel(s3, c, c));  // same diagram twice

    std::vector<BoundaryPoint> shifted = c.points;
    for (auto& p : shifted) p.side = (p.side + 4) % 14;
    CHECK(!is_parallel(s3, c, make_curve(s3, shifted)));
}

TEST_CASE("cut rejects crossing curves") {
    auto s = torus();
    auto a = make_curve(s, {{0, {1, 3}}, {2, {2, 3}}});
    auto b = make_curve(s, {{1, {1, 3}}, {3, {2, 3}}});
    CHECK_THROWS_AS(cut_along(s, {a, b}), error);
}

TEST_CASE("bounding pair detection") {
    auto s3 = standard_surface(3);
    auto hb = make_homology_basis(s3);

    // 2-arc diagonal and its rotation by pi: disjoint, homologous up to
    // sign, but isotopic -- parallel, so not a bounding pair
    auto c = make_curve(s3, {{0, {1, 5}}, {1, {4, 5}}, {8, {1, 5}}, {7, {4, 5}}});
    std::vector<BoundaryPoint> pts = c.points;
    for (auto& p : pts) p.side = (p.side + 7) % 14;
    auto image = make_curve(s3, pts);
    REQUIRE(geometric_intersection(s3, c, image) == 0);

    IntVec vc = homology_class(s3, hb, c);
    IntVec vi = homology_class(s3, hb, image);
    CHECK(vi == -vc);  // rotation by pi acts as -identity
    CHECK(is_parallel(s3, c, image));
    CHECK(!is_bounding_pair(s3, hb, c, image));

    // 3-arc curve and its rotation by pi: disjoint, non-isotopic,
    // homologous -- a genuine bounding pair
    auto w = make_curve(s3, {{0, {1, 5}}, {1, {1, 5}}, {8, {4, 5}}, {9, {1, 5}},
                             {2, {4, 5}}, {7, {4, 5}}});
    std::vector<BoundaryPoint> wp = w.points;
    for (auto& p : wp) p.side = (p.side + 7) % 14;
    auto wimage = make_curve(s3, wp);
    REQUIRE(geometric_intersection(s3, w, wimage) == 0);
    CHECK(!is_parallel(s3, w, wimage));
    CHECK(is_bounding_pair(s3, hb, w, wimage));

    // parallel copies are never a bounding pair
    CHECK(!is_bounding_pair(s3, hb, c, parallel_copy(s3, c)));

    // distinct homology classes are never a bounding pair
    auto fig2 = fig2_curve(s3);
    std::vector<BoundaryPoint> sh = fig2.points;
    for (auto& p : sh) p.side = (p.side + 4) % 14;
    CHECK(!is_bounding_pair(s3, hb, fig2, make_curve(s3, sh)));

    // crossing curves: no
    auto d = make_curve(s3, {{1, {1, 3}}, {8, {2, 3}}});
    if (geometric_intersection(s3, fig2, d) > 0) CHECK(!is_bounding_pair(s3, hb, fig2, d));
}
