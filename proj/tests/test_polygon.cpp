#include <catch2/catch_amalgamated.hpp>

#include <numeric>
#include <set>
#include <sstream>

#include "mcgl/polygon.hpp"

using namespace mcgl;

TEST_CASE("vertex cycles of small gluings") {
    // 2-gon with its sides folded together: the sphere, two vertex classes.
    auto sphere = make_surface(2, {1, 0});
    CHECK(sphere.vertex_cycles.size() == 2);
    CHECK(sphere.euler_char == 2);
    CHECK(sphere.genus == 0);

    // 4-gon torus aba^-1b^-1.
    auto torus = make_surface(4, {2, 3, 0, 1});
    CHECK(torus.vertex_cycles.size() == 1);
    CHECK(torus.genus == 1);

    // 14-gon with opposite sides identified: two classes, alternating corners.
    auto s3 = standard_surface(3);
    REQUIRE(s3.vertex_cycles.size() == 2);
    std::set<int> evens(s3.vertex_cycles[0].begin(), s3.vertex_cycles[0].end());
    for (int c : evens) CHECK(c % 2 == 0);
    CHECK(s3.vertex_cycles[0].size() == 7);
    CHECK(s3.vertex_cycles[1].size() == 7);
}

TEST_CASE("genus computations") {
    CHECK(make_surface(4, {2, 3, 0, 1}).genus == 1);
    CHECK(standard_surface(3).genus == 3);
    CHECK(make_surface(8, {2, 3, 0, 1, 6, 7, 4, 5}).genus == 2);
    // genus-1 surface whose only same-half pairs are adjacent (used by the
    // witness-construction error-path tests)
    CHECK(make_surface(8, {1, 0, 6, 7, 5, 4, 2, 3}).genus == 1);
}

TEST_CASE("standard surface shape") {
    auto s = standard_surface(3);
    CHECK(s.n_sides() == 14);
    CHECK(s.partner(0) == 7);
    auto s4 = standard_surface(4);
    CHECK(s4.n_sides() == 18);
    CHECK(s4.genus == 4);
    CHECK(s4.vertex_cycles.size() == 2);
    for (int g = 1; g <= 10; ++g) {
        auto sg = standard_surface(g);
        CHECK(sg.genus == g);
        CHECK(sg.vertex_cycles.size() == 2);
    }
}

TEST_CASE("pairing validation") {
    CHECK_THROWS_AS(make_surface(3, {1, 0, 2}), error);        // odd
    CHECK_THROWS_AS(make_surface(2, {0, 1}), error);           // self-glued
    CHECK_THROWS_AS(make_surface(4, {2, 3, 1, 0}), error);     // not involutive
    CHECK_THROWS_AS(make_surface(4, {2, 3, 0, 7}), error);     // out of range
}

TEST_CASE("rotation shifts") {
    auto s3 = standard_surface(3);
    auto shifts = rotation_shifts(s3);
    CHECK(shifts.size() == 14);  // cyclic gluing is rotation-invariant

    std::set<int> orders;
    for (int sh : shifts) orders.insert(14 / std::gcd(14, sh == 0 ? 14 : sh));
    CHECK(orders == std::set<int>{1, 2, 7, 14});

    auto torus = make_surface(4, {2, 3, 0, 1});
    CHECK(rotation_shifts(torus) == std::vector<int>{0, 1, 2, 3});

    // mixed gluing: shift set is still a subgroup containing 0
    auto s = make_surface(8, {1, 0, 6, 7, 5, 4, 2, 3});
    auto sh = rotation_shifts(s);
    CHECK(!sh.empty());
    CHECK(sh[0] == 0);
    std::set<int> set(sh.begin(), sh.end());
    for (int a : sh)
        for (int b : sh) CHECK(set.count((a + b) % 8) == 1);
}

TEST_CASE("rotation shifts form a subgroup for every pairing tried") {
    for (int g = 1; g <= 5; ++g) {
        auto s = standard_surface(g);
        auto sh = rotation_shifts(s);
        std::set<int> set(sh.begin(), sh.end());
        CHECK(set.count(0) == 1);
        for (int a : sh)
            for (int b : sh) CHECK(set.count((a + b) % s.n_sides()) == 1);
    }
}

TEST_CASE("surface text round trip and validation") {
    auto s = standard_surface(2);
    std::ostringstream os;
    format_surface(s, os);
    std::istringstream is(os.str());
    auto back = parse_surface(is);
    CHECK(back.pairing.pairs == s.pairing.pairs);

    std::istringstream self("polygon 4\nglue 0 0\nglue 1 2\n");
    CHECK_THROWS_AS(parse_surface(self), error);
    std::istringstream dup("polygon 4\nglue 0 2\nglue 0 3\n");
    CHECK_THROWS_AS(parse_surface(dup), error);
    std::istringstream range("polygon 4\nglue 0 9\n");
    CHECK_THROWS_AS(parse_surface(range), error);
    std::istringstream incomplete("polygon 4\nglue 0 2\n");
    CHECK_THROWS_AS(parse_surface(incomplete), error);
    std::istringstream comments("# torus\npolygon 4 # the square\nglue 0 2\nglue 1 3\n");
    CHECK(parse_surface(comments).genus == 1);
}
