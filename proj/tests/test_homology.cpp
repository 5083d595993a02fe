#include <catch2/catch_amalgamated.hpp>

#include "mcgl/cut.hpp"
#include "mcgl/homology.hpp"

using namespace mcgl;

TEST_CASE("torus basis is normalized") {
    auto s = make_surface(4, {2, 3, 0, 1});
    auto hb = make_homology_basis(s);
    REQUIRE(hb.genus == 1);
    // the single-chord loop through the {0,2} gluing is the first basis vector
    auto a = make_curve(s, {{0, {1, 3}}, {2, {2, 3}}});
    CHECK(homology_class(s, hb, a) == IntVec{1, 0});
    auto b = make_curve(s, {{1, {1, 3}}, {3, {2, 3}}});
    IntVec vb = homology_class(s, hb, b);
    CHECK((vb == IntVec{0, 1} || vb == IntVec{0, -1}));
}

TEST_CASE("null-homotopic curves have zero class") {
    auto s = standard_surface(3);
    auto hb = make_homology_basis(s);
    auto disk = make_curve(s, {{0, {2, 5}}, {0, {3, 5}}, {7, {2, 5}}, {7, {3, 5}}});
    CHECK(is_zero(homology_class(s, hb, disk)));
}

TEST_CASE("two-arc curve class is primitive and nonzero") {
    auto s = standard_surface(3);
    auto hb = make_homology_basis(s);
    auto c = make_curve(s, {{0, {1, 4}}, {2, {3, 4}}, {9, {1, 4}}, {7, {3, 4}}});
    IntVec v = homology_class(s, hb, c);
    CHECK(!is_zero(v));
    CHECK(is_primitive(v));
}

TEST_CASE("pairing of classes matches algebraic intersection") {
    auto s = standard_surface(2);
    auto hb = make_homology_basis(s);
    // duals pair like the curves themselves
    for (std::size_t e = 0; e < hb.dual_loops.size(); ++e)
        for (std::size_t f = 0; f < hb.dual_loops.size(); ++f) {
            if (e == f) continue;
            IntVec ve = homology_class(s, hb, hb.dual_loops[e]);
            IntVec vf = homology_class(s, hb, hb.dual_loops[f]);
            CHECK(sympl_pairing(ve, vf) ==
                  algebraic_intersection(s, hb.dual_loops[e], hb.dual_loops[f]));
        }
}

TEST_CASE("basis classes realize the standard form") {
    for (int g : {1, 2, 3}) {
        auto s = standard_surface(g);
        auto hb = make_homology_basis(s);
        REQUIRE(static_cast<int>(hb.basis_combos.size()) == 2 * g);
        // reconstructing each basis vector through the coordinate map gives
        // the standard unit vectors
        for (int k = 0; k < 2 * g; ++k) {
            IntVec coord(2 * g, 0);
            const int ne = static_cast<int>(hb.dual_loops.size());
            IntVec pair_with(2 * g, 0);
            for (int l = 0; l < 2 * g; ++l) {
                long long acc = 0;
                for (int e = 0; e < ne; ++e)
                    for (int f = 0; f < ne; ++f)
                        acc += hb.basis_combos[k][e] * hb.basis_combos[l][f] *
                               hb.dual_pairing(e, f);
                pair_with[l] = acc;
            }
            coord = symplectic_form(g) * pair_with;
            IntVec unit(2 * g, 0);
            unit[k] = 1;
            CHECK(coord == unit);
        }
    }
}
