#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "mcgl/symplectic.hpp"
#include "mcgl/theorem14.hpp"

using namespace mcgl;

namespace {

IntVec rvec(std::mt19937& rng, int dim, int span = 3) {
    IntVec v(dim);
    for (auto& x : v) x = static_cast<long long>(rng() % (2 * span + 1)) - span;
    return v;
}

IntVec random_primitive(std::mt19937& rng, int dim) {
    while (true) {
        IntVec v = rvec(rng, dim);
        if (!is_zero(v) && is_primitive(v)) return v;
    }
}

/// random product of transvections about primitive vectors: a generic
/// element of Sp(2g, Z)
IntMat random_symplectic(std::mt19937& rng, int g, int factors = 4) {
    IntMat m = IntMat::identity(2 * g);
    for (int i = 0; i < factors; ++i) m = m * transvection(random_primitive(rng, 2 * g));
    return m;
}

}  // namespace

TEST_CASE("transvection basics") {
    CHECK(transvection(IntVec{0, 0}) == IntMat::identity(2));

    IntMat t = transvection(IntVec{1, 0});
    IntMat expect(2, 2);
    expect(0, 0) = 1;
    expect(0, 1) = -1;
    expect(1, 1) = 1;
    CHECK(t == expect);  // x -> x + <x, v>v with <x, v> = x^T J v

    CHECK(transvection(IntVec{2, -3}) == transvection(IntVec{-2, 3}));

    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        IntVec v = random_primitive(rng, 6);
        IntMat m = transvection(v);
        CHECK(is_symplectic(m));
        CHECK(m * v == v);
        CHECK(transvection_inverse(v) * m == IntMat::identity(6));
        // m x - x is a multiple of v
        IntVec x = rvec(rng, 6);
        IntVec diff = m * x - x;
        long long q = sympl_pairing(x, v);
        CHECK(diff == q * v);
    }
}

TEST_CASE("commuting transvections") {
    std::mt19937 rng(13);
    int found = 0;
    while (found < 200) {
        IntVec v = random_primitive(rng, 6);
        IntVec w = random_primitive(rng, 6);
        if (sympl_pairing(v, w) != 0) continue;
        ++found;
        CHECK(transvection(v) * transvection(w) == transvection(w) * transvection(v));
    }
}

TEST_CASE("symplectic completion: one vector") {
    std::mt19937 rng(17);
    for (int g : {2, 3, 4}) {
        for (int trial = 0; trial < 200; ++trial) {
            IntVec src = random_primitive(rng, 2 * g);
            IntVec dst = random_primitive(rng, 2 * g);
            IntMat m = symplectic_completion({src}, {dst});
            CHECK(is_symplectic(m));
            CHECK(m * src == dst);
        }
    }
}

TEST_CASE("symplectic completion: mapped pairs") {
    std::mt19937 rng(19);
    for (int g : {2, 3, 4}) {
        for (int trial = 0; trial < 200; ++trial) {
            IntVec s1 = random_primitive(rng, 2 * g);
            IntVec s2 = random_primitive(rng, 2 * g);
            IntMat m0 = random_symplectic(rng, g);
            IntVec t1 = m0 * s1, t2 = m0 * s2;
            IntMat m = symplectic_completion({s1, s2}, {t1, t2});
            CHECK(is_symplectic(m));
            CHECK(m * s1 == t1);
            CHECK(m * s2 == t2);
        }
    }
}

TEST_CASE("spec example: e1 to e1 + 2 e3 in genus 3") {
    IntVec e1(6, 0), target(6, 0);
    e1[0] = 1;
    target[0] = 1;
    target[4] = 2;  // a1 + 2 a3 in the interleaved basis
    IntMat m = symplectic_completion({e1}, {target});
    CHECK(is_symplectic(m));
    CHECK(m * e1 == target);
}

TEST_CASE("completion error paths") {
    // pairing mismatch: <e1, e2> = 1 vs <e1, -e2> = -1
    IntVec e1(4, 0), e2(4, 0);
    e1[0] = 1;
    e2[1] = 1;
    CHECK_THROWS_AS(symplectic_completion({e1, e2}, {e1, -e2}), error);
    try {
        symplectic_completion({e1, e2}, {e1, -e2});
    } catch (const error& e) {
        CHECK(e.code() == errc::pairing_mismatch);
    }

    // not primitive
    try {
        symplectic_completion({2ll * e1}, {e2});
        FAIL("expected not_primitive");
    } catch (const error& e) {
        CHECK(e.code() == errc::not_primitive);
    }

    // primitive, pairings match, but pairs inequivalent: (e1, e1) vs (e1, -e1)
    try {
        symplectic_completion({e1, e1}, {e1, -e1});
        FAIL("expected no_completion");
    } catch (const error& e) {
        CHECK(e.code() == errc::no_completion);
    }
}

TEST_CASE("lantern classes and the lantern identity on homology") {
    for (int g : {3, 4, 5}) {
        auto cls = lantern_homology_classes(g);
        for (const auto& [l1, v1] : cls) {
            CHECK(is_primitive(v1));
            for (const auto& [l2, v2] : cls) CHECK(sympl_pairing(v1, v2) == 0);
        }
        LanternLabels lab;
        CHECK(cls.at(lab.gamma2) ==
              cls.at(lab.alpha1) + cls.at(lab.alpha2) + cls.at(lab.x1));
        CHECK(verify_lantern_homology(g));
    }
    CHECK_THROWS_AS(lantern_homology_classes(2), error);

    // corrupted assignment fails
    auto bad = lantern_homology_classes(3);
    bad["gamma1"] = bad["alpha1"];
    CHECK(!verify_lantern_homology(3, bad));
}

TEST_CASE("evaluate_word is a homomorphism") {
    std::mt19937 rng(23);
    const int g = 3;
    WordAssignment assign;
    assign.dim = 2 * g;
    assign.twists["a"] = random_primitive(rng, 2 * g);
    assign.twists["b"] = random_primitive(rng, 2 * g);
    assign.syms["m"] = random_symplectic(rng, g);
    assign.syms["n"] = random_symplectic(rng, g);

    auto random_word = [&](int len) {
        McgWord w;
        const char* twists[] = {"a", "b"};
        const char* syms[] = {"m", "n"};
        for (int i = 0; i < len; ++i) {
            int exp = rng() % 2 ? 1 : -1;
            if (rng() % 2)
                w.letters.push_back(twist(twists[rng() % 2], exp));
            else
                w.letters.push_back(sym(syms[rng() % 2], exp));
        }
        return w;
    };

    CHECK(evaluate_word(McgWord{}, assign) == IntMat::identity(2 * g));
    for (int trial = 0; trial < 100; ++trial) {
        McgWord w1 = random_word(1 + rng() % 5);
        McgWord w2 = random_word(1 + rng() % 5);
        CHECK(evaluate_word(concat(w1, w2), assign) ==
              evaluate_word(w1, assign) * evaluate_word(w2, assign));
        CHECK(evaluate_word(concat(w1, inverse(w1)), assign) == IntMat::identity(2 * g));
        CHECK(evaluate_word(free_reduce(w1), assign) == evaluate_word(w1, assign));
    }
}

TEST_CASE("lantern identity through the evaluator") {
    const int g = 3;
    auto ls = lantern_sides();
    WordAssignment assign;
    assign.dim = 2 * g;
    for (const auto& [label, cls] : lantern_homology_classes(g)) assign.twists[label] = cls;
    CHECK(evaluate_word(ls.eq_left, assign) == evaluate_word(ls.eq_right, assign));
    CHECK(evaluate_word(ls.proof_left, assign) == evaluate_word(ls.proof_right, assign));
}
