#pragma once

#include <vector>

#include "mcgl/intersection.hpp"
#include "mcgl/intmat.hpp"

namespace mcgl {

/// Symplectic basis of H_1 of a glued polygon, fixed deterministically by
/// the pairing.
///
/// Every glued side pair e = {i, pairs(i)} has a dual loop: the single-chord
/// curve through the midpoints of both sides.  The dual loops generate H_1,
/// the radical of their intersection-pairing matrix is exactly the
/// redundancy, and an integer congruence reduction of the pairing matrix
/// yields 2g combinations forming a standard symplectic basis
/// (a1, b1, ..., ag, bg).  Coordinates of a class are recovered from its
/// pairings with the basis via the form itself.
struct HomologyBasis {
    int genus = 0;
    std::vector<int> edge_side;             // lower side index per glued pair
    std::vector<CurveDiagram> dual_loops;   // one per glued pair, canonical orientation
    IntMat dual_pairing;                    // algebraic intersections of dual loops
    std::vector<IntVec> basis_combos;       // 2g columns over the dual loops
};

inline CurveDiagram dual_loop(const PolygonSurface& s, int side) {
    return make_curve(s, {{side, {1, 2}}, {s.partner(side), {1, 2}}});
}

inline HomologyBasis make_homology_basis(const PolygonSurface& s) {
    HomologyBasis hb;
    hb.genus = s.genus;
    for (int i = 0; i < s.n_sides(); ++i)
        if (i < s.partner(i)) {
            hb.edge_side.push_back(i);
            hb.dual_loops.push_back(dual_loop(s, i));
        }
    const int ne = static_cast<int>(hb.dual_loops.size());
    hb.dual_pairing = IntMat(ne, ne);
    for (int e = 0; e < ne; ++e)
        for (int f = e + 1; f < ne; ++f) {
            int v = algebraic_intersection(s, hb.dual_loops[e], hb.dual_loops[f]);
            hb.dual_pairing(e, f) = v;
            hb.dual_pairing(f, e) = -v;
        }
    std::vector<long long> blocks;
    IntMat u = skew_normal_form(hb.dual_pairing, blocks);
    check(static_cast<int>(blocks.size()) == s.genus, errc::internal,
          "homology: rank of the intersection form is not 2g");
    for (long long d : blocks)
        check(d == 1, errc::internal, "homology: intersection form not unimodular");
    for (int k = 0; k < 2 * s.genus; ++k) hb.basis_combos.push_back(u.col(k));
    return hb;
}

/// Pairings of a curve with the 2g basis classes.
inline IntVec basis_pairings(const PolygonSurface& s, const HomologyBasis& hb,
                             const CurveDiagram& c) {
    const int ne = static_cast<int>(hb.dual_loops.size());
    IntVec with_duals(ne);
    for (int e = 0; e < ne; ++e)
        with_duals[e] = algebraic_intersection(s, c, hb.dual_loops[e]);
    IntVec pi(2 * hb.genus, 0);
    for (int k = 0; k < 2 * hb.genus; ++k)
        for (int e = 0; e < ne; ++e) pi[k] += hb.basis_combos[k][e] * with_duals[e];
    return pi;
}

/// Coordinates in the symplectic basis: x solves x^T J = pairings, i.e.
/// x = J * pairings for the standard block form.
inline IntVec homology_class(const PolygonSurface& s, const HomologyBasis& hb,
                             const CurveDiagram& c) {
    return symplectic_form(hb.genus) * basis_pairings(s, hb, c);
}

}  // namespace mcgl
