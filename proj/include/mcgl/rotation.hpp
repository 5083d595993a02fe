#pragma once

#include <numeric>

#include "mcgl/homology.hpp"

namespace mcgl {

/// A gluing-preserving rotation of the polygon: the standard representative
/// of a periodic mapping class.  Only rotations are supported as periodic
/// maps; free actions and reflection-type symmetries have no representative
/// in this model.
struct RotationMap {
    int n_sides = 0;
    int shift = 0;
    int order = 1;  // n / gcd(n, shift)
};

inline RotationMap make_rotation(const PolygonSurface& s, int shift) {
    const int n = s.n_sides();
    shift = ((shift % n) + n) % n;
    auto shifts = rotation_shifts(s);
    check(std::find(shifts.begin(), shifts.end(), shift) != shifts.end(), errc::invalid_input,
          "rotation: shift " + std::to_string(shift) + " does not preserve the gluing");
    int order = shift == 0 ? 1 : n / std::gcd(n, shift);
    return RotationMap{n, shift, order};
}

/// Minimal shift realizing a rotation of the given order, if any.
inline RotationMap rotation_of_order(const PolygonSurface& s, int order) {
    check(order >= 1, errc::invalid_input, "rotation: order must be positive");
    for (int shift : rotation_shifts(s)) {
        int o = shift == 0 ? 1 : s.n_sides() / std::gcd(s.n_sides(), shift);
        if (o == order) return RotationMap{s.n_sides(), shift, order};
    }
    fail(errc::invalid_input,
         "rotation: no gluing-preserving rotation of order " + std::to_string(order));
}

inline RotationMap power(const PolygonSurface& s, const RotationMap& r, int k) {
    long long sh = (static_cast<long long>(r.shift) * k) % r.n_sides;
    return make_rotation(s, static_cast<int>((sh + r.n_sides) % r.n_sides));
}

/// Rotation by pi of the standard (4g+2)-gon: the hyperelliptic involution,
/// certified by homology_action = -identity.
inline RotationMap hyperelliptic(const PolygonSurface& standard_gon) {
    return make_rotation(standard_gon, standard_gon.n_sides() / 2);
}

inline CurveDiagram apply(const PolygonSurface& s, const RotationMap& r,
                          const CurveDiagram& c) {
    std::vector<BoundaryPoint> pts = c.points;
    for (auto& p : pts) p.side = (p.side + r.shift) % s.n_sides();
    return make_curve(s, std::move(pts));
}

/// Induced map on H_1 in the surface's symplectic basis.  Integer, exactly
/// symplectic, of finite order dividing order(r); natural with respect to
/// homology_class.
inline IntMat homology_action(const PolygonSurface& s, const HomologyBasis& hb,
                              const RotationMap& r) {
    const int dim = 2 * hb.genus;
    const int ne = static_cast<int>(hb.dual_loops.size());
    // coordinates of every rotated dual loop
    std::vector<IntVec> rotated(ne);
    for (int e = 0; e < ne; ++e)
        rotated[e] = homology_class(s, hb, apply(s, r, hb.dual_loops[e]));
    IntMat m(dim, dim);
    for (int k = 0; k < dim; ++k) {
        IntVec colv(dim, 0);
        for (int e = 0; e < ne; ++e)
            if (hb.basis_combos[k][e] != 0) colv = colv + hb.basis_combos[k][e] * rotated[e];
        for (int i = 0; i < dim; ++i) m(i, k) = colv[i];
    }
    IntMat j = symplectic_form(hb.genus);
    check(transpose(m) * j * m == j, errc::internal, "homology_action: not symplectic");
    return m;
}

inline bool is_hyperelliptic_action(const PolygonSurface& s, const HomologyBasis& hb,
                                    const RotationMap& r) {
    if (r.order != 2) return false;
    IntMat m = homology_action(s, hb, r);
    IntMat minus = IntMat::identity(2 * hb.genus);
    for (auto& x : minus.a) x = -x;
    return m == minus;
}

}  // namespace mcgl
