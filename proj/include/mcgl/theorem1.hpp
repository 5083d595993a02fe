#pragma once

#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mcgl/cut.hpp"
#include "mcgl/rotation.hpp"

namespace mcgl {

/// The span condition (4g+2)/d + 3 <= (4g+2)/2: the rotated copies of the
/// standard curve fit between the arcs it occupies, so some power moves it
/// off itself.
inline bool inequality_holds(int g, int d) {
    check(g >= 3, errc::invalid_input, "inequality: genus must be >= 3");
    check(d >= 2, errc::invalid_input, "inequality: order must be >= 2");
    int n = 4 * g + 2;
    check(n % d == 0, errc::invalid_input,
          "inequality: " + std::to_string(d) + " does not divide " + std::to_string(n));
    return n / d + 3 <= n / 2;
}

/// The curve drawn on the (4g+2)-gon with opposite sides identified: one arc
/// from the left half of side 0 to the right half of side 2, continuing on
/// side 2g+3 and closing up around the side between vertices 2g+2 and 2g+3.
/// It occupies only the boundary arcs [vertex 0, vertex 3] and
/// [vertex 2g+1, vertex 2g+4].
inline CurveDiagram standard_witness_curve(const PolygonSurface& s) {
    int g = s.genus;
    check(s.n_sides() == 4 * g + 2, errc::invalid_input,
          "standard_witness_curve: not a (4g+2)-gon");
    return make_curve(s, {{0, {1, 4}},
                          {2, {3, 4}},
                          {2 * g + 3, {1, 4}},
                          {2 * g + 1, {3, 4}}});
}

struct Certificate {
    bool required = true;
    bool pass = false;
    std::string evidence;
};

struct WitnessCertificates {
    Certificate intersection_zero, not_parallel, nonseparating, not_bounding_pair;

    bool accepted() const {
        auto ok = [](const Certificate& c) { return c.pass || !c.required; };
        return ok(intersection_zero) && ok(not_parallel) && ok(nonseparating) &&
               ok(not_bounding_pair);
    }
};

/// A certified instance: the curve c and power k with i(c, r^k(c)) = 0,
/// the curves distinct (no annulus between them) and nonseparating, and —
/// away from the hyperelliptic involution — not a bounding pair.
struct TheoremWitness {
    CurveDiagram curve;
    int k = 0;
    WitnessCertificates certs;
};

namespace detail {
inline std::string vec_str(const IntVec& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}
}  // namespace detail

/// Recomputes all four certificates from scratch.  The bounding-pair
/// certificate is always evaluated but only required when the rotation is
/// not the hyperelliptic involution (for the hyperelliptic involution every
/// disjoint non-isotopic image pair is homologous, hence a bounding pair).
inline WitnessCertificates verify_witness(const PolygonSurface& s, const HomologyBasis& hb,
                                          const RotationMap& r, const CurveDiagram& curve,
                                          int k) {
    check(s.genus >= 1, errc::sphere_input, "verify_witness: genus-0 surface");
    check(k >= 1, errc::invalid_input, "verify_witness: power must be >= 1");
    check(is_simple(curve), errc::invalid_input, "verify_witness: curve not simple");

    WitnessCertificates wc;
    bool waive_bp = is_hyperelliptic_action(s, hb, r);
    wc.not_bounding_pair.required = !waive_bp;

    CurveDiagram image = apply(s, power(s, r, k), curve);
    MinimalPosition mp = minimal_position(s, curve, image);

    wc.intersection_zero.pass = mp.crossings == 0;
    wc.intersection_zero.evidence =
        "i=" + std::to_string(mp.crossings) + " (diagram " +
        std::to_string(mp.initial_crossings) + ", bigons " +
        std::to_string(mp.bigons_removed) + ")";

    if (mp.crossings == 0) {
        bool par = is_parallel(s, mp.a, mp.b);
        wc.not_parallel.pass = !par;
        wc.not_parallel.evidence = par ? "annulus between the curves" : "no annulus";
    } else {
        wc.not_parallel.pass = true;
        wc.not_parallel.evidence = "curves intersect";
    }

    bool na = is_nonseparating(s, hb, curve);
    bool nb = is_nonseparating(s, hb, image);
    wc.nonseparating.pass = na && nb;
    wc.nonseparating.evidence = "class " + detail::vec_str(homology_class(s, hb, curve)) +
                                ", image class " +
                                detail::vec_str(homology_class(s, hb, image));

    if (mp.crossings == 0) {
        bool bp = is_bounding_pair(s, hb, mp.a, mp.b);
        wc.not_bounding_pair.pass = !bp;
        wc.not_bounding_pair.evidence = bp ? "pair is bounding" : "pair is not bounding";
        if (waive_bp) wc.not_bounding_pair.evidence += " (not required: hyperelliptic)";
    } else {
        wc.not_bounding_pair.pass = true;
        wc.not_bounding_pair.evidence = "curves intersect";
    }
    return wc;
}

/// Standard construction on the (4g+2)-gon for a rotation of order d >= 3:
/// transcribes the curve, then takes the minimal power passing every
/// certificate.  Existence is guaranteed by the span inequality; failure
/// signals a mistranscription.
inline TheoremWitness construct_standard(const PolygonSurface& s, const HomologyBasis& hb,
                                         int d) {
    int g = s.genus;
    check(d >= 3, errc::invalid_input, "construct_standard: order must be >= 3");
    check(inequality_holds(g, d), errc::invalid_input,
          "construct_standard: span inequality fails for g=" + std::to_string(g) +
              ", d=" + std::to_string(d));
    RotationMap r = make_rotation(s, s.n_sides() / d);
    CurveDiagram c = standard_witness_curve(s);
    for (int k = 1; k < d; ++k) {
        WitnessCertificates wc = verify_witness(s, hb, r, c, k);
        if (wc.accepted()) return {c, k, wc};
    }
    fail(errc::internal, "construct_standard: no certified power (mistranscription)");
}

struct HalfDecomposition {
    std::vector<int> first, second;  // full sides per half
    bool in_first(int side) const {
        return std::find(first.begin(), first.end(), side) != first.end();
    }
    bool in_second(int side) const {
        return std::find(second.begin(), second.end(), side) != second.end();
    }
};

/// Halves of the polygon boundary: separated by the axis through vertices 0
/// and n/2 when n/2 is even, through the midpoints of sides 0 and n/2
/// otherwise (those two sides then belong to no half).
inline HalfDecomposition half_decomposition(const PolygonSurface& s) {
    const int n = s.n_sides();
    HalfDecomposition h;
    if ((n / 2) % 2 == 0) {
        for (int i = 0; i < n / 2; ++i) h.first.push_back(i);
        for (int i = n / 2; i < n; ++i) h.second.push_back(i);
    } else {
        for (int i = 1; i < n / 2; ++i) h.first.push_back(i);
        for (int i = n / 2 + 1; i < n; ++i) h.second.push_back(i);
    }
    return h;
}

struct GeneralConstruction {
    TheoremWitness witness;
    int edge1 = -1, edge2 = -1;  // the minimal same-half pair used
    HalfDecomposition halves;
};

/// Construction for polygons with a pair of sides glued within one half: the
/// single chord through a minimal such pair, moved to the other half by a
/// power of the rotation.  Rejects adjacent-only inputs (the quotient would
/// have had a cone point).
inline GeneralConstruction construct_general(const PolygonSurface& s, const HomologyBasis& hb,
                                             const RotationMap& r) {
    check(s.genus >= 1, errc::sphere_input, "construct_general: genus-0 surface");
    check(r.shift != 0, errc::invalid_input, "construct_general: identity rotation");

    HalfDecomposition halves = half_decomposition(s);
    std::vector<std::pair<int, int>> same_half;
    for (int i = 0; i < s.n_sides(); ++i) {
        int j = s.partner(i);
        if (i > j) continue;
        if ((halves.in_first(i) && halves.in_first(j)) ||
            (halves.in_second(i) && halves.in_second(j)))
            same_half.push_back({i, j});
    }
    check(!same_half.empty(), errc::no_same_half_pair,
          "construct_general: no pair of sides glued within one half");

    auto minimal = [&](std::pair<int, int> p) {
        for (int k = p.first + 1; k < p.second; ++k) {
            int l = s.partner(k);
            if (k < l && l < p.second) return false;
        }
        return true;
    };
    std::optional<std::pair<int, int>> chosen;
    for (const auto& p : same_half)
        if (minimal(p) && p.second - p.first > 1) {
            chosen = p;
            break;
        }
    if (!chosen)
        fail(errc::adjacent_only,
             "construct_general: every minimal same-half pair is adjacent");
    auto [e1, e2] = *chosen;

    CurveDiagram c = make_curve(s, {{e1, {1, 2}}, {e2, {1, 2}}});
    check(is_nonseparating(s, hb, c), errc::internal,
          "construct_general: minimal-pair curve is separating");

    bool pair_in_first = halves.in_first(e1);
    for (int k = 1; k < r.order; ++k) {
        CurveDiagram image = apply(s, power(s, r, k), c);
        bool other_half = true;
        for (const auto& p : image.points)
            other_half &= pair_in_first ? halves.in_second(p.side) : halves.in_first(p.side);
        if (!other_half) continue;
        WitnessCertificates wc = verify_witness(s, hb, r, c, k);
        if (wc.accepted()) return {TheoremWitness{c, k, wc}, e1, e2, halves};
    }
    fail(errc::invalid_input,
         "construct_general: no certified power with image in the opposite half");
}

/// Independent search: enumerates simple closed chord diagrams with at most
/// max_chords chords and endpoints on the grid t in {1/(q+1), ..., q/(q+1)},
/// in (chord count, position sequence, k) lexicographic order, and returns
/// the first one passing all certificates.  Absence is a value.
inline std::optional<TheoremWitness> brute_force_search(const PolygonSurface& s,
                                                        const HomologyBasis& hb,
                                                        const RotationMap& r, int max_chords,
                                                        int grid) {
    check(s.genus >= 1, errc::sphere_input, "brute_force_search: genus-0 surface");
    check(max_chords >= 1, errc::invalid_input, "brute_force_search: max_chords must be >= 1");
    check(grid >= 1, errc::invalid_input, "brute_force_search: grid must be >= 1");
    if (r.order < 2) return std::nullopt;  // k range empty

    const int n = s.n_sides();
    auto grid_point = [&](int idx) {
        return BoundaryPoint{idx / grid, Rational(idx % grid + 1, grid + 1)};
    };
    auto grid_index = [&](const BoundaryPoint& p) {
        // grid positions are t = m/(q+1); closure keeps points on the grid
        if (p.t.den != grid + 1) return -1;
        return p.side * grid + static_cast<int>(p.t.num) - 1;
    };
    const int total = n * grid;

    std::vector<BoundaryPoint> seq;
    std::vector<bool> used(total, false);
    std::optional<TheoremWitness> found;

    auto crosses_existing = [&](const BoundaryPoint& a, const BoundaryPoint& b) {
        for (std::size_t i = 0; i + 1 < seq.size(); i += 2)
            if (chords_cross(seq[i], seq[i + 1], a, b)) return true;
        return false;
    };

    auto certify = [&](const CurveDiagram& c) -> std::optional<TheoremWitness> {
        for (int k = 1; k < r.order; ++k) {
            WitnessCertificates wc = verify_witness(s, hb, r, c, k);
            if (wc.accepted()) return TheoremWitness{c, k, wc};
        }
        return std::nullopt;
    };

    // exact chord count per pass keeps the order (chords, positions, k)
    for (int target = 1; target <= max_chords && !found; ++target) {
        std::function<bool(int)> extend = [&](int p0) -> bool {
            const BoundaryPoint chord_start = seq.back();
            for (int x = p0 + 1; x < total; ++x) {
                if (used[x]) continue;
                BoundaryPoint px = grid_point(x);
                if (crosses_existing(chord_start, px)) continue;
                BoundaryPoint pn = glue_point(s, px);
                int ni = grid_index(pn);
                check(ni >= 0, errc::internal, "brute force: gluing left the grid");
                int chords_done = static_cast<int>(seq.size() + 1) / 2;
                if (ni == p0) {
                    if (chords_done != target) continue;  // shorter curves already tried
                    seq.push_back(px);
                    CurveDiagram cand{seq};
                    if (is_simple(cand)) {
                        found = certify(make_curve(s, seq));
                        if (found) return true;
                    }
                    seq.pop_back();
                    continue;
                }
                if (ni < p0 || used[ni] || chords_done == target) continue;
                seq.push_back(px);
                seq.push_back(pn);
                used[x] = used[ni] = true;
                if (extend(p0)) return true;
                used[x] = used[ni] = false;
                seq.pop_back();
                seq.pop_back();
            }
            return false;
        };
        for (int p0 = 0; p0 < total && !found; ++p0) {
            seq = {grid_point(p0)};
            std::fill(used.begin(), used.end(), false);
            used[p0] = true;
            extend(p0);
        }
    }
    return found;
}

}  // namespace mcgl
