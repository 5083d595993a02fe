#pragma once

#include <algorithm>
#include <set>
#include <vector>

#include "mcgl/homology.hpp"

namespace mcgl {

/// (genus, boundary circle count) of one component of a cut surface.
struct ComponentProfile {
    int genus = 0;
    int boundary = 0;
};
inline bool operator==(const ComponentProfile& a, const ComponentProfile& b) {
    return a.genus == b.genus && a.boundary == b.boundary;
}
inline bool operator<(const ComponentProfile& a, const ComponentProfile& b) {
    return a.genus != b.genus ? a.genus < b.genus : a.boundary < b.boundary;
}

struct CutResult {
    std::vector<ComponentProfile> profiles;          // sorted
    std::vector<std::set<int>> touching;             // curves whose copies bound component i
    std::vector<std::vector<std::set<int>>> circle_curves;  // per component, per circle
};

/// Cuts the surface along pairwise disjoint curves and reports each
/// component's genus and boundary count via the region Euler
/// characteristics.  Inputs whose diagrams merely share marks are nudged
/// apart; inputs with genuine crossings are rejected.
inline CutResult cut_along(const PolygonSurface& s, std::vector<CurveDiagram> curves) {
    for (const auto& c : curves)
        check(is_simple(c), errc::invalid_input, "cut_along: curves must be simple");
    for (std::size_t k = 1; k < curves.size(); ++k) {
        std::vector<const CurveDiagram*> fixed;
        for (std::size_t i = 0; i < k; ++i) fixed.push_back(&curves[i]);
        curves[k] = detail::separate_marks(s, fixed, curves[k], true);
    }
    for (std::size_t i = 0; i < curves.size(); ++i)
        for (std::size_t j = i + 1; j < curves.size(); ++j)
            check(diagram_crossings(curves[i], curves[j]) == 0, errc::invalid_input,
                  "cut_along: curves cross");

    std::vector<const CurveDiagram*> ptrs;
    for (const auto& c : curves) ptrs.push_back(&c);
    Overlay ov(s, ptrs);
    check(ov.crossing_count() == 0, errc::internal, "cut_along: unexpected crossings");

    // conservation: cutting along circles preserves the Euler characteristic
    int total = 0;
    for (const auto& r : ov.regions()) total += r.chi;
    check(total == s.euler_char, errc::internal, "cut_along: Euler characteristic lost");

    struct Item {
        ComponentProfile prof;
        std::set<int> touch;
        std::vector<std::set<int>> circles;
    };
    std::vector<Item> items;
    for (const auto& r : ov.regions()) {
        Item it;
        it.prof = {r.genus(), r.boundary_count()};
        for (int ci : r.circles) {
            std::set<int> on;
            for (int cu : ov.circles()[ci].curves) on.insert(cu);
            it.touch.insert(on.begin(), on.end());
            it.circles.push_back(std::move(on));
        }
        items.push_back(std::move(it));
    }
    std::sort(items.begin(), items.end(),
              [](const Item& a, const Item& b) { return a.prof < b.prof; });
    CutResult out;
    for (auto& it : items) {
        out.profiles.push_back(it.prof);
        out.touching.push_back(std::move(it.touch));
        out.circle_curves.push_back(std::move(it.circles));
    }
    return out;
}

/// A simple closed curve is separating iff it is null-homologous; the
/// homology test is cross-checked against cut connectivity.
inline bool is_nonseparating(const PolygonSurface& s, const HomologyBasis& hb,
                             const CurveDiagram& c) {
    bool hom = !is_zero(homology_class(s, hb, c));
    bool cut = cut_along(s, {c}).profiles.size() == 1;
    check(hom == cut, errc::internal,
          "is_nonseparating: homology and cut connectivity disagree");
    return hom;
}

/// True iff some complement component of the pair is an annulus bounded by
/// one copy of each curve; the isotopy-invariant distinctness certificate.
/// Requires the curves disjoint (zero crossings after minimization).
inline bool is_parallel(const PolygonSurface& s, const CurveDiagram& a,
                        const CurveDiagram& b) {
    MinimalPosition mp = minimal_position(s, a, b);
    check(mp.crossings == 0, errc::invalid_input, "is_parallel: curves are not disjoint");
    CutResult cut = cut_along(s, {mp.a, mp.b});
    for (std::size_t i = 0; i < cut.profiles.size(); ++i) {
        if (!(cut.profiles[i] == ComponentProfile{0, 2})) continue;
        if (cut.circle_curves[i].size() == 2 && cut.circle_curves[i][0].size() == 1 &&
            cut.circle_curves[i][1].size() == 1 &&
            cut.circle_curves[i][0] != cut.circle_curves[i][1])
            return true;
    }
    return false;
}

/// Bounding pair: disjoint, both nonseparating, homologous up to sign, and
/// not isotopic.  Decided homologically and re-decided through the cut
/// profile (cutting along both disconnects into exactly two pieces); the two
/// characterizations must agree.
inline bool is_bounding_pair(const PolygonSurface& s, const HomologyBasis& hb,
                             const CurveDiagram& a, const CurveDiagram& b) {
    MinimalPosition mp = minimal_position(s, a, b);
    if (mp.crossings != 0) return false;
    if (is_parallel(s, mp.a, mp.b)) return false;  // isotopic copies, reported via is_parallel

    bool nonsep_a = is_nonseparating(s, hb, mp.a);
    bool nonsep_b = is_nonseparating(s, hb, mp.b);
    IntVec ca = homology_class(s, hb, mp.a);
    IntVec cb = homology_class(s, hb, mp.b);
    bool hom_says = nonsep_a && nonsep_b && (ca == cb || ca == -cb);

    bool cut_says = nonsep_a && nonsep_b && cut_along(s, {mp.a, mp.b}).profiles.size() == 2;

    check(hom_says == cut_says, errc::internal,
          "is_bounding_pair: homological and cut characterizations disagree");
    return hom_says;
}

}  // namespace mcgl
