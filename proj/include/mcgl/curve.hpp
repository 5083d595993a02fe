#pragma once

#include <algorithm>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "mcgl/polygon.hpp"
#include "mcgl/rational.hpp"

namespace mcgl {

/// Point on the polygon boundary: position t in (0,1) along a side, measured
/// counterclockwise.  Chord endpoints never sit on corners.
struct BoundaryPoint {
    int side = 0;
    Rational t;
};

inline bool operator==(const BoundaryPoint& a, const BoundaryPoint& b) {
    return a.side == b.side && a.t == b.t;
}
inline bool operator!=(const BoundaryPoint& a, const BoundaryPoint& b) { return !(a == b); }

/// Cyclic position on the boundary circle, side + t; total order is the
/// counterclockwise order starting at corner 0.
inline Rational boundary_pos(const BoundaryPoint& p) { return Rational(p.side) + p.t; }

inline bool pos_less(const BoundaryPoint& a, const BoundaryPoint& b) {
    return boundary_pos(a) < boundary_pos(b);
}

/// The orientation-reversing identification of a boundary point with its
/// partner: (side, t) -> (pairs(side), 1 - t).  An involution.
inline BoundaryPoint glue_point(const PolygonSurface& s, const BoundaryPoint& p) {
    return BoundaryPoint{s.partner(p.side), Rational(1) - p.t};
}

/// Simple closed curve as a chord diagram: a cyclic point sequence
/// p_0, ..., p_{2m-1} where (p_{2i}, p_{2i+1}) are chords drawn as straight
/// segments and glue(p_{2i+1}) = p_{2i+2} closes the curve through the edge
/// identifications.  Immutable by convention after construction.
struct CurveDiagram {
    std::vector<BoundaryPoint> points;

    int chords() const { return static_cast<int>(points.size()) / 2; }
    const BoundaryPoint& chord_a(int i) const { return points[2 * i]; }
    const BoundaryPoint& chord_b(int i) const { return points[2 * i + 1]; }
};

inline void validate_points(const PolygonSurface& s, const std::vector<BoundaryPoint>& pts) {
    check(!pts.empty() && pts.size() % 2 == 0, errc::invalid_input,
          "curve: need a positive even number of points");
    for (const auto& p : pts) {
        check(p.side >= 0 && p.side < s.n_sides(), errc::invalid_input,
              "curve: side index out of range");
        check(Rational(0) < p.t && p.t < Rational(1), errc::invalid_input,
              "curve: position must lie strictly inside a side");
    }
}

/// Builds a diagram and validates the closure invariant.
inline CurveDiagram make_curve(const PolygonSurface& s, std::vector<BoundaryPoint> pts) {
    validate_points(s, pts);
    const int n = static_cast<int>(pts.size());
    for (int i = 1; i < n; i += 2) {
        check(glue_point(s, pts[i]) == pts[(i + 1) % n], errc::invalid_input,
              "curve: gluing step " + std::to_string(i / 2) + " does not close");
    }
    return CurveDiagram{std::move(pts)};
}

/// True when exactly one of the chord's endpoints lies in the open
/// counterclockwise arc (a, b); straight chords in convex position cross iff
/// their endpoints interleave.
inline bool in_open_arc(const Rational& x, const Rational& a, const Rational& b) {
    if (a < b) return a < x && x < b;
    return x > a || x < b;  // arc wraps through position 0
}

inline bool chords_cross(const BoundaryPoint& a1, const BoundaryPoint& a2,
                         const BoundaryPoint& b1, const BoundaryPoint& b2) {
    Rational a = boundary_pos(a1), b = boundary_pos(a2);
    Rational c = boundary_pos(b1), d = boundary_pos(b2);
    return in_open_arc(c, a, b) != in_open_arc(d, a, b);
}

struct SimplicityReport {
    bool simple = true;
    // offending chord pair, or a chord paired with itself when two points
    // coincide
    std::optional<std::pair<int, int>> offending;
};

inline SimplicityReport simplicity(const CurveDiagram& c) {
    const int n = static_cast<int>(c.points.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (c.points[i] == c.points[j]) return {false, std::make_pair(i / 2, j / 2)};
    for (int i = 0; i < c.chords(); ++i)
        for (int j = i + 1; j < c.chords(); ++j)
            if (chords_cross(c.chord_a(i), c.chord_b(i), c.chord_a(j), c.chord_b(j)))
                return {false, std::make_pair(i, j)};
    return {};
}

inline bool is_simple(const CurveDiagram& c) { return simplicity(c).simple; }

/// Reversal of the traversal direction; the reversed point list is again a
/// valid diagram of the same curve.
inline CurveDiagram reverse_curve(const CurveDiagram& c) {
    CurveDiagram r = c;
    std::reverse(r.points.begin(), r.points.end());
    return r;
}

/// Smallest positive gap between the given boundary positions and the
/// corners; bounds how far marks may be nudged without changing any strict
/// order.  Positions are taken per side, corners included at t = 0, 1.
inline Rational min_position_gap(const PolygonSurface& s,
                                 const std::vector<const CurveDiagram*>& curves) {
    std::vector<std::vector<Rational>> per_side(s.n_sides());
    for (const auto* c : curves)
        for (const auto& p : c->points) per_side[p.side].push_back(p.t);
    Rational best(1);
    for (auto& ts : per_side) {
        ts.push_back(Rational(0));
        ts.push_back(Rational(1));
        std::sort(ts.begin(), ts.end());
        for (std::size_t i = 0; i + 1 < ts.size(); ++i) {
            Rational gap = ts[i + 1] - ts[i];
            if (Rational(0) < gap && gap < best) best = gap;
        }
    }
    return best;
}

/// Parallel push-off: every mark moves by eps along its side, +eps at
/// odd-index points and -eps at their glued partners, which respects the
/// identifications and yields a disjoint isotopic copy.
inline CurveDiagram parallel_copy(const PolygonSurface& s, const CurveDiagram& c,
                                  std::optional<Rational> eps_opt = std::nullopt) {
    Rational eps = eps_opt ? *eps_opt : min_position_gap(s, {&c}) / Rational(4);
    check(Rational(0) < eps, errc::invalid_input, "parallel_copy: eps must be positive");
    std::vector<BoundaryPoint> pts = c.points;
    const int n = static_cast<int>(pts.size());
    for (int i = 0; i < n; ++i) {
        if (i % 2 == 1)
            pts[i].t = pts[i].t + eps;
        else
            pts[i].t = pts[i].t - eps;
    }
    return make_curve(s, std::move(pts));
}

// --- text format: `curve <m>` then 2m lines `point <side> <num>/<den>` ---

inline Rational parse_rational_token(const std::string& tok) {
    auto slash = tok.find('/');
    try {
        if (slash == std::string::npos) return Rational(std::stoll(tok));
        return Rational(std::stoll(tok.substr(0, slash)), std::stoll(tok.substr(slash + 1)));
    } catch (const std::exception&) {
        fail(errc::parse_error, "curve: bad rational '" + tok + "'");
    }
}

inline CurveDiagram parse_curve(const PolygonSurface& s, std::istream& in) {
    std::string line;
    int m = -1;
    std::vector<BoundaryPoint> pts;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "curve") {
            check(m < 0, errc::parse_error, "curve: repeated curve line");
            check(static_cast<bool>(ls >> m) && m >= 1, errc::parse_error,
                  "curve: chord count must be >= 1");
        } else if (tok == "point") {
            check(m > 0, errc::parse_error, "curve: point before curve line");
            int side;
            std::string rat;
            check(static_cast<bool>(ls >> side >> rat), errc::parse_error,
                  "curve: point needs a side and a position");
            pts.push_back(BoundaryPoint{side, parse_rational_token(rat)});
        } else {
            fail(errc::parse_error, "curve: unknown directive '" + tok + "'");
        }
    }
    check(m > 0, errc::parse_error, "curve: missing curve line");
    check(static_cast<int>(pts.size()) == 2 * m, errc::parse_error,
          "curve: expected " + std::to_string(2 * m) + " points");
    return make_curve(s, std::move(pts));  // closure validated on load, not inferred
}

inline void format_curve(const CurveDiagram& c, std::ostream& out) {
    out << "curve " << c.chords() << "\n";
    for (const auto& p : c.points)
        out << "point " << p.side << " " << p.t.num << "/" << p.t.den << "\n";
}

}  // namespace mcgl
