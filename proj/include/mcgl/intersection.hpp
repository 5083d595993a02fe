#pragma once

#include <algorithm>
#include <array>
#include <optional>
#include <vector>

#include "mcgl/overlay.hpp"

namespace mcgl {

/// Transverse crossings of the two diagrams as drawn (no isotopy applied).
inline int diagram_crossings(const CurveDiagram& a, const CurveDiagram& b) {
    int count = 0;
    for (int i = 0; i < a.chords(); ++i)
        for (int j = 0; j < b.chords(); ++j)
            if (chords_cross(a.chord_a(i), a.chord_b(i), b.chord_a(j), b.chord_b(j))) ++count;
    return count;
}

/// Crossing sign: +1 when the directed second chord crosses the first from
/// left to right under the counterclockwise orientation of the polygon,
/// i.e. when its head lies in the ccw arc from the first chord's tail to its
/// head.
inline int crossing_sign(const BoundaryPoint& a1, const BoundaryPoint& a2,
                         const BoundaryPoint& b2) {
    return in_open_arc(boundary_pos(b2), boundary_pos(a1), boundary_pos(a2)) ? 1 : -1;
}

namespace detail {

/// Nudges marks of `movable` off the marks of the `fixed` curves.  A small
/// nudge along the sides is an isotopy, so isotopy-invariant quantities do
/// not depend on the directions chosen.  With `require_disjoint` the result
/// must also have zero crossings against every fixed curve (callers use this
/// when the curves are honestly disjoint and only tangent in the diagram);
/// directions are then searched.
inline CurveDiagram separate_marks(const PolygonSurface& s,
                                   const std::vector<const CurveDiagram*>& fixed,
                                   const CurveDiagram& movable, bool require_disjoint) {
    auto collides = [&](const CurveDiagram& cand) {
        for (const auto& p : cand.points)
            for (const auto* f : fixed)
                for (const auto& q : f->points)
                    if (p == q) return true;
        return false;
    };
    auto crossings_with_fixed = [&](const CurveDiagram& cand) {
        int total = 0;
        for (const auto* f : fixed) total += diagram_crossings(*f, cand);
        return total;
    };
    auto acceptable = [&](const CurveDiagram& cand) {
        return !collides(cand) && (!require_disjoint || crossings_with_fixed(cand) == 0);
    };
    if (acceptable(movable)) return movable;

    std::vector<const CurveDiagram*> all = fixed;
    all.push_back(&movable);
    Rational eps = min_position_gap(s, all) / Rational(4);

    // uniform push-off first; handles full coincidence (parallel copies)
    {
        CurveDiagram cand = parallel_copy(s, movable, eps);
        if (acceptable(cand)) return cand;
    }

    // per-mark directions for the colliding gluing steps
    const int n = static_cast<int>(movable.points.size());
    std::vector<int> bad_steps;  // odd point index per colliding gluing step
    for (int j = 1; j <= n; j += 2) {
        int odd = j % n, even = (j + 1) % n;
        bool hit = false;
        for (const auto* f : fixed)
            for (const auto& q : f->points)
                if (movable.points[odd] == q || movable.points[even] == q) hit = true;
        if (hit) bad_steps.push_back(odd);
    }
    check(!bad_steps.empty() && bad_steps.size() <= 12, errc::invalid_input,
          "separate_marks: unresolvable mark coincidences");
    for (unsigned mask = 0; mask < (1u << bad_steps.size()); ++mask) {
        std::vector<BoundaryPoint> pts = movable.points;
        for (std::size_t t = 0; t < bad_steps.size(); ++t) {
            int odd = bad_steps[t], even = (odd + 1) % n;
            Rational d = (mask >> t) & 1 ? -eps : eps;
            pts[odd].t = pts[odd].t + d;
            pts[even].t = pts[even].t - d;
        }
        CurveDiagram cand = make_curve(s, std::move(pts));
        if (is_simple(cand) && acceptable(cand)) return cand;
    }
    fail(errc::invalid_input, "separate_marks: no disjoint perturbation (curves not disjoint?)");
}

/// One side of a bigon: the walk between its two crossings along one curve.
struct Run {
    int curve = -1;
    int start_crossing = -1, end_crossing = -1;  // in walk order
    int start_chord = -1, end_chord = -1;
    std::vector<std::pair<int, int>> passages;  // (exit point, enter point) per corridor
};

inline int glued_partner_index(int j, int n_points) {
    return j % 2 == 1 ? (j + 1) % n_points : (j + n_points - 1) % n_points;
}

inline std::array<Run, 2> bigon_runs(const Overlay& ov, int circle_id) {
    const auto& c = ov.circles()[circle_id];
    const int len = static_cast<int>(c.hes.size());
    int p1 = -1, p2 = -1;
    for (int i = 0; i < len; ++i) {
        if (c.head_crossing[i] < 0) continue;
        (p1 < 0 ? p1 : p2) = i;
    }
    check(p1 >= 0 && p2 >= 0, errc::internal, "bigon: expected two crossing visits");

    auto make_run = [&](int from, int to) {  // run = hes (from, to], begins after the crossing
        Run r;
        r.start_crossing = c.head_crossing[from];
        r.end_crossing = c.head_crossing[to];
        int first = (from + 1) % len;
        r.curve = c.curves[first];
        r.start_chord = ov.edge_of(c.hes[first]).chord;
        r.end_chord = ov.edge_of(c.hes[to]).chord;
        const auto& diag = ov.curve(r.curve);
        for (int i = first; i != to; i = (i + 1) % len) {
            int v = c.head_vertex[i];
            check(ov.vertex_is_mark(v), errc::internal, "bigon: unexpected vertex inside run");
            auto [k, j] = ov.mark_of(v);
            check(k == r.curve, errc::internal, "bigon: run switched curves");
            r.passages.push_back(
                {j, glued_partner_index(j, static_cast<int>(diag.points.size()))});
        }
        return r;
    };
    return {make_run(p1, p2), make_run(p2, p1)};
}

/// Replaces the run of `mod_in` between the two bigon crossings by a
/// push-off of the other curve's run, at distance `delta` on the side away
/// from the bigon.  The two bigon crossings disappear and no new crossings
/// appear, so the overlay crossing count drops by at least two.
inline CurveDiagram remove_bigon(const PolygonSurface& s, const Overlay& ov, Run mod_run,
                                 const Run& par_run, const CurveDiagram& mod_in,
                                 Rational delta) {
    CurveDiagram mod = mod_in;
    const int np = static_cast<int>(mod.points.size());
    const auto& par_diag = ov.curve(par_run.curve);

    int u, v;                      // retained anchor points of the modified curve
    int cross_u;                   // bigon crossing adjacent to u
    bool split_chord = mod_run.passages.empty();
    if (split_chord) {
        // the run stays inside the polygon and splits a single chord of mod
        check(mod_run.start_chord == mod_run.end_chord, errc::internal,
              "bigon: markless run across chords");
        check(!par_run.passages.empty(), errc::internal,
              "bigon: two straight chords cannot bound a bigon");
        u = 2 * mod_run.start_chord;
        v = 2 * mod_run.start_chord + 1;
        cross_u = -1;  // the bigon crossing nearest the chord tail
        for (int e : ov.chord_paths()[mod_run.curve][mod_run.start_chord]) {
            int h = ov.edge_of(2 * e).head;
            (void)h;
            int head = ov.edge_of(2 * e).head;
            if (ov.vertex_is_crossing(head)) {
                int q = ov.vertex_crossing_id(head);
                if (q == mod_run.start_crossing || q == mod_run.end_crossing) {
                    cross_u = q;
                    break;
                }
            }
        }
        check(cross_u >= 0, errc::internal, "bigon: crossings not on split chord");
    } else {
        // normalize so the run travels forward along mod: the first visited
        // mark is then an odd (exit) point
        if (mod_run.passages.front().first % 2 == 0) {
            mod = reverse_curve(mod);
            for (auto& [e, n] : mod_run.passages) {
                e = np - 1 - e;
                n = np - 1 - n;
            }
        }
        int j0 = mod_run.passages.front().first;
        int jl = mod_run.passages.back().second;
        check(j0 % 2 == 1 && jl % 2 == 0, errc::internal, "bigon: run parity broken");
        // removed block = cyclic interval [j0 .. jl]
        int removed_count = static_cast<int>(mod_run.passages.size()) * 2;
        check((jl - j0 + 1 + np) % np == removed_count % np, errc::internal,
              "bigon: removed block not contiguous");
        check(removed_count < np, errc::internal, "bigon: surgery would erase the curve");
        u = (j0 + np - 1) % np;
        v = (jl + 1) % np;
        cross_u = mod_run.start_crossing;
    }

    // push-off of the parallel run, traversed from cross_u's end to the other
    bool against_walk = cross_u != par_run.start_crossing;
    std::vector<std::pair<int, int>> passages = par_run.passages;
    if (against_walk) {
        std::reverse(passages.begin(), passages.end());
        for (auto& pr : passages) std::swap(pr.first, pr.second);
    }
    // with the walk: bigon on the left of travel, push right (exit -d, enter +d);
    // against the walk: push left (exit +d, enter -d)
    Rational d_exit = against_walk ? delta : -delta;
    std::vector<BoundaryPoint> push;
    for (auto [e, n] : passages) {
        BoundaryPoint pe = par_diag.points[e], pn = par_diag.points[n];
        push.push_back({pe.side, pe.t + d_exit});
        push.push_back({pn.side, pn.t - d_exit});
    }

    std::vector<BoundaryPoint> out;
    if (split_chord) {
        for (int j = 0; j < np; ++j) {
            out.push_back(mod.points[j]);
            if (j == u)
                for (const auto& p : push) out.push_back(p);
        }
    } else {
        for (int j = (v + 1) % np;; j = (j + 1) % np) {  // retained arc after v up to u
            out.push_back(mod.points[j]);
            if (j == u) break;
        }
        for (const auto& p : push) out.push_back(p);
        out.push_back(mod.points[v]);
    }
    CurveDiagram result = make_curve(s, std::move(out));
    check(is_simple(result), errc::internal, "bigon: surgery produced a non-simple curve");
    return result;
}

}  // namespace detail

struct MinimalPosition {
    CurveDiagram a, b;
    int initial_crossings = 0;
    int crossings = 0;
    int bigons_removed = 0;
};

/// Puts the pair in minimal position: counts transverse crossings of the
/// overlay, then removes innermost bigons until none remain.  Each removal
/// strictly decreases the crossing count, so the loop terminates.
inline MinimalPosition minimal_position(const PolygonSurface& s, const CurveDiagram& a0,
                                        const CurveDiagram& b0) {
    check(is_simple(a0) && is_simple(b0), errc::invalid_input,
          "minimal_position: curves must be simple");
    MinimalPosition mp;
    mp.a = a0;
    mp.b = detail::separate_marks(s, {&a0}, b0, false);
    bool first = true;
    while (true) {
        Overlay ov(s, {&mp.a, &mp.b});
        int x = ov.crossing_count();
        if (first) {
            mp.initial_crossings = x;
            first = false;
        } else {
            check(x < mp.crossings, errc::internal,
                  "minimal_position: bigon removal failed to reduce crossings");
        }
        mp.crossings = x;
        auto big = ov.first_bigon_circle();
        if (!big) return mp;
        auto runs = detail::bigon_runs(ov, *big);
        const detail::Run& run_b = runs[0].curve == 1 ? runs[0] : runs[1];
        const detail::Run& run_a = runs[0].curve == 1 ? runs[1] : runs[0];
        check(run_a.curve == 0 && run_b.curve == 1, errc::internal, "bigon: bad run curves");
        Rational delta = min_position_gap(s, {&mp.a, &mp.b}) / Rational(4);
        bool b_degenerate =
            static_cast<int>(run_b.passages.size()) * 2 == static_cast<int>(mp.b.points.size());
        if (!b_degenerate)
            mp.b = detail::remove_bigon(s, ov, run_b, run_a, mp.b, delta);
        else
            mp.a = detail::remove_bigon(s, ov, run_a, run_b, mp.a, delta);
        mp.bigons_removed++;
        check(mp.bigons_removed * 2 <= mp.initial_crossings, errc::internal,
              "minimal_position: runaway bigon loop");
    }
}

/// Minimal transverse crossing count over isotopy: diagram crossings with
/// all bigons removed.
inline int geometric_intersection(const PolygonSurface& s, const CurveDiagram& a,
                                  const CurveDiagram& b) {
    return minimal_position(s, a, b).crossings;
}

/// Signed crossing count (+1 where the second curve crosses the first left
/// to right).  Isotopy-invariant without bigon removal; antisymmetric;
/// |algebraic| <= geometric.
inline int algebraic_intersection(const PolygonSurface& s, const CurveDiagram& a,
                                  const CurveDiagram& b) {
    CurveDiagram bb = detail::separate_marks(s, {&a}, b, false);
    int sum = 0;
    for (int i = 0; i < a.chords(); ++i)
        for (int j = 0; j < bb.chords(); ++j)
            if (chords_cross(a.chord_a(i), a.chord_b(i), bb.chord_a(j), bb.chord_b(j)))
                sum += crossing_sign(a.chord_a(i), a.chord_b(i), bb.chord_b(j));
    return sum;
}

}  // namespace mcgl
