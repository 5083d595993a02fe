#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <vector>

#include "mcgl/curve.hpp"

namespace mcgl {

/// Combinatorial overlay of one or more chord diagrams on a glued polygon.
///
/// The planar arrangement of the chords inside the polygon is built purely
/// from the cyclic order of endpoints (chords are straight, so crossings are
/// exactly the endpoint interleavings, and along a chord the crossings are
/// ordered by the positions of the crossing chords' endpoints).  Faces are
/// then merged across the side identifications to obtain the complement
/// regions of the curves in the surface, each with its Euler characteristic
/// and its boundary circles traced as walks along curve half-edges.
///
/// Crossings are supported only between two curve systems (curve 0 vs curve
/// 1); chords of one curve never cross each other for simple diagrams, and
/// every caller that overlays more than two curves requires disjointness.
class Overlay {
  public:
    struct Crossing {
        int chord_a = -1;  // chord index in curve a_index
        int chord_b = -1;
        int a_index = 0, b_index = 1;
    };

    struct Edge {
        int tail = -1, head = -1;  // planar vertex ids
        bool is_chord = false;
        int curve = -1, chord = -1;  // chord edges
        int side = -1;               // boundary edges
    };

    struct Region {
        std::vector<int> faces;
        int corner_classes = 0;
        int spine_edges = 0;
        int chi = 0;  // of the compactified region
        std::vector<int> circles;
        int boundary_count() const { return static_cast<int>(circles.size()); }
        int genus() const { return (2 - chi - boundary_count()) / 2; }
    };

    /// Closed walk along curve half-edges bounding one region.
    struct Circle {
        int region = -1;
        std::vector<int> hes;               // chord half-edges in walk order
        std::vector<int> head_vertex;       // head of each half-edge
        std::vector<int> head_crossing;     // crossing id at that head, or -1
        int crossing_visits = 0;
        std::vector<int> curves;            // curve of each half-edge
    };

    Overlay(const PolygonSurface& s, std::vector<const CurveDiagram*> curves)
        : surface_(&s), curves_(std::move(curves)) {
        build();
    }

    const PolygonSurface& surface() const { return *surface_; }
    int curve_count() const { return static_cast<int>(curves_.size()); }
    const CurveDiagram& curve(int k) const { return *curves_[k]; }

    int crossing_count() const { return static_cast<int>(crossings_.size()); }
    const std::vector<Crossing>& crossings() const { return crossings_; }
    const std::vector<Region>& regions() const { return regions_; }
    const std::vector<Circle>& circles() const { return circles_; }

    int twin(int he) const { return he ^ 1; }
    const Edge& edge_of(int he) const { return edges_[he / 2]; }
    int head_of(int he) const { return he % 2 == 0 ? edges_[he / 2].head : edges_[he / 2].tail; }
    int tail_of(int he) const { return head_of(twin(he)); }

    bool vertex_is_crossing(int v) const { return v >= crossing_vertex_base_; }
    int vertex_crossing_id(int v) const { return v - crossing_vertex_base_; }
    bool vertex_is_mark(int v) const {
        return v >= n_corners_ && v < crossing_vertex_base_;
    }
    /// curve and point index of a mark vertex
    std::pair<int, int> mark_of(int v) const {
        int m = v - n_corners_;
        return {mark_curve_[m], mark_point_[m]};
    }

    /// A bigon: a disk region whose boundary circle meets exactly two
    /// distinct crossings, one arc on each curve.  Removable by an isotopy
    /// that cancels both crossings.
    std::optional<int> first_bigon_circle() const {
        for (std::size_t ci = 0; ci < circles_.size(); ++ci) {
            const Circle& c = circles_[ci];
            const Region& r = regions_[c.region];
            if (r.chi != 1 || r.boundary_count() != 1) continue;
            if (c.crossing_visits != 2) continue;
            std::vector<int> xs;
            for (int x : c.head_crossing)
                if (x >= 0) xs.push_back(x);
            if (xs.size() == 2 && xs[0] != xs[1]) return static_cast<int>(ci);
        }
        return std::nullopt;
    }

  private:
    const PolygonSurface* surface_;
    std::vector<const CurveDiagram*> curves_;

    int n_corners_ = 0;
    int crossing_vertex_base_ = 0;
    std::vector<int> mark_curve_, mark_point_;   // per mark vertex (offset by n_corners_)
    std::vector<std::vector<int>> mark_vertex_;  // [curve][point] -> vertex id
    std::vector<Crossing> crossings_;

    std::vector<Edge> edges_;
    std::vector<std::vector<int>> rot_;  // per vertex: outgoing half-edges, ccw
    std::vector<int> next_;              // face-on-left successor per half-edge
    std::vector<int> face_;              // face id per half-edge
    int outer_face_ = -1;
    std::vector<int> qtwin_;             // per half-edge: glued partner (boundary fwd only)
    std::vector<int> region_of_face_;
    std::vector<Region> regions_;
    std::vector<Circle> circles_;

    Rational vpos(int v) const {  // boundary position for ray sorting
        if (v < n_corners_) return Rational(v);
        auto [k, j] = mark_of(v);
        return boundary_pos(curves_[k]->points[j]);
    }

    void build() {
        const PolygonSurface& s = *surface_;
        n_corners_ = s.n_sides();

        // mark vertices
        mark_vertex_.resize(curves_.size());
        for (std::size_t k = 0; k < curves_.size(); ++k) {
            const auto& pts = curves_[k]->points;
            mark_vertex_[k].resize(pts.size());
            for (std::size_t j = 0; j < pts.size(); ++j) {
                mark_vertex_[k][j] = n_corners_ + static_cast<int>(mark_curve_.size());
                mark_curve_.push_back(static_cast<int>(k));
                mark_point_.push_back(static_cast<int>(j));
            }
        }

        // distinct positions required; tangencies must be perturbed upstream
        {
            std::vector<Rational> all;
            for (const auto* c : curves_)
                for (const auto& p : c->points) all.push_back(boundary_pos(p));
            std::sort(all.begin(), all.end());
            check(std::adjacent_find(all.begin(), all.end()) == all.end(), errc::invalid_input,
                  "overlay: coincident boundary points");
        }

        // crossings (between distinct curves only; same-curve crossings are
        // rejected as non-simple input)
        crossing_vertex_base_ = n_corners_ + static_cast<int>(mark_curve_.size());
        std::vector<std::vector<std::vector<int>>> chord_crossings(curves_.size());
        for (std::size_t k = 0; k < curves_.size(); ++k)
            chord_crossings[k].resize(curves_[k]->chords());
        for (std::size_t ka = 0; ka < curves_.size(); ++ka)
            for (std::size_t kb = ka; kb < curves_.size(); ++kb)
                for (int i = 0; i < curves_[ka]->chords(); ++i)
                    for (int j = (ka == kb ? i + 1 : 0); j < curves_[kb]->chords(); ++j) {
                        if (!chords_cross(curves_[ka]->chord_a(i), curves_[ka]->chord_b(i),
                                          curves_[kb]->chord_a(j), curves_[kb]->chord_b(j)))
                            continue;
                        check(ka != kb, errc::invalid_input, "overlay: curve crosses itself");
                        check(curves_.size() == 2, errc::invalid_input,
                              "overlay: crossings only supported between two curves");
                        int q = static_cast<int>(crossings_.size());
                        crossings_.push_back(
                            {i, j, static_cast<int>(ka), static_cast<int>(kb)});
                        chord_crossings[ka][i].push_back(q);
                        chord_crossings[kb][j].push_back(q);
                    }

        build_edges(chord_crossings);
        build_rotations();
        trace_faces();
        glue_boundary();
        build_regions();
        trace_circles();
        validate_euler();
    }

    // Order crossings along a chord, measured from its first endpoint.  The
    // crossing chords are pairwise disjoint, so the crossing nearest the
    // start is the one whose endpoint inside the arc comes first.
    void sort_crossings_along(int k, int i, std::vector<int>& qs) const {
        Rational u = boundary_pos(curves_[k]->chord_a(i));
        Rational v = boundary_pos(curves_[k]->chord_b(i));
        const int n = surface_->n_sides();
        auto offset = [&](const Rational& x) {
            Rational d = x - u;
            return d < Rational(0) ? d + Rational(n) : d;
        };
        Rational span = offset(v);
        auto key = [&](int q) {
            const Crossing& c = crossings_[q];
            int ok = c.a_index == k && c.chord_a == i ? c.b_index : c.a_index;
            int oc = c.a_index == k && c.chord_a == i ? c.chord_b : c.chord_a;
            Rational x1 = offset(boundary_pos(curves_[ok]->chord_a(oc)));
            Rational x2 = offset(boundary_pos(curves_[ok]->chord_b(oc)));
            // exactly one endpoint lies in the open arc from u to v
            return x1 < span && Rational(0) < x1 ? x1 : x2;
        };
        std::sort(qs.begin(), qs.end(), [&](int a, int b) { return key(a) < key(b); });
    }

    void build_edges(std::vector<std::vector<std::vector<int>>>& chord_crossings) {
        const PolygonSurface& s = *surface_;
        // boundary: per side, corner -> marks by t -> next corner
        side_items_.assign(s.n_sides(), {});
        for (std::size_t k = 0; k < curves_.size(); ++k) {
            const auto& pts = curves_[k]->points;
            for (std::size_t j = 0; j < pts.size(); ++j)
                side_items_[pts[j].side].push_back(mark_vertex_[k][j]);
        }
        side_edges_.assign(s.n_sides(), {});
        for (int side = 0; side < s.n_sides(); ++side) {
            auto& items = side_items_[side];
            std::sort(items.begin(), items.end(),
                      [&](int a, int b) { return vpos(a) < vpos(b); });
            int prev = side;  // corner vertex id == corner index
            for (int item : items) {
                side_edges_[side].push_back(add_edge(prev, item, false, -1, -1, side));
                prev = item;
            }
            side_edges_[side].push_back(
                add_edge(prev, (side + 1) % s.n_sides(), false, -1, -1, side));
        }
        // chords, subdivided at crossings
        chord_path_.resize(curves_.size());
        for (std::size_t k = 0; k < curves_.size(); ++k) {
            chord_path_[k].resize(curves_[k]->chords());
            for (int i = 0; i < curves_[k]->chords(); ++i) {
                auto& qs = chord_crossings[k][i];
                sort_crossings_along(static_cast<int>(k), i, qs);
                std::vector<int> path;
                path.push_back(mark_vertex_[k][2 * i]);
                for (int q : qs) path.push_back(crossing_vertex_base_ + q);
                path.push_back(mark_vertex_[k][2 * i + 1]);
                for (std::size_t a = 0; a + 1 < path.size(); ++a)
                    chord_path_[k][i].push_back(
                        add_edge(path[a], path[a + 1], true, static_cast<int>(k), i, -1));
            }
        }
    }

    int add_edge(int tail, int head, bool is_chord, int curve, int chord, int side) {
        edges_.push_back({tail, head, is_chord, curve, chord, side});
        return static_cast<int>(edges_.size()) - 1;
    }

    void build_rotations() {
        const int nv = crossing_vertex_base_ + static_cast<int>(crossings_.size());
        rot_.assign(nv, {});
        // corners: [forward along next side, backward along previous side]
        for (int c = 0; c < n_corners_; ++c) {
            int fwd = 2 * side_edges_[c].front();
            int prev_side = (c + n_corners_ - 1) % n_corners_;
            int bwd = 2 * side_edges_[prev_side].back() + 1;
            rot_[c] = {fwd, bwd};
        }
        // marks: [forward, chord, backward]
        for (std::size_t k = 0; k < curves_.size(); ++k) {
            const auto& pts = curves_[k]->points;
            for (std::size_t j = 0; j < pts.size(); ++j) {
                int v = mark_vertex_[k][j];
                int side = pts[j].side;
                const auto& segs = side_edges_[side];
                int at = -1;
                for (std::size_t e = 0; e < segs.size(); ++e)
                    if (edges_[segs[e]].head == v) at = static_cast<int>(e);
                check(at >= 0, errc::internal, "overlay: mark not on its side");
                int fwd = 2 * segs[at + 1];
                int bwd = 2 * segs[at] + 1;
                int chord = static_cast<int>(j) / 2;
                bool is_start = (j % 2 == 0);
                int ce = is_start ? chord_path_[k][chord].front() : chord_path_[k][chord].back();
                int che = is_start ? 2 * ce : 2 * ce + 1;
                rot_[v] = {fwd, che, bwd};
            }
        }
        // crossings: four chord half-edges sorted by the boundary position of
        // the chord endpoint each one points toward
        for (std::size_t q = 0; q < crossings_.size(); ++q) {
            int v = crossing_vertex_base_ + static_cast<int>(q);
            std::vector<std::pair<Rational, int>> rays;
            const Crossing& cr = crossings_[q];
            for (auto [k, i] : {std::pair<int, int>{cr.a_index, cr.chord_a},
                                std::pair<int, int>{cr.b_index, cr.chord_b}}) {
                const auto& path = chord_path_[k][i];
                for (std::size_t e = 0; e < path.size(); ++e) {
                    const Edge& ed = edges_[path[e]];
                    if (ed.tail == v)  // outgoing toward the chord's second endpoint
                        rays.push_back({boundary_pos(curves_[k]->chord_b(i)),
                                        2 * path[e]});
                    if (ed.head == v)  // outgoing back toward the first endpoint
                        rays.push_back({boundary_pos(curves_[k]->chord_a(i)),
                                        2 * path[e] + 1});
                }
            }
            check(rays.size() == 4, errc::internal, "overlay: crossing valence != 4");
            std::sort(rays.begin(), rays.end());
            for (auto& [pos, he] : rays) rot_[v].push_back(he);
        }
        // next(h) = predecessor of twin(h) in the rotation at head(h)
        pos_in_rot_.assign(2 * edges_.size(), -1);
        for (std::size_t v = 0; v < rot_.size(); ++v)
            for (std::size_t a = 0; a < rot_[v].size(); ++a)
                pos_in_rot_[rot_[v][a]] = static_cast<int>(a);
        next_.assign(2 * edges_.size(), -1);
        for (int h = 0; h < static_cast<int>(2 * edges_.size()); ++h) {
            int v = head_of(h);
            int tw = twin(h);
            int at = pos_in_rot_[tw];
            check(at >= 0, errc::internal, "overlay: half-edge missing from rotation");
            int sz = static_cast<int>(rot_[v].size());
            next_[h] = rot_[v][(at + sz - 1) % sz];
        }
    }

    void trace_faces() {
        face_.assign(next_.size(), -1);
        int nf = 0;
        for (int h = 0; h < static_cast<int>(next_.size()); ++h) {
            if (face_[h] >= 0) continue;
            int e = h;
            do {
                face_[e] = nf;
                e = next_[e];
            } while (e != h);
            ++nf;
        }
        n_faces_ = nf;
        // outer face: left of any backward boundary half-edge
        outer_face_ = face_[2 * side_edges_[0].front() + 1];
        int V = crossing_vertex_base_ + static_cast<int>(crossings_.size());
        int E = static_cast<int>(edges_.size());
        check(V - E + n_faces_ == 2, errc::internal, "overlay: planar Euler check failed");
    }

    void glue_boundary() {
        const PolygonSurface& s = *surface_;
        qtwin_.assign(2 * edges_.size(), -1);
        for (int side = 0; side < s.n_sides(); ++side) {
            int p = s.partner(side);
            if (p < side) continue;
            const auto& a = side_edges_[side];
            const auto& b = side_edges_[p];
            check(a.size() == b.size(), errc::internal, "overlay: corridor mark mismatch");
            int m = static_cast<int>(a.size());
            for (int j = 0; j < m; ++j) {
                int ea = a[j], eb = b[m - 1 - j];
                qtwin_[2 * ea] = 2 * eb;
                qtwin_[2 * eb] = 2 * ea;
            }
        }
    }

    void build_regions() {
        std::vector<int> parent(n_faces_);
        std::iota(parent.begin(), parent.end(), 0);
        std::function<int(int)> find = [&](int x) {
            while (parent[x] != x) x = parent[x] = parent[parent[x]];
            return x;
        };
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            if (edges_[e].is_chord) continue;
            int h = 2 * static_cast<int>(e);
            if (qtwin_[h] < 0) continue;
            parent[find(face_[h])] = find(face_[qtwin_[h]]);
        }
        region_of_face_.assign(n_faces_, -1);
        regions_.clear();
        for (int f = 0; f < n_faces_; ++f) {
            if (f == outer_face_) continue;
            int r = find(f);
            check(r != find(outer_face_), errc::internal, "overlay: outer face merged");
            if (region_of_face_[r] < 0) {
                region_of_face_[r] = static_cast<int>(regions_.size());
                regions_.push_back({});
            }
            region_of_face_[f] = region_of_face_[r];
            regions_[region_of_face_[f]].faces.push_back(f);
        }
        // chi(R) = interior corner classes - spine edges + faces; the curve
        // half-edge visits along the boundary circles cancel exactly.
        for (const auto& cyc : surface_->vertex_cycles) {
            int r = -1;
            for (int c : cyc)
                for (int h : rot_[c]) {
                    int f = face_[h];
                    if (f == outer_face_) continue;
                    if (r < 0)
                        r = region_of_face_[f];
                    else
                        check(region_of_face_[f] == r, errc::internal,
                              "overlay: corner class split between regions");
                }
            check(r >= 0, errc::internal, "overlay: corner class without interior face");
            regions_[r].corner_classes++;
        }
        for (std::size_t e = 0; e < edges_.size(); ++e) {
            if (edges_[e].is_chord) continue;
            int h = 2 * static_cast<int>(e);
            if (qtwin_[h] < 0 || qtwin_[h] < h) continue;  // count each glued pair once
            int r1 = region_of_face_[face_[h]];
            int r2 = region_of_face_[face_[qtwin_[h]]];
            check(r1 == r2, errc::internal, "overlay: spine edge between regions");
            regions_[r1].spine_edges++;
        }
        for (auto& r : regions_)
            r.chi = r.corner_classes - r.spine_edges + static_cast<int>(r.faces.size());
    }

    int next_region_he(int h) const {
        int e = next_[h];
        while (!edges_[e / 2].is_chord) {
            check(qtwin_[e] >= 0, errc::internal, "overlay: walk left the surface");
            e = next_[qtwin_[e]];
        }
        return e;
    }

    void trace_circles() {
        std::vector<bool> seen(2 * edges_.size(), false);
        for (int h = 0; h < static_cast<int>(2 * edges_.size()); ++h) {
            if (seen[h] || !edges_[h / 2].is_chord) continue;
            Circle c;
            c.region = region_of_face_[face_[h]];
            int e = h;
            do {
                seen[e] = true;
                c.hes.push_back(e);
                c.curves.push_back(edges_[e / 2].curve);
                int v = head_of(e);
                c.head_vertex.push_back(v);
                c.head_crossing.push_back(vertex_is_crossing(v) ? vertex_crossing_id(v) : -1);
                if (vertex_is_crossing(v)) c.crossing_visits++;
                e = next_region_he(e);
            } while (e != h);
            regions_[c.region].circles.push_back(static_cast<int>(circles_.size()));
            circles_.push_back(std::move(c));
        }
    }

    void validate_euler() {
        int total = 0;
        for (const auto& r : regions_) total += r.chi;
        int expected = surface_->euler_char + crossing_count();
        check(total == expected, errc::internal, "overlay: region Euler sum mismatch");
        for (const auto& r : regions_) {
            int rem = 2 - r.chi - r.boundary_count();
            check(rem >= 0 && rem % 2 == 0, errc::internal, "overlay: impossible region profile");
        }
    }

  public:
    // exposed for the surgery and rendering code
    const std::vector<std::vector<int>>& side_items() const { return side_items_; }
    const std::vector<std::vector<std::vector<int>>>& chord_paths() const { return chord_path_; }

  private:
    std::vector<std::vector<int>> side_items_;               // mark vertices per side, by t
    std::vector<std::vector<int>> side_edges_;               // boundary edges per side
    std::vector<std::vector<std::vector<int>>> chord_path_;  // edges per [curve][chord]
    std::vector<int> pos_in_rot_;
    int n_faces_ = 0;
};

}  // namespace mcgl
