#pragma once

#include <algorithm>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "mcgl/error.hpp"

namespace mcgl {

/// Fixed-point-free involution on the sides of a 2n-gon.  Sides are indexed
/// counterclockwise; side i runs from corner i to corner i+1, and corner i
/// sits between side i-1 and side i.
struct EdgePairing {
    int n_sides = 0;
    std::vector<int> pairs;  // pairs[pairs[i]] == i, pairs[i] != i

    int partner(int side) const { return pairs[side]; }
};

inline EdgePairing make_edge_pairing(int n_sides, std::vector<int> pairs) {
    check(n_sides >= 2 && n_sides % 2 == 0, errc::invalid_input,
          "pairing: n_sides must be a positive even integer");
    check(static_cast<int>(pairs.size()) == n_sides, errc::invalid_input,
          "pairing: need one partner per side");
    for (int i = 0; i < n_sides; ++i) {
        check(pairs[i] >= 0 && pairs[i] < n_sides, errc::invalid_input,
              "pairing: side index out of range");
        check(pairs[i] != i, errc::invalid_input, "pairing: side glued to itself");
        check(pairs[pairs[i]] == i, errc::invalid_input, "pairing: not an involution");
    }
    return EdgePairing{n_sides, std::move(pairs)};
}

/// Closed orientable surface presented as a glued polygon.  Every side is
/// identified with its partner reversing the boundary direction; that is the
/// unique convention that yields a closed orientable quotient, so pairings
/// carry no flip annotations.
struct PolygonSurface {
    EdgePairing pairing;
    std::vector<std::vector<int>> vertex_cycles;  // partition of corners
    int euler_char = 0;
    int genus = 0;

    int n_sides() const { return pairing.n_sides; }
    int n_edges() const { return pairing.n_sides / 2; }
    int partner(int side) const { return pairing.partner(side); }
};

/// Corner identification: start of side i is glued to the end of side
/// pairs(i), so corner i ~ corner pairs(i)+1.  The orbits of that successor
/// map are exactly the corner cycles around the quotient vertices.
inline std::vector<std::vector<int>> vertex_cycles(const EdgePairing& pairing) {
    const int n = pairing.n_sides;
    std::vector<std::vector<int>> cycles;
    std::vector<bool> seen(n, false);
    for (int start = 0; start < n; ++start) {
        if (seen[start]) continue;
        std::vector<int> cycle;
        int c = start;
        do {
            seen[c] = true;
            cycle.push_back(c);
            c = (pairing.pairs[c] + 1) % n;
        } while (c != start);
        cycles.push_back(std::move(cycle));
    }
    return cycles;
}

inline PolygonSurface make_surface(EdgePairing pairing) {
    auto cycles = vertex_cycles(pairing);
    int v = static_cast<int>(cycles.size());
    int chi = v - pairing.n_sides / 2 + 1;
    // Impossible for an orientation-reversing gluing; an odd value signals an
    // orientation-incompatible pairing.
    check(chi % 2 == 0, errc::invalid_input, "surface: odd Euler characteristic");
    check(chi <= 2, errc::internal, "surface: Euler characteristic above 2");
    return PolygonSurface{std::move(pairing), std::move(cycles), chi, (2 - chi) / 2};
}

inline PolygonSurface make_surface(int n_sides, std::vector<int> pairs) {
    return make_surface(make_edge_pairing(n_sides, std::move(pairs)));
}

/// The (4g+2)-gon with opposite sides identified; genus g with two vertex
/// classes.  Rotations of this polygon realize the standard periodic maps.
inline PolygonSurface standard_surface(int g) {
    check(g >= 1, errc::invalid_input, "standard_surface: genus must be >= 1");
    const int n = 4 * g + 2;
    std::vector<int> pairs(n);
    for (int i = 0; i < n; ++i) pairs[i] = (i + n / 2) % n;
    PolygonSurface s = make_surface(n, std::move(pairs));
    check(s.genus == g, errc::internal, "standard_surface: genus mismatch");
    return s;
}

/// All side-shifts commuting with the gluing, i.e. the rotations of the
/// polygon that descend to the quotient surface.  Always a subgroup of
/// Z/n_sides and always contains 0.
inline std::vector<int> rotation_shifts(const PolygonSurface& s) {
    const int n = s.n_sides();
    std::vector<int> out;
    for (int shift = 0; shift < n; ++shift) {
        bool ok = true;
        for (int i = 0; i < n && ok; ++i)
            ok = s.pairing.pairs[(i + shift) % n] == (s.pairing.pairs[i] + shift) % n;
        if (ok) out.push_back(shift);
    }
    return out;
}

// --- text format: `polygon <n_sides>` then `glue <i> <j>` once per pair ---

inline PolygonSurface parse_surface(std::istream& in) {
    std::string line;
    int n = -1;
    std::vector<int> pairs;
    std::vector<bool> used;
    while (std::getline(in, line)) {
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "polygon") {
            check(n < 0, errc::parse_error, "surface: repeated polygon line");
            check(static_cast<bool>(ls >> n) && n >= 2 && n % 2 == 0, errc::parse_error,
                  "surface: polygon needs a positive even side count");
            pairs.assign(n, -1);
            used.assign(n, false);
        } else if (tok == "glue") {
            check(n > 0, errc::parse_error, "surface: glue before polygon line");
            int i, j;
            check(static_cast<bool>(ls >> i >> j), errc::parse_error, "surface: glue needs two sides");
            check(i >= 0 && i < n && j >= 0 && j < n, errc::parse_error,
                  "surface: glue side out of range");
            check(i != j, errc::parse_error, "surface: side glued to itself");
            check(!used[i] && !used[j], errc::parse_error, "surface: duplicate glue");
            used[i] = used[j] = true;
            pairs[i] = j;
            pairs[j] = i;
        } else {
            fail(errc::parse_error, "surface: unknown directive '" + tok + "'");
        }
        std::string extra;
        check(!(ls >> extra), errc::parse_error, "surface: trailing tokens");
    }
    check(n > 0, errc::parse_error, "surface: missing polygon line");
    for (int i = 0; i < n; ++i)
        check(pairs[i] >= 0, errc::parse_error, "surface: side " + std::to_string(i) + " unglued");
    return make_surface(n, std::move(pairs));
}

inline void format_surface(const PolygonSurface& s, std::ostream& out) {
    out << "polygon " << s.n_sides() << "\n";
    for (int i = 0; i < s.n_sides(); ++i)
        if (i < s.partner(i)) out << "glue " << i << " " << s.partner(i) << "\n";
}

}  // namespace mcgl
