#pragma once

#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "mcgl/intmat.hpp"
#include "mcgl/word.hpp"

namespace mcgl {

/// M^T J M = J; this forces det M = +1 (Pfaffian identity), so no separate
/// determinant computation is needed here.
inline bool is_symplectic(const IntMat& m) {
    if (m.rows != m.cols || m.rows % 2 != 0) return false;
    IntMat j = symplectic_form(m.rows / 2);
    return transpose(m) * j * m == j;
}

/// Inverse of a symplectic matrix: J^-1 M^T J, exact over the integers.
inline IntMat sympl_inverse(const IntMat& m) {
    const int g = m.rows / 2;
    IntMat j = symplectic_form(g);
    IntMat minus_j = j;
    for (auto& x : minus_j.a) x = -x;
    IntMat inv = minus_j * transpose(m) * j;
    check(inv * m == IntMat::identity(m.rows), errc::internal, "sympl_inverse: not an inverse");
    return inv;
}

/// Homology action of the Dehn twist about a curve of class v:
/// x -> x + <x, v> v with <x, v> = x^T J v.  transvection(v) = transvection(-v).
inline IntMat transvection(const IntVec& v) {
    const int dim = static_cast<int>(v.size());
    IntMat j = symplectic_form(dim / 2);
    IntVec jv = j * v;
    IntMat m = IntMat::identity(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m(r, c) += v[r] * jv[c];
    return m;
}

inline IntMat transvection_inverse(const IntVec& v) {
    const int dim = static_cast<int>(v.size());
    IntMat j = symplectic_form(dim / 2);
    IntVec jv = j * v;
    IntMat m = IntMat::identity(dim);
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c) m(r, c) -= v[r] * jv[c];
    return m;
}

namespace detail {

inline IntVec unit_vec(int dim, int at) {
    IntVec e(dim, 0);
    e[at] = 1;
    return e;
}

/// Symplectic basis matrix whose first column is the primitive vector v:
/// columns (v, w, a2, b2, ...) with B^T J B = J.
inline IntMat complete_one(const IntVec& v) {
    const int dim = static_cast<int>(v.size());
    check(dim >= 2 && dim % 2 == 0, errc::invalid_input, "completion: even dimension");
    check(!is_zero(v), errc::not_primitive, "completion: zero vector");
    check(is_primitive(v), errc::not_primitive, "completion: vector not primitive");
    IntMat j = symplectic_form(dim / 2);
    // functional x -> <v, x> has coefficient vector J^T v, primitive
    IntVec u = transpose(j) * v;
    IntVec w = bezout_vector(u);  // <v, w> = 1
    {
        // size-reduce w against v; <v, w - t v> stays 1 for every t, so the
        // rounding only needs to be approximately optimal
        double num = 0, den = 0;
        for (int i = 0; i < dim; ++i) {
            num += static_cast<double>(w[i]) * static_cast<double>(v[i]);
            den += static_cast<double>(v[i]) * static_cast<double>(v[i]);
        }
        long long t = std::llround(num / den);
        for (int i = 0; i < dim; ++i) w[i] -= t * v[i];
    }

    IntMat b(dim, dim);
    for (int r = 0; r < dim; ++r) {
        b(r, 0) = v[r];
        b(r, 1) = w[r];
    }
    if (dim > 2) {
        IntMat a(2, dim);
        IntVec uw = transpose(j) * w;
        for (int c = 0; c < dim; ++c) {
            a(0, c) = u[c];
            a(1, c) = uw[c];
        }
        auto kern = kernel_basis(a);
        check(static_cast<int>(kern.size()) == dim - 2, errc::internal,
              "completion: complement rank");
        IntMat k(dim, dim - 2);
        for (int c = 0; c < dim - 2; ++c)
            for (int r = 0; r < dim; ++r) k(r, c) = kern[c][r];
        IntMat gram = transpose(k) * j * k;
        std::vector<long long> blocks;
        IntMat ug = skew_normal_form(gram, blocks);
        check(static_cast<int>(blocks.size()) == dim / 2 - 1, errc::internal,
              "completion: complement form is degenerate");
        for (long long d : blocks)
            check(d == 1, errc::internal, "completion: complement form not unimodular");
        IntMat rest = k * ug;
        for (int c = 0; c < dim - 2; ++c)
            for (int r = 0; r < dim; ++r) b(r, c + 2) = rest(r, c);
    }
    check(is_symplectic(b), errc::internal, "completion: basis not symplectic");
    return b;
}

/// Eichler transformation for the isotropic pair (e_a, e_b), <e_a, e_b> = 0:
/// x -> x + m <x, e_b> e_a + m <x, e_a> e_b.  Symplectic for every m.
inline IntMat eichler(int dim, int a, int b, long long m) {
    IntMat j = symplectic_form(dim / 2);
    IntVec ea = unit_vec(dim, a), eb = unit_vec(dim, b);
    check(sympl_pairing(ea, eb) == 0, errc::internal, "eichler: pair not isotropic");
    IntMat f = IntMat::identity(dim);
    IntVec ja = j * ea, jb = j * eb;  // <x, e> = x . (J e)
    for (int r = 0; r < dim; ++r)
        for (int c = 0; c < dim; ++c)
            f(r, c) += m * (ea[r] * jb[c] + eb[r] * ja[c]);
    return f;
}

struct PairCanon {
    IntMat to_canonical;  // S with S v1 = e1 and S v2 = canon
    IntVec canon;
};

/// Reduces a pair (v1, v2), v1 primitive, to the canonical form
/// (e1,  alpha e1 + delta e2 + m2 e3)  with delta the pairing,
/// m2 = gcd(delta, content of the complement component) and alpha reduced
/// mod m2.  Pairs carried to each other by Sp(2g, Z) reach the same
/// canonical form.
inline PairCanon canonicalize_pair(const IntVec& v1, const IntVec& v2) {
    const int dim = static_cast<int>(v1.size());
    IntMat s = sympl_inverse(complete_one(v1));
    IntVec y = s * v2;
    const long long delta = y[1];

    // rotate the complement block so the component there becomes content*e3
    auto rotate_cpart = [&]() {
        if (dim <= 2) return;
        IntVec c(y.begin() + 2, y.end());
        if (is_zero(c)) return;
        long long d = content(c);
        IntVec chat = c;
        for (auto& x : chat) x /= d;
        IntMat t(dim, dim);
        t(0, 0) = t(1, 1) = 1;
        IntMat bc = sympl_inverse(complete_one(chat));
        for (int r = 0; r < dim - 2; ++r)
            for (int cc = 0; cc < dim - 2; ++cc) t(r + 2, cc + 2) = bc(r, cc);
        s = t * s;
        y = t * y;
    };
    // Eichler move on the isotropic pair (e1, e4): alpha += m*d, then the
    // polluted complement component is rotated straight again
    auto eichler_shift = [&](long long m) {
        if (m == 0) return;
        IntMat f = eichler(dim, 0, 3, m);
        s = f * s;
        y = f * y;
        rotate_cpart();
    };
    // transvection(e1)^n = I - n e1 e2^T: alpha -= n*delta
    auto transvection_shift = [&](long long n) {
        if (n == 0) return;
        IntMat tn = IntMat::identity(dim);
        tn(0, 1) = -n;
        s = tn * s;
        y = tn * y;
    };

    rotate_cpart();
    long long d = dim > 2 ? y[2] : 0;
    if (delta != 0 && d == 0 && dim > 2) {
        // a zero complement component is equivalent to one of content
        // |delta|: create it so equivalent pairs reach one shape
        IntMat f = eichler(dim, 2, 0, 1);  // y[2] -= delta
        s = f * s;
        y = f * y;
        rotate_cpart();
        d = y[2];
    }
    if (delta != 0 && d != 0 && delta % d != 0) {
        // fold delta into the complement: content becomes gcd(d, delta)
        eichler_shift(1);
        d = y[2];
        check(d == std::gcd(y[1], d), errc::internal, "canonicalize: fold failed");
    }
    long long m2 = std::gcd(delta, d);
    if (m2 != 0) {
        long long alpha = y[0];
        long long want = ((alpha % m2) + m2) % m2;
        long long shift = want - alpha;  // multiple of m2 = gcd(d, delta)
        Egcd e = egcd(d, delta);
        check(e.g == m2 && shift % m2 == 0, errc::internal, "canonicalize: bad moduli");
        long long scale = shift / m2;
        eichler_shift(e.x * scale);            // alpha += (x*scale)*d
        transvection_shift(-(e.y * scale));    // alpha += (y*scale)*delta
        check(y[0] == want, errc::internal, "canonicalize: alpha reduction failed");
    }

    check(y[1] == delta, errc::internal, "canonicalize: pairing drifted");
    if (dim > 2)
        check(y[2] == (delta == 0 && d == 0 ? 0 : m2), errc::internal,
              "canonicalize: content drifted");
    for (int i = 3; i < dim; ++i)
        check(y[i] == 0, errc::internal, "canonicalize: tail not cleared");
    return {s, y};
}

}  // namespace detail

/// Integer symplectic matrix taking sources to targets (lists of one or two
/// primitive vectors with matching pairings).  Errors: PairingMismatch when
/// the forms differ, NotPrimitive for imprimitive inputs, NoCompletion when
/// the pairs are not symplectically equivalent — there is then no
/// homeomorphism with the requested homology behaviour.
inline IntMat symplectic_completion(const std::vector<IntVec>& sources,
                                    const std::vector<IntVec>& targets) {
    check(sources.size() == targets.size() && !sources.empty() && sources.size() <= 2,
          errc::invalid_input, "completion: need one or two vectors per side");
    const int dim = static_cast<int>(sources[0].size());
    for (const auto& v : sources) check(is_primitive(v), errc::not_primitive,
                                        "completion: source not primitive");
    for (const auto& v : targets) check(is_primitive(v), errc::not_primitive,
                                        "completion: target not primitive");
    if (sources.size() == 2) {
        check(sympl_pairing(sources[0], sources[1]) == sympl_pairing(targets[0], targets[1]),
              errc::pairing_mismatch, "completion: pairings differ");
    }

    IntMat m(dim, dim);
    if (sources.size() == 1) {
        m = detail::complete_one(targets[0]) * sympl_inverse(detail::complete_one(sources[0]));
    } else {
        auto cs = detail::canonicalize_pair(sources[0], sources[1]);
        auto ct = detail::canonicalize_pair(targets[0], targets[1]);
        check(cs.canon == ct.canon, errc::no_completion,
              "completion: pairs are not symplectically equivalent");
        m = sympl_inverse(ct.to_canonical) * cs.to_canonical;
    }
    check(is_symplectic(m), errc::internal, "completion: result not symplectic");
    for (std::size_t i = 0; i < sources.size(); ++i)
        check(m * sources[i] == targets[i], errc::internal,
              "completion: mapping condition failed");
    return m;
}

/// Homology classes of the seven lantern curves inside the standard basis:
/// the three boundary curves alpha1, alpha2, x1 are a1, a2, a3; the fourth
/// boundary gamma2 is their sum; the diagonals are pairwise sums.  All
/// pairings vanish (the lantern curves are disjoint).
inline std::map<std::string, IntVec> lantern_homology_classes(int g,
                                                              const LanternLabels& lab = {}) {
    check(g >= 3, errc::invalid_input, "lantern classes: genus must be >= 3");
    const int dim = 2 * g;
    auto a = [&](int i) { return detail::unit_vec(dim, 2 * i); };  // a_{i+1}
    std::map<std::string, IntVec> cls;
    cls[lab.alpha1] = a(0);
    cls[lab.alpha2] = a(1);
    cls[lab.x1] = a(2);
    cls[lab.gamma1] = a(0) + a(1);
    cls[lab.gamma2] = a(0) + a(1) + a(2);
    cls[lab.x3] = a(1) + a(2);
    cls[lab.x2] = a(0) + a(2);
    return cls;
}

/// Exact matrix identity T_a1 T_a2 T_x1 T_g2 = T_g1 T_x3 T_x2 under a class
/// assignment; validates the built-in assignment and rejects corrupted ones.
inline bool verify_lantern_homology(int g, const std::map<std::string, IntVec>& cls,
                                    const LanternLabels& lab = {}) {
    auto at = [&](const std::string& l) {
        auto it = cls.find(l);
        check(it != cls.end(), errc::invalid_input, "lantern: missing class for " + l);
        check(static_cast<int>(it->second.size()) == 2 * g, errc::invalid_input,
              "lantern: class for " + l + " has the wrong dimension");
        return it->second;
    };
    IntMat lhs = transvection(at(lab.alpha1)) * transvection(at(lab.alpha2)) *
                 transvection(at(lab.x1)) * transvection(at(lab.gamma2));
    IntMat rhs = transvection(at(lab.gamma1)) * transvection(at(lab.x3)) *
                 transvection(at(lab.x2));
    return lhs == rhs;
}

inline bool verify_lantern_homology(int g) {
    return verify_lantern_homology(g, lantern_homology_classes(g));
}

/// Assignment for evaluating words: twist labels to classes, map symbols to
/// symplectic matrices.
struct WordAssignment {
    std::map<std::string, IntVec> twists;
    std::map<std::string, IntMat> syms;
    int dim = 0;
};

/// Homomorphism from the word algebra to Sp(2g, Z): Twist(c) becomes the
/// transvection of [c], Sym(m) its assigned matrix, letters multiply left to
/// right.
inline IntMat evaluate_word(const McgWord& w, const WordAssignment& assign) {
    IntMat acc = IntMat::identity(assign.dim);
    for (const auto& gen : w.letters) {
        IntMat factor;
        if (gen.kind == Generator::Kind::twist) {
            auto it = assign.twists.find(gen.label);
            check(it != assign.twists.end(), errc::invalid_input,
                  "evaluate: unassigned twist label " + gen.label);
            factor = gen.exp == 1 ? transvection(it->second)
                                  : transvection_inverse(it->second);
        } else {
            auto it = assign.syms.find(gen.label);
            check(it != assign.syms.end(), errc::invalid_input,
                  "evaluate: unassigned map symbol " + gen.label);
            factor = gen.exp == 1 ? it->second : sympl_inverse(it->second);
        }
        acc = acc * factor;
    }
    return acc;
}

}  // namespace mcgl
