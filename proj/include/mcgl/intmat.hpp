#pragma once

#include <cstdint>
#include <cstdlib>
#include <numeric>
#include <ostream>
#include <vector>

#include "mcgl/error.hpp"

namespace mcgl {

using IntVec = std::vector<long long>;

struct IntMat {
    int rows = 0, cols = 0;
    std::vector<long long> a;

    IntMat() = default;
    IntMat(int r, int c) : rows(r), cols(c), a(static_cast<std::size_t>(r) * c, 0) {}
    long long& operator()(int r, int c) { return a[static_cast<std::size_t>(r) * cols + c]; }
    long long operator()(int r, int c) const { return a[static_cast<std::size_t>(r) * cols + c]; }

    static IntMat identity(int n) {
        IntMat m(n, n);
        for (int i = 0; i < n; ++i) m(i, i) = 1;
        return m;
    }
    IntVec col(int c) const {
        IntVec v(rows);
        for (int r = 0; r < rows; ++r) v[r] = (*this)(r, c);
        return v;
    }
};

inline bool operator==(const IntMat& x, const IntMat& y) {
    return x.rows == y.rows && x.cols == y.cols && x.a == y.a;
}
inline bool operator!=(const IntMat& x, const IntMat& y) { return !(x == y); }

// products accumulate in 128 bits; entries that leave the 64-bit range are a
// hard error rather than silent wraparound
inline long long narrow128(__int128 v, const char* what) {
    check(v <= INT64_MAX && v >= INT64_MIN, errc::internal, what);
    return static_cast<long long>(v);
}

inline IntMat operator*(const IntMat& x, const IntMat& y) {
    check(x.cols == y.rows, errc::internal, "intmat: dimension mismatch");
    IntMat z(x.rows, y.cols);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < y.cols; ++j) {
            __int128 acc = 0;
            for (int k = 0; k < x.cols; ++k)
                acc += static_cast<__int128>(x(i, k)) * y(k, j);
            z(i, j) = narrow128(acc, "intmat: entry overflow in product");
        }
    return z;
}

inline IntVec operator*(const IntMat& x, const IntVec& v) {
    check(x.cols == static_cast<int>(v.size()), errc::internal, "intmat: dimension mismatch");
    IntVec out(x.rows, 0);
    for (int i = 0; i < x.rows; ++i) {
        __int128 acc = 0;
        for (int j = 0; j < x.cols; ++j) acc += static_cast<__int128>(x(i, j)) * v[j];
        out[i] = narrow128(acc, "intmat: entry overflow in product");
    }
    return out;
}

inline IntVec operator+(const IntVec& a, const IntVec& b) {
    IntVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] + b[i];
    return c;
}
inline IntVec operator-(const IntVec& a, const IntVec& b) {
    IntVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i] - b[i];
    return c;
}
inline IntVec operator*(long long s, const IntVec& a) {
    IntVec c(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) c[i] = s * a[i];
    return c;
}
inline IntVec operator-(const IntVec& a) { return -1ll * a; }
inline bool is_zero(const IntVec& a) {
    for (long long x : a)
        if (x != 0) return false;
    return true;
}

inline IntMat transpose(const IntMat& x) {
    IntMat t(x.cols, x.rows);
    for (int i = 0; i < x.rows; ++i)
        for (int j = 0; j < x.cols; ++j) t(j, i) = x(i, j);
    return t;
}

inline long long content(const IntVec& v) {
    long long g = 0;
    for (long long x : v) g = std::gcd(g, x);
    return g;
}
inline bool is_primitive(const IntVec& v) { return content(v) == 1; }

/// Standard symplectic form, g diagonal 2x2 blocks [[0,1],[-1,0]]; basis
/// order (a1, b1, a2, b2, ...).
inline IntMat symplectic_form(int g) {
    IntMat j(2 * g, 2 * g);
    for (int k = 0; k < g; ++k) {
        j(2 * k, 2 * k + 1) = 1;
        j(2 * k + 1, 2 * k) = -1;
    }
    return j;
}

/// x^T J y for the standard form.
inline long long sympl_pairing(const IntVec& x, const IntVec& y) {
    check(x.size() == y.size() && x.size() % 2 == 0, errc::internal, "pairing: bad sizes");
    long long s = 0;
    for (std::size_t k = 0; k < x.size(); k += 2) s += x[k] * y[k + 1] - x[k + 1] * y[k];
    return s;
}

/// Fraction-free determinant (Bareiss) with 128-bit intermediates; errors
/// out on overflow instead of wrapping.  Fine for the small matrices with
/// modest entries it is used on.
inline long long det(const IntMat& m0) {
    check(m0.rows == m0.cols, errc::internal, "det: square only");
    const int n = m0.rows;
    if (n == 0) return 1;
    std::vector<__int128> m(m0.a.begin(), m0.a.end());
    auto at = [&](int r, int c) -> __int128& { return m[static_cast<std::size_t>(r) * n + c]; };
    const __int128 limit = static_cast<__int128>(1) << 100;
    long long sign = 1;
    __int128 prev = 1;
    for (int k = 0; k < n - 1; ++k) {
        if (at(k, k) == 0) {
            int p = -1;
            for (int r = k + 1; r < n; ++r)
                if (at(r, k) != 0) { p = r; break; }
            if (p < 0) return 0;
            for (int c = 0; c < n; ++c) std::swap(at(k, c), at(p, c));
            sign = -sign;
        }
        for (int i = k + 1; i < n; ++i)
            for (int j = k + 1; j < n; ++j) {
                check(at(i, j) < limit && at(i, j) > -limit && at(k, k) < limit &&
                          at(k, k) > -limit,
                      errc::internal, "det: overflow");
                at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
            }
        prev = at(k, k);
    }
    return sign * narrow128(m[static_cast<std::size_t>(n) * n - 1], "det: overflow");
}

struct Egcd {
    long long g, x, y;  // g = x*a + y*b, g >= 0
};

inline Egcd egcd(long long a, long long b) {
    long long old_r = a, r = b;
    long long old_x = 1, x = 0;
    long long old_y = 0, y = 1;
    while (r != 0) {
        long long q = old_r / r;
        long long t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * x; old_x = x; x = t;
        t = old_y - q * y; old_y = y; y = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    return {old_r, old_x, old_y};
}

/// Integer w with u . w = gcd(u)  (gcd taken positive; u != 0), with the
/// coefficients size-reduced along the kernel moves u[j] e_i - u[i] e_j so
/// downstream basis matrices stay small.
inline IntVec bezout_vector(const IntVec& u) {
    IntVec w(u.size(), 0);
    long long g = 0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0) continue;
        if (g == 0) {
            g = std::abs(u[i]);
            w[i] = u[i] < 0 ? -1 : 1;
            continue;
        }
        Egcd e = egcd(g, u[i]);
        for (auto& c : w) c *= e.x;
        w[i] += e.y;
        g = e.g;
    }
    check(g != 0, errc::internal, "bezout_vector: zero vector");

    auto norm2 = [](const IntVec& x) {
        __int128 s = 0;
        for (auto v : x) s += static_cast<__int128>(v) * v;
        return s;
    };
    bool improved = true;
    while (improved) {
        improved = false;
        for (std::size_t i = 0; i < u.size(); ++i)
            for (std::size_t j = 0; j < u.size(); ++j) {
                if (i == j || u[j] == 0) continue;
                long long q0 = w[i] / u[j];
                for (long long q : {q0 - 1, q0, q0 + 1}) {
                    if (q == 0) continue;
                    IntVec cand = w;
                    cand[i] -= q * u[j];
                    cand[j] += q * u[i];
                    if (norm2(cand) < norm2(w)) {
                        w = std::move(cand);
                        improved = true;
                    }
                }
            }
    }
    return w;
}

/// Congruence reduction of an integer skew-symmetric matrix:
/// U^T P U = diag([[0,d],[-d,0]] blocks, then zeros).  Returns U; the d
/// values land in block_values.
inline IntMat skew_normal_form(IntMat p, std::vector<long long>& block_values) {
    const int n = p.rows;
    check(p.cols == n, errc::internal, "skew_normal_form: square only");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            check(p(i, j) == -p(j, i), errc::internal, "skew_normal_form: not skew");
    IntMat u = IntMat::identity(n);

    auto col_axpy = [&](int dst, int src, long long q) {  // congruent: col and row together
        if (q == 0) return;
        for (int r = 0; r < n; ++r) p(r, dst) += q * p(r, src);
        for (int c = 0; c < n; ++c) p(dst, c) += q * p(src, c);
        for (int r = 0; r < n; ++r) u(r, dst) += q * u(r, src);
    };
    auto col_swap = [&](int x, int y) {
        if (x == y) return;
        for (int r = 0; r < n; ++r) std::swap(p(r, x), p(r, y));
        for (int c = 0; c < n; ++c) std::swap(p(x, c), p(y, c));
        for (int r = 0; r < n; ++r) std::swap(u(r, x), u(r, y));
    };
    auto col_negate = [&](int x) {
        for (int r = 0; r < n; ++r) p(r, x) = -p(r, x);
        for (int c = 0; c < n; ++c) p(x, c) = -p(x, c);
        for (int r = 0; r < n; ++r) u(r, x) = -u(r, x);
    };

    block_values.clear();
    int k = 0;
    while (k + 1 < n) {
        int br = -1, bc = -1;
        for (int i = k; i < n; ++i)
            for (int j = k; j < n; ++j)
                if (p(i, j) != 0 && (br < 0 || std::abs(p(i, j)) < std::abs(p(br, bc)))) {
                    br = i;
                    bc = j;
                }
        if (br < 0) break;  // remaining block is zero (the radical)
        col_swap(k, br);
        if (bc == k) bc = br;
        col_swap(k + 1, bc);
        if (p(k, k + 1) < 0) col_negate(k + 1);

        long long d = p(k, k + 1);
        for (int j = k + 2; j < n; ++j) {
            col_axpy(j, k + 1, -(p(k, j) / d));  // clear row k (mod d)
            col_axpy(j, k, p(k + 1, j) / d);     // clear row k+1 (mod d)
        }
        bool clean = true;
        for (int j = k + 2; j < n; ++j)
            if (p(k, j) != 0 || p(k + 1, j) != 0) clean = false;
        if (!clean) continue;  // remainders are smaller than d; re-pick the pivot
        block_values.push_back(d);
        k += 2;
    }
    return u;
}

/// Integer kernel basis: columns v with A v = 0 spanning the kernel lattice.
inline std::vector<IntVec> kernel_basis(const IntMat& a0) {
    IntMat a = a0;
    const int rows = a.rows, cols = a.cols;
    IntMat u = IntMat::identity(cols);
    auto axpy = [&](int dst, int src, long long q) {
        if (q == 0) return;
        for (int r = 0; r < rows; ++r) a(r, dst) += q * a(r, src);
        for (int r = 0; r < cols; ++r) u(r, dst) += q * u(r, src);
    };
    auto cswap = [&](int x, int y) {
        if (x == y) return;
        for (int r = 0; r < rows; ++r) std::swap(a(r, x), a(r, y));
        for (int r = 0; r < cols; ++r) std::swap(u(r, x), u(r, y));
    };
    int lead = 0;
    for (int r = 0; r < rows && lead < cols; ++r) {
        while (true) {
            int piv = -1;
            for (int c = lead; c < cols; ++c)
                if (a(r, c) != 0 && (piv < 0 || std::abs(a(r, c)) < std::abs(a(r, piv)))) piv = c;
            if (piv < 0) break;  // row r zero beyond lead; keep lead for the next row
            cswap(lead, piv);
            bool all_zero = true;
            for (int c = lead + 1; c < cols; ++c) {
                axpy(c, lead, -(a(r, c) / a(r, lead)));
                if (a(r, c) != 0) all_zero = false;
            }
            if (all_zero) {
                ++lead;
                break;
            }
        }
    }
    std::vector<IntVec> kernel;
    for (int c = lead; c < cols; ++c) {
        IntVec v = u.col(c);
        check(is_zero(a0 * v), errc::internal, "kernel_basis: column not in kernel");
        kernel.push_back(std::move(v));
    }
    return kernel;
}

inline std::ostream& operator<<(std::ostream& os, const IntMat& m) {
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) os << (j ? " " : "") << m(i, j);
        os << "\n";
    }
    return os;
}

}  // namespace mcgl
