#ifndef LUROTH_LINALG_HPP
#define LUROTH_LINALG_HPP

#include <stdexcept>
#include <utility>
#include <vector>

#include "luroth/roots.hpp"

namespace luroth {

using CVec = std::vector<CNum>;
using CMat = std::vector<std::vector<CNum>>;

inline Real vec_norm(const CVec& v) {
    Real s(0.0);
    for (const auto& x : v) s += norm2(x);
    return sqrt(s);
}

inline CVec vec_scale(const CVec& v, const CNum& s) {
    CVec r = v;
    for (auto& x : r) x *= s;
    return r;
}

inline CVec vec_normalize(const CVec& v) {
    Real n = vec_norm(v);
    if (n.is_zero()) throw std::domain_error("normalizing zero vector");
    CVec r = v;
    for (auto& x : r) x = CNum(x.re() / n, x.im() / n);
    return r;
}

// Hermitian inner product <u, v> = sum conj(u_i) v_i.
inline CNum inner(const CVec& u, const CVec& v) {
    CNum s(0.0);
    for (size_t i = 0; i < u.size(); ++i) s += conj(u[i]) * v[i];
    return s;
}

inline CVec mat_vec(const CMat& m, const CVec& v) {
    CVec r(m.size(), CNum(0.0));
    for (size_t i = 0; i < m.size(); ++i)
        for (size_t j = 0; j < v.size(); ++j) r[i] += m[i][j] * v[j];
    return r;
}

inline CMat mat_mul(const CMat& a, const CMat& b) {
    size_t n = a.size(), m = b[0].size(), k = b.size();
    CMat r(n, CVec(m, CNum(0.0)));
    for (size_t i = 0; i < n; ++i)
        for (size_t l = 0; l < k; ++l)
            for (size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    return r;
}

// A^H A for a rectangular matrix (rows x cols) -> cols x cols Hermitian.
inline CMat gram(const CMat& a) {
    size_t rows = a.size(), cols = a[0].size();
    CMat g(cols, CVec(cols, CNum(0.0)));
    for (size_t i = 0; i < cols; ++i)
        for (size_t j = 0; j < cols; ++j)
            for (size_t r = 0; r < rows; ++r) g[i][j] += conj(a[r][i]) * a[r][j];
    return g;
}

// Gaussian elimination with partial pivoting; throws on an exactly-zero pivot
// column. Near-singular systems are solved as-is (used by inverse iteration).
inline CVec solve_linear(CMat a, CVec b) {
    size_t n = a.size();
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        Real best = abs(a[k][k]);
        for (size_t i = k + 1; i < n; ++i) {
            Real m = abs(a[i][k]);
            if (m > best) { best = m; piv = i; }
        }
        if (best.is_zero()) throw std::domain_error("singular linear system");
        std::swap(a[k], a[piv]);
        std::swap(b[k], b[piv]);
        for (size_t i = k + 1; i < n; ++i) {
            CNum f = a[i][k] / a[k][k];
            if (f.is_zero()) continue;
            for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
            b[i] -= f * b[k];
        }
    }
    CVec x(n, CNum(0.0));
    for (size_t k = n; k-- > 0;) {
        CNum s = b[k];
        for (size_t j = k + 1; j < n; ++j) s -= a[k][j] * x[j];
        x[k] = s / a[k][k];
    }
    return x;
}

inline CNum det_numeric(CMat a) {
    size_t n = a.size();
    CNum d(1.0);
    for (size_t k = 0; k < n; ++k) {
        size_t piv = k;
        Real best = abs(a[k][k]);
        for (size_t i = k + 1; i < n; ++i) {
            Real m = abs(a[i][k]);
            if (m > best) { best = m; piv = i; }
        }
        if (best.is_zero()) return CNum(0.0);
        if (piv != k) { std::swap(a[k], a[piv]); d = -d; }
        d *= a[k][k];
        for (size_t i = k + 1; i < n; ++i) {
            CNum f = a[i][k] / a[k][k];
            for (size_t j = k; j < n; ++j) a[i][j] -= f * a[k][j];
        }
    }
    return d;
}

// Characteristic polynomial coefficients (ascending powers of lambda) via
// Faddeev-LeVerrier; division-free except by integers.
inline std::vector<CNum> char_poly(const CMat& a) {
    size_t n = a.size();
    CMat m(n, CVec(n, CNum(0.0)));
    for (size_t i = 0; i < n; ++i) m[i][i] = CNum(1.0);
    std::vector<CNum> c(n + 1, CNum(0.0));
    c[n] = CNum(1.0);
    CMat am = m;
    for (size_t k = 1; k <= n; ++k) {
        am = mat_mul(a, m);
        CNum tr(0.0);
        for (size_t i = 0; i < n; ++i) tr += am[i][i];
        CNum ck = -(tr / CNum(static_cast<long>(k)));
        c[n - k] = ck;
        m = am;
        for (size_t i = 0; i < n; ++i) m[i][i] += ck;
    }
    return c;
}

// Eigenvalues of a Hermitian PSD matrix, ascending (real parts of the
// characteristic roots).
inline std::vector<Real> hermitian_eigenvalues(const CMat& h, unsigned prec) {
    auto rep = roots_numeric(char_poly(h), prec);
    std::vector<Real> ev;
    for (const auto& r : rep.roots)
        for (int k = 0; k < r.multiplicity; ++k) ev.push_back(r.value.re());
    std::sort(ev.begin(), ev.end());
    return ev;
}

// Smallest singular value and corresponding right singular vector of a
// rectangular matrix (rows >= 1). Vector recovered by inverse iteration on
// the Gram matrix.
inline std::pair<Real, CVec> smallest_singular(const CMat& a, unsigned prec) {
    CMat g = gram(a);
    size_t n = g.size();
    auto ev = hermitian_eigenvalues(g, prec);
    Real lam0 = ev.front();
    if (lam0.sign() < 0) lam0 = Real(0.0);
    Real trace(0.0);
    for (size_t i = 0; i < n; ++i) trace += g[i][i].re();
    Real shift = lam0 + max(trace, Real(1.0)) * pow2(-static_cast<long>(prec) - 16);
    CMat gs = g;
    for (size_t i = 0; i < n; ++i) gs[i][i] -= CNum(shift);
    CVec v(n, CNum(1.0));
    v = vec_normalize(v);
    for (int it = 0; it < 4; ++it) {
        CVec w;
        try {
            w = solve_linear(gs, v);
        } catch (const std::domain_error&) {
            break;  // exactly singular after shift: v already in the kernel
        }
        Real nw = vec_norm(w);
        if (nw.is_zero()) break;
        v = vec_normalize(w);
    }
    return {sqrt(lam0), v};
}

inline Real sigma_min(const CMat& a, unsigned prec) { return smallest_singular(a, prec).first; }

// Stable roots of a quadratic a t^2 + b t + c (a != 0).
inline std::pair<CNum, CNum> solve_quadratic(const CNum& a, const CNum& b, const CNum& c) {
    if (a.is_zero()) throw std::domain_error("quadratic with vanishing leading coefficient");
    CNum disc = b * b - CNum(4.0) * a * c;
    CNum sq = sqrt(disc);
    // pick the sign that avoids cancellation in b + sq
    CNum bp = b + sq, bm = b - sq;
    CNum q = (abs(bp) >= abs(bm)) ? -(bp / CNum(2.0)) : -(bm / CNum(2.0));
    if (q.is_zero()) return {CNum(0.0), -(b / a)};
    return {q / a, c / q};
}

// sin of the principal angle between two projective vectors (0 iff equal
// points of projective space).
inline Real projective_distance(const CVec& u, const CVec& v) {
    Real nu = vec_norm(u), nv = vec_norm(v);
    if (nu.is_zero() || nv.is_zero()) throw std::domain_error("projective distance of zero vector");
    CNum ip = inner(u, v);
    Real c2 = norm2(ip) / (nu * nu * nv * nv);
    Real s2 = Real(1.0) - c2;
    if (s2.sign() < 0) s2 = Real(0.0);
    return sqrt(s2);
}

}  // namespace luroth

#endif
