#ifndef LUROTH_ROOTS_HPP
#define LUROTH_ROOTS_HPP

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "luroth/resultant.hpp"

namespace luroth {

struct Root {
    CNum value;
    int multiplicity = 1;
    Real residual;  // |f(value)| relative to the coefficient norm
};

struct RootsReport {
    std::vector<Root> roots;
    unsigned precision_bits = 0;
    bool converged = true;
    int degree = 0;
};

namespace rootdetail {

inline Real const_pi(unsigned prec) {
    Real r(prec, 0);
    mpfr_const_pi(r.raw(), MPFR_RNDN);
    return r;
}

inline Real cos_r(const Real& x) {
    Real r(x.prec(), 0);
    mpfr_cos(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

inline Real sin_r(const Real& x) {
    Real r(x.prec(), 0);
    mpfr_sin(r.raw(), x.raw(), MPFR_RNDN);
    return r;
}

inline CNum horner(const std::vector<CNum>& c, const CNum& z) {
    CNum acc = c.back();
    for (size_t k = c.size() - 1; k-- > 0;) acc = acc * z + c[k];
    return acc;
}

// Aberth-Ehrlich simultaneous iteration; coefficients ascending, c.back() != 0.
// Returns the deg roots, converged flag set on the report by the caller.
inline std::vector<CNum> aberth(const std::vector<CNum>& c, unsigned wprec, bool& converged) {
    PrecScope ps(wprec);
    size_t n = c.size() - 1;
    std::vector<CNum> cw(c.begin(), c.end());
    for (auto& x : cw) x = CNum(Real(0.0) + x.re(), Real(0.0) + x.im());  // bump to working precision
    std::vector<CNum> dw(n);
    for (size_t k = 1; k <= n; ++k) dw[k - 1] = cw[k] * CNum(static_cast<long>(k));

    // Fujiwara root bound: 2 max_k |c_{n-k}/c_n|^(1/k)
    Real lcm = abs(cw[n]);
    Real radius(0.0);
    for (size_t k = 1; k <= n; ++k) {
        Real q = abs(cw[n - k]) / lcm;
        Real rk(wprec, 0);
        mpfr_rootn_ui(rk.raw(), q.raw(), static_cast<unsigned long>(k), MPFR_RNDN);
        radius = max(radius, rk);
    }
    radius = radius * Real(2.0) + Real(1.0);
    CNum center = -(cw[n - 1] / (cw[n] * CNum(static_cast<long>(n))));

    Real pi = const_pi(wprec);
    std::vector<CNum> z(n);
    for (size_t k = 0; k < n; ++k) {
        Real theta = (Real(2.0) * pi * Real(static_cast<long>(k)) + Real(0.853)) / Real(static_cast<long>(n));
        z[k] = center + CNum(radius * cos_r(theta), radius * sin_r(theta));
    }

    Real tol = pow2(-static_cast<long>(wprec) + 6);
    // Multiple roots plateau near sqrt(eps): accept a stagnating step there.
    Real plateau = pow2(-static_cast<long>(wprec) / 3);
    converged = false;
    Real best_step(-1.0);
    int stagnant = 0;
    for (int iter = 0; iter < 4000 && !converged; ++iter) {
        Real step_max(0.0);
        for (size_t k = 0; k < n; ++k) {
            CNum p = horner(cw, z[k]);
            if (abs(p).is_zero()) continue;
            CNum dp = horner(dw, z[k]);
            if (dp.is_zero()) {
                z[k] += CNum(tol, tol);
                step_max = max(step_max, Real(1.0));
                continue;
            }
            CNum w = p / dp;
            CNum s(0.0);
            for (size_t j = 0; j < n; ++j)
                if (j != k) s += CNum(1.0) / (z[k] - z[j]);
            CNum denom = CNum(1.0) - w * s;
            CNum delta = denom.is_zero() ? w : w / denom;
            z[k] -= delta;
            step_max = max(step_max, abs(delta) / max(Real(1.0), abs(z[k])));
        }
        if (step_max < tol) {
            converged = true;
            break;
        }
        if (best_step.sign() < 0 || step_max < best_step * Real(0.5)) {
            best_step = max(step_max, Real(0.0));
            stagnant = 0;
        } else {
            ++stagnant;
        }
        if (stagnant >= 30 && step_max < plateau) converged = true;
    }
    return z;
}

inline Real cluster_radius(unsigned prec) {
    // 10^(-0.15 * prec)
    Real r(prec, 0);
    mpfr_set_d(r.raw(), -0.15 * static_cast<double>(prec), MPFR_RNDN);
    Real out(prec, 0);
    mpfr_ui_pow(out.raw(), 10, r.raw(), MPFR_RNDN);
    return out;
}

// Group values within `radius` (single-linkage) and average each cluster.
inline std::vector<Root> cluster(const std::vector<CNum>& z, const Real& radius) {
    size_t n = z.size();
    std::vector<int> parent(n);
    for (size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
    auto find = [&](int a) {
        while (parent[a] != a) a = parent[a] = parent[parent[a]];
        return a;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (abs(z[i] - z[j]) < radius) parent[find(static_cast<int>(j))] = find(static_cast<int>(i));
    std::vector<Root> out;
    std::vector<bool> seen(n, false);
    for (size_t i = 0; i < n; ++i) {
        int r = find(static_cast<int>(i));
        if (seen[static_cast<size_t>(r)]) continue;
        seen[static_cast<size_t>(r)] = true;
        CNum sum(0.0);
        int count = 0;
        for (size_t j = 0; j < n; ++j)
            if (find(static_cast<int>(j)) == r) { sum += z[j]; ++count; }
        out.push_back({sum / CNum(static_cast<long>(count)), count, Real(0.0)});
    }
    std::sort(out.begin(), out.end(), [](const Root& a, const Root& b) {
        if (a.value.re() != b.value.re()) return a.value.re() < b.value.re();
        return a.value.im() < b.value.im();
    });
    return out;
}

inline void fill_residuals(std::vector<Root>& roots, const std::vector<CNum>& c) {
    Real norm(0.0);
    for (const auto& x : c) norm = max(norm, abs(x));
    for (auto& r : roots) {
        Real scale = norm;
        Real az = max(Real(1.0), abs(r.value));
        for (size_t k = 1; k < c.size(); ++k) scale = scale * az;
        r.residual = abs(horner(c, r.value)) / scale;
    }
}

}  // namespace rootdetail

// All complex roots with multiplicity estimates. Numeric coefficients:
// Aberth at elevated working precision, clusters within 10^(-0.15 prec).
inline RootsReport roots_numeric(const std::vector<CNum>& coeffs, unsigned prec) {
    std::vector<CNum> c = coeffs;
    while (!c.empty() && c.back().is_zero()) c.pop_back();
    if (c.empty()) throw std::domain_error("roots of the zero polynomial");
    RootsReport rep;
    rep.precision_bits = prec;
    rep.degree = static_cast<int>(c.size()) - 1;
    int zero_mult = 0;
    while (c.front().is_zero()) {
        c.erase(c.begin());
        ++zero_mult;
    }
    std::vector<CNum> z;
    if (c.size() > 1) {
        unsigned wprec = std::max(2 * prec, prec + 64);
        z = rootdetail::aberth(c, wprec, rep.converged);
    }
    rep.roots = rootdetail::cluster(z, rootdetail::cluster_radius(prec));
    if (zero_mult > 0) rep.roots.insert(rep.roots.begin(), Root{CNum(0.0), zero_mult, Real(0.0)});
    rootdetail::fill_residuals(rep.roots, coeffs);
    return rep;
}

inline RootsReport roots_numeric(const Poly<CNum>& f, unsigned prec, size_t var = 0) {
    return roots_numeric(univariate_coeffs(f, var), prec);
}

// Exact coefficients: Yun squarefree decomposition first, so every Aberth run
// sees simple roots and multiplicities are exact.
inline RootsReport roots_numeric(const Poly<Rat>& f, unsigned prec, size_t var = 0) {
    if (f.is_zero()) throw std::domain_error("roots of the zero polynomial");
    RootsReport rep;
    rep.precision_bits = prec;
    rep.degree = f.degree_in(var);
    rep.converged = true;
    auto factors = squarefree_decomposition(f, var);
    unsigned wprec = std::max(2 * prec, prec + 64);
    for (size_t i = 0; i < factors.size(); ++i) {
        if (factors[i].degree_in(var) <= 0) continue;
        auto rc = univariate_coeffs(factors[i], var);
        std::vector<CNum> c(rc.size());
        {
            PrecScope ps(wprec);
            for (size_t k = 0; k < rc.size(); ++k) c[k] = CNum(rc[k]);
        }
        bool conv = false;
        auto z = rootdetail::aberth(c, wprec, conv);
        rep.converged = rep.converged && conv;
        for (const auto& zv : z) rep.roots.push_back({zv, static_cast<int>(i + 1), Real(0.0)});
    }
    std::sort(rep.roots.begin(), rep.roots.end(), [](const Root& a, const Root& b) {
        if (a.value.re() != b.value.re()) return a.value.re() < b.value.re();
        return a.value.im() < b.value.im();
    });
    auto rc = univariate_coeffs(f, var);
    std::vector<CNum> c(rc.size());
    for (size_t k = 0; k < rc.size(); ++k) c[k] = CNum(rc[k]);
    rootdetail::fill_residuals(rep.roots, c);
    return rep;
}

}  // namespace luroth

#endif
