#ifndef LUROTH_RESULTANT_HPP
#define LUROTH_RESULTANT_HPP

#include <stdexcept>
#include <vector>

#include "luroth/polymatrix.hpp"

namespace luroth {

// Sylvester resultant of f and g eliminating `var`. Entries of the Sylvester
// matrix are polynomials in the remaining variables; the determinant is taken
// fraction-free.
template <typename K>
Poly<K> resultant(const Poly<K>& f, const Poly<K>& g, size_t var) {
    if (f.is_zero() || g.is_zero()) throw std::domain_error("resultant of zero polynomial");
    int m = f.degree_in(var), n = g.degree_in(var);
    auto fc = f.coeffs_in(var);
    auto gc = g.coeffs_in(var);
    if (m == 0 && n == 0) return Poly<K>::constant(f.vars(), FieldOps<K>::from_long(1));
    if (m == 0) return fc[0].pow(static_cast<unsigned>(n));
    if (n == 0) return gc[0].pow(static_cast<unsigned>(m));

    size_t size = static_cast<size_t>(m + n);
    PolyMatrix<K> syl(size, size, f.vars());
    for (int r = 0; r < n; ++r)
        for (int k = 0; k <= m; ++k) syl.at(r, r + k) = fc[static_cast<size_t>(m - k)];
    for (int r = 0; r < m; ++r)
        for (int k = 0; k <= n; ++k) syl.at(n + r, r + k) = gc[static_cast<size_t>(n - k)];
    return det(syl);
}

template <typename K>
Poly<K> resultant(const Poly<K>& f, const Poly<K>& g, const std::string& var) {
    return resultant(f, g, f.var_index(var));
}

// --- univariate helpers (polynomials expected univariate in vars()[0]) ---

template <typename K>
std::vector<K> univariate_coeffs(const Poly<K>& f, size_t var = 0) {
    for (size_t i = 0; i < f.nvars(); ++i)
        if (i != var && f.degree_in(i) > 0) throw std::invalid_argument("polynomial not univariate");
    int d = f.degree_in(var);
    std::vector<K> c(static_cast<size_t>(d + 1), FieldOps<K>::from_long(0));
    for (const auto& [e, v] : f.terms()) c[e[var]] = v;
    return c;
}

template <typename K>
Poly<K> from_univariate_coeffs(const std::vector<K>& c, std::vector<std::string> vars, size_t var = 0) {
    Poly<K> p(vars);
    Exp e(vars.size(), 0);
    for (size_t k = 0; k < c.size(); ++k) {
        e[var] = static_cast<unsigned>(k);
        p.add_term(e, c[k]);
    }
    return p;
}

// Monic gcd of univariate polynomials over an exact field.
inline Poly<Rat> gcd_univariate(Poly<Rat> a, Poly<Rat> b, size_t var = 0) {
    auto make_monic = [var](Poly<Rat>& p) {
        if (p.is_zero()) return;
        auto c = univariate_coeffs(p, var);
        Rat lc = c.back();
        p = p * Rat(1 / lc);
    };
    auto rem = [var](const Poly<Rat>& f, const Poly<Rat>& g) {
        auto fc = univariate_coeffs(f, var);
        auto gc = univariate_coeffs(g, var);
        int dg = static_cast<int>(gc.size()) - 1;
        while (static_cast<int>(fc.size()) - 1 >= dg) {
            int df = static_cast<int>(fc.size()) - 1;
            Rat q = fc.back() / gc.back();
            for (int k = 0; k <= dg; ++k) fc[static_cast<size_t>(df - dg + k)] -= q * gc[static_cast<size_t>(k)];
            while (!fc.empty() && fc.back() == 0) fc.pop_back();
            if (fc.empty()) break;
        }
        return from_univariate_coeffs(fc, f.vars(), var);
    };
    while (!b.is_zero()) {
        Poly<Rat> r = rem(a, b);
        a = b;
        b = r;
    }
    make_monic(a);
    return a;
}

// Yun squarefree decomposition: returns factors f_1, f_2, ... with
// f = c * prod f_i^i, each f_i squarefree and monic.
inline std::vector<Poly<Rat>> squarefree_decomposition(const Poly<Rat>& f, size_t var = 0) {
    std::vector<Poly<Rat>> out;
    if (f.is_zero() || f.degree_in(var) <= 0) return out;
    Poly<Rat> fp = f.derivative(var);
    Poly<Rat> g = gcd_univariate(f, fp, var);
    Poly<Rat> b = f.divide_exact(g);  // product of distinct factors
    Poly<Rat> d = fp.divide_exact(g) - b.derivative(var);
    while (b.degree_in(var) > 0) {
        Poly<Rat> a = gcd_univariate(b, d, var);
        out.push_back(a);
        b = b.divide_exact(a);
        d = d.divide_exact(a) - b.derivative(var);
    }
    return out;
}

}  // namespace luroth

#endif
