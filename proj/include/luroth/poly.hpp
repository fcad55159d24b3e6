#ifndef LUROTH_POLY_HPP
#define LUROTH_POLY_HPP

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "luroth/scalar.hpp"

namespace luroth {

using Exp = std::vector<unsigned>;

inline unsigned total_degree(const Exp& e) {
    unsigned d = 0;
    for (unsigned k : e) d += k;
    return d;
}

// Graded lexicographic order on exponent vectors.
struct GradedLex {
    bool operator()(const Exp& a, const Exp& b) const {
        unsigned da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

// Sparse multivariate polynomial over a field K with named variables.
// Zero coefficients are never stored.
template <typename K>
class Poly {
  public:
    using TermMap = std::map<Exp, K, GradedLex>;

    Poly() = default;
    explicit Poly(std::vector<std::string> vars) : vars_(std::move(vars)) {}

    static Poly zero(std::vector<std::string> vars) { return Poly(std::move(vars)); }

    static Poly constant(std::vector<std::string> vars, K c) {
        Poly p(std::move(vars));
        if (!FieldOps<K>::is_zero(c)) p.terms_.emplace(Exp(p.vars_.size(), 0), std::move(c));
        return p;
    }

    static Poly variable(std::vector<std::string> vars, size_t idx, K c = FieldOps<K>::from_long(1)) {
        Poly p(std::move(vars));
        if (idx >= p.vars_.size()) throw std::invalid_argument("variable index out of range");
        if (!FieldOps<K>::is_zero(c)) {
            Exp e(p.vars_.size(), 0);
            e[idx] = 1;
            p.terms_.emplace(std::move(e), std::move(c));
        }
        return p;
    }

    static Poly monomial(std::vector<std::string> vars, Exp e, K c) {
        Poly p(std::move(vars));
        if (e.size() != p.vars_.size()) throw std::invalid_argument("exponent arity mismatch");
        if (!FieldOps<K>::is_zero(c)) p.terms_.emplace(std::move(e), std::move(c));
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }
    size_t nvars() const { return vars_.size(); }
    size_t nterms() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    int degree() const {
        if (terms_.empty()) return -1;
        return static_cast<int>(total_degree(terms_.rbegin()->first));
    }

    int degree_in(size_t var) const {
        int d = -1;
        for (const auto& [e, c] : terms_) d = std::max(d, static_cast<int>(e[var]));
        return d;
    }

    bool is_homogeneous() const {
        if (terms_.empty()) return true;
        unsigned d = total_degree(terms_.begin()->first);
        return d == total_degree(terms_.rbegin()->first);
    }

    size_t var_index(const std::string& name) const {
        for (size_t i = 0; i < vars_.size(); ++i)
            if (vars_[i] == name) return i;
        throw std::invalid_argument("unknown variable: " + name);
    }

    K coeff(const Exp& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? FieldOps<K>::from_long(0) : it->second;
    }

    void add_term(const Exp& e, const K& c) {
        if (e.size() != vars_.size()) throw std::invalid_argument("exponent arity mismatch");
        auto it = terms_.find(e);
        if (it == terms_.end()) {
            if (!FieldOps<K>::is_zero(c)) terms_.emplace(e, c);
        } else {
            it->second += c;
            if (FieldOps<K>::is_zero(it->second)) terms_.erase(it);
        }
    }

    friend Poly operator+(const Poly& a, const Poly& b) {
        a.check_vars(b);
        Poly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, c);
        return r;
    }

    friend Poly operator-(const Poly& a, const Poly& b) {
        a.check_vars(b);
        Poly r = a;
        for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
        return r;
    }

    Poly operator-() const {
        Poly r(vars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }

    friend Poly operator*(const Poly& a, const Poly& b) {
        a.check_vars(b);
        Poly r(a.vars_);
        Exp e(a.vars_.size());
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                r.add_term(e, ca * cb);
            }
        }
        return r;
    }

    friend Poly operator*(const Poly& a, const K& s) {
        Poly r(a.vars_);
        if (FieldOps<K>::is_zero(s)) return r;
        for (const auto& [e, c] : a.terms_) {
            K v = c * s;
            if (!FieldOps<K>::is_zero(v)) r.terms_.emplace(e, std::move(v));
        }
        return r;
    }
    friend Poly operator*(const K& s, const Poly& a) { return a * s; }

    Poly& operator+=(const Poly& o) { *this = *this + o; return *this; }
    Poly& operator-=(const Poly& o) { *this = *this - o; return *this; }
    Poly& operator*=(const Poly& o) { *this = *this * o; return *this; }

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    Poly pow(unsigned n) const {
        Poly r = constant(vars_, FieldOps<K>::from_long(1));
        Poly base = *this;
        while (n) {
            if (n & 1) r = r * base;
            base = base * base;
            n >>= 1;
        }
        return r;
    }

    Poly derivative(size_t var) const {
        Poly r(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[var] == 0) continue;
            Exp d = e;
            d[var] -= 1;
            r.terms_.emplace(std::move(d), c * FieldOps<K>::from_long(e[var]));
        }
        r.prune();
        return r;
    }

    K eval(const std::vector<K>& point) const {
        if (point.size() != vars_.size()) throw std::invalid_argument("evaluation arity mismatch");
        K acc = FieldOps<K>::from_long(0);
        for (const auto& [e, c] : terms_) {
            K t = c;
            for (size_t i = 0; i < e.size(); ++i)
                for (unsigned k = 0; k < e[i]; ++k) t *= point[i];
            acc += t;
        }
        return acc;
    }

    // Substitute polynomials (over the same target variable list) for every variable.
    Poly substitute_all(const std::vector<Poly>& images) const {
        if (images.size() != vars_.size()) throw std::invalid_argument("substitution arity mismatch");
        std::vector<std::string> tv = images.empty() ? vars_ : images[0].vars_;
        for (const auto& im : images)
            if (im.vars_ != tv) throw std::invalid_argument("substitution images disagree on variables");
        Poly r(tv);
        for (const auto& [e, c] : terms_) {
            Poly t = Poly::constant(tv, c);
            for (size_t i = 0; i < e.size(); ++i)
                if (e[i]) t = t * images[i].pow(e[i]);
            r += t;
        }
        return r;
    }

    // Substitute a polynomial (in the same ring) for one variable.
    Poly substitute(size_t var, const Poly& image) const {
        if (image.vars_ != vars_) throw std::invalid_argument("substitution image variable mismatch");
        std::vector<Poly> images;
        images.reserve(vars_.size());
        for (size_t i = 0; i < vars_.size(); ++i) images.push_back(Poly::variable(vars_, i));
        images[var] = image;
        return substitute_all(images);
    }

    // Coefficients as polynomials in the remaining variables: view in `var`.
    std::vector<Poly> coeffs_in(size_t var) const {
        int d = degree_in(var);
        std::vector<Poly> out(static_cast<size_t>(d + 1), Poly(vars_));
        for (const auto& [e, c] : terms_) {
            Exp r = e;
            unsigned k = r[var];
            r[var] = 0;
            out[k].terms_.emplace(std::move(r), c);
        }
        return out;
    }

    // Exact division: throws if `d` does not divide exactly.
    Poly divide_exact(const Poly& d) const {
        check_vars(d);
        if (d.is_zero()) throw std::domain_error("division by zero polynomial");
        Poly r = *this;
        Poly q(vars_);
        const auto& [elt, clt] = *d.terms_.rbegin();
        Exp e(vars_.size());
        while (!r.is_zero()) {
            const auto& [er, cr] = *r.terms_.rbegin();
            for (size_t i = 0; i < e.size(); ++i) {
                if (er[i] < elt[i]) throw std::domain_error("inexact polynomial division");
                e[i] = er[i] - elt[i];
            }
            K c = cr / clt;
            Poly t = Poly::monomial(vars_, e, c);
            q += t;
            r -= t * d;
        }
        return q;
    }

    Real max_coeff_magnitude() const {
        Real m(0.0);
        for (const auto& [e, c] : terms_) m = max(m, FieldOps<K>::magnitude(c));
        return m;
    }

    // Drop terms of magnitude below eps (numeric cleanup; no-op threshold 0).
    void prune_small(const Real& eps) {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (FieldOps<K>::magnitude(it->second) < eps) it = terms_.erase(it);
            else ++it;
        }
    }

    std::string str() const {
        if (terms_.empty()) return "0";
        std::string out;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first) out += " + ";
            first = false;
            out += coeff_str(it->second);
            for (size_t i = 0; i < it->first.size(); ++i) {
                if (it->first[i] == 0) continue;
                out += "*" + vars_[i];
                if (it->first[i] > 1) out += "^" + std::to_string(it->first[i]);
            }
        }
        return out;
    }

  private:
    static std::string coeff_str(const Rat& c) { return c.get_str(); }
    static std::string coeff_str(const CNum& c) { return "(" + c.str() + ")"; }

    void check_vars(const Poly& o) const {
        if (vars_ != o.vars_) throw std::invalid_argument("polynomial variable lists differ");
    }

    void prune() {
        for (auto it = terms_.begin(); it != terms_.end();) {
            if (FieldOps<K>::is_zero(it->second)) it = terms_.erase(it);
            else ++it;
        }
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

template <typename K>
Poly<CNum> to_cnum_poly(const Poly<K>& p) {
    Poly<CNum> r(p.vars());
    for (const auto& [e, c] : p.terms()) r.add_term(e, to_cnum(c));
    return r;
}

inline const Poly<CNum>& to_cnum_poly(const Poly<CNum>& p) { return p; }

}  // namespace luroth

#endif
