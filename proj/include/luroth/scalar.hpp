#ifndef LUROTH_SCALAR_HPP
#define LUROTH_SCALAR_HPP

#include <gmpxx.h>
#include <mpfr.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

namespace luroth {

// Exact arbitrary-precision rational.
using Rat = mpq_class;

inline std::string to_string(const Rat& q) { return q.get_str(); }

inline Rat rat_from_string(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw std::invalid_argument("bad rational literal: " + s);
    q.canonicalize();
    return q;
}

// Thread-local default precision (bits) for newly created Real values.
unsigned default_precision();
void set_default_precision(unsigned bits);

// RAII precision scope.
class PrecScope {
  public:
    explicit PrecScope(unsigned bits) : saved_(default_precision()) { set_default_precision(bits); }
    ~PrecScope() { set_default_precision(saved_); }
    PrecScope(const PrecScope&) = delete;
    PrecScope& operator=(const PrecScope&) = delete;

  private:
    unsigned saved_;
};

// Arbitrary-precision real, RAII over mpfr_t. Binary operations round at
// the larger of the operand precisions.
class Real {
  public:
    Real() : Real(0.0) {}
    explicit Real(unsigned prec, int) { mpfr_init2(x_, prec); mpfr_set_zero(x_, 1); }
    Real(double d) { mpfr_init2(x_, default_precision()); mpfr_set_d(x_, d, MPFR_RNDN); }
    Real(long n) { mpfr_init2(x_, default_precision()); mpfr_set_si(x_, n, MPFR_RNDN); }
    Real(int n) : Real(static_cast<long>(n)) {}
    Real(const Rat& q) { mpfr_init2(x_, default_precision()); mpfr_set_q(x_, q.get_mpq_t(), MPFR_RNDN); }
    Real(const Real& o) { mpfr_init2(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
    Real(Real&& o) noexcept {
        mpfr_init2(x_, 2);
        mpfr_swap(x_, o.x_);
    }
    Real& operator=(const Real& o) {
        if (this != &o) { mpfr_set_prec(x_, mpfr_get_prec(o.x_)); mpfr_set(x_, o.x_, MPFR_RNDN); }
        return *this;
    }
    Real& operator=(Real&& o) noexcept {
        mpfr_swap(x_, o.x_);
        return *this;
    }
    ~Real() { mpfr_clear(x_); }

    static Real from_string(const std::string& s, unsigned prec = 0) {
        Real r(prec ? prec : default_precision(), 0);
        if (mpfr_set_str(r.x_, s.c_str(), 10, MPFR_RNDN) != 0)
            throw std::invalid_argument("bad real literal: " + s);
        return r;
    }

    unsigned prec() const { return static_cast<unsigned>(mpfr_get_prec(x_)); }
    const mpfr_t& raw() const { return x_; }
    mpfr_t& raw() { return x_; }

    bool is_zero() const { return mpfr_zero_p(x_) != 0; }
    int sign() const { return mpfr_sgn(x_); }
    double to_double() const { return mpfr_get_d(x_, MPFR_RNDN); }

    friend Real operator+(const Real& a, const Real& b) { Real r(join(a, b), 0); mpfr_add(r.x_, a.x_, b.x_, MPFR_RNDN); return r; }
    friend Real operator-(const Real& a, const Real& b) { Real r(join(a, b), 0); mpfr_sub(r.x_, a.x_, b.x_, MPFR_RNDN); return r; }
    friend Real operator*(const Real& a, const Real& b) { Real r(join(a, b), 0); mpfr_mul(r.x_, a.x_, b.x_, MPFR_RNDN); return r; }
    friend Real operator/(const Real& a, const Real& b) { Real r(join(a, b), 0); mpfr_div(r.x_, a.x_, b.x_, MPFR_RNDN); return r; }
    Real operator-() const { Real r(prec(), 0); mpfr_neg(r.x_, x_, MPFR_RNDN); return r; }
    Real& operator+=(const Real& o) { mpfr_prec_round(x_, join(*this, o), MPFR_RNDN); mpfr_add(x_, x_, o.x_, MPFR_RNDN); return *this; }
    Real& operator-=(const Real& o) { mpfr_prec_round(x_, join(*this, o), MPFR_RNDN); mpfr_sub(x_, x_, o.x_, MPFR_RNDN); return *this; }
    Real& operator*=(const Real& o) { mpfr_prec_round(x_, join(*this, o), MPFR_RNDN); mpfr_mul(x_, x_, o.x_, MPFR_RNDN); return *this; }
    Real& operator/=(const Real& o) { mpfr_prec_round(x_, join(*this, o), MPFR_RNDN); mpfr_div(x_, x_, o.x_, MPFR_RNDN); return *this; }

    friend bool operator==(const Real& a, const Real& b) { return mpfr_equal_p(a.x_, b.x_) != 0; }
    friend bool operator!=(const Real& a, const Real& b) { return !(a == b); }
    friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.x_, b.x_) != 0; }
    friend bool operator<=(const Real& a, const Real& b) { return mpfr_lessequal_p(a.x_, b.x_) != 0; }
    friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.x_, b.x_) != 0; }
    friend bool operator>=(const Real& a, const Real& b) { return mpfr_greaterequal_p(a.x_, b.x_) != 0; }

    friend Real abs(const Real& a) { Real r(a.prec(), 0); mpfr_abs(r.x_, a.x_, MPFR_RNDN); return r; }
    friend Real sqrt(const Real& a) { Real r(a.prec(), 0); mpfr_sqrt(r.x_, a.x_, MPFR_RNDN); return r; }
    friend Real hypot(const Real& a, const Real& b) { Real r(join(a, b), 0); mpfr_hypot(r.x_, a.x_, b.x_, MPFR_RNDN); return r; }
    friend Real max(const Real& a, const Real& b) { return a < b ? b : a; }
    friend Real min(const Real& a, const Real& b) { return a < b ? a : b; }

    std::string str(int digits10 = 0) const;

  private:
    static mpfr_prec_t join(const Real& a, const Real& b) {
        mpfr_prec_t pa = mpfr_get_prec(a.x_), pb = mpfr_get_prec(b.x_);
        return pa > pb ? pa : pb;
    }
    mpfr_t x_;
};

inline Real pow2(long e) {
    Real r;
    mpfr_set_ui_2exp(r.raw(), 1, e, MPFR_RNDN);
    return r;
}

// Complex value over Real. Mirrors the precision semantics of Real.
class CNum {
  public:
    CNum() : re_(), im_() {}
    CNum(Real re) : re_(std::move(re)), im_() {}
    CNum(Real re, Real im) : re_(std::move(re)), im_(std::move(im)) {}
    CNum(double d) : re_(d), im_() {}
    CNum(long n) : re_(n), im_() {}
    CNum(int n) : re_(static_cast<long>(n)), im_() {}
    CNum(const Rat& q) : re_(q), im_() {}

    const Real& re() const { return re_; }
    const Real& im() const { return im_; }
    Real& re() { return re_; }
    Real& im() { return im_; }

    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }

    friend CNum operator+(const CNum& a, const CNum& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
    friend CNum operator-(const CNum& a, const CNum& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
    friend CNum operator*(const CNum& a, const CNum& b) {
        return {a.re_ * b.re_ - a.im_ * b.im_, a.re_ * b.im_ + a.im_ * b.re_};
    }
    friend CNum operator/(const CNum& a, const CNum& b) {
        Real d = b.re_ * b.re_ + b.im_ * b.im_;
        return {(a.re_ * b.re_ + a.im_ * b.im_) / d, (a.im_ * b.re_ - a.re_ * b.im_) / d};
    }
    CNum operator-() const { return {-re_, -im_}; }
    CNum& operator+=(const CNum& o) { re_ += o.re_; im_ += o.im_; return *this; }
    CNum& operator-=(const CNum& o) { re_ -= o.re_; im_ -= o.im_; return *this; }
    CNum& operator*=(const CNum& o) { *this = *this * o; return *this; }
    CNum& operator/=(const CNum& o) { *this = *this / o; return *this; }

    friend bool operator==(const CNum& a, const CNum& b) { return a.re_ == b.re_ && a.im_ == b.im_; }
    friend bool operator!=(const CNum& a, const CNum& b) { return !(a == b); }

    friend CNum conj(const CNum& a) { return {a.re_, -a.im_}; }
    friend Real abs(const CNum& a) { return hypot(a.re_, a.im_); }
    friend Real norm2(const CNum& a) { return a.re_ * a.re_ + a.im_ * a.im_; }
    friend CNum sqrt(const CNum& a);

    std::string str(int digits10 = 0) const;

  private:
    Real re_, im_;
};

// Field adapters so templated code can treat Rat and CNum uniformly.
template <typename K>
struct FieldOps;

template <>
struct FieldOps<Rat> {
    static constexpr bool exact = true;
    static bool is_zero(const Rat& x) { return x == 0; }
    static Rat from_rat(const Rat& q) { return q; }
    static Rat from_long(long n) { return Rat(n); }
    static Real magnitude(const Rat& x) { return abs(Real(x)); }
};

template <>
struct FieldOps<CNum> {
    static constexpr bool exact = false;
    static bool is_zero(const CNum& x) { return x.is_zero(); }
    static CNum from_rat(const Rat& q) { return CNum(q); }
    static CNum from_long(long n) { return CNum(static_cast<long>(n)); }
    static Real magnitude(const CNum& x) { return abs(x); }
};

inline CNum to_cnum(const Rat& q) { return CNum(q); }
inline const CNum& to_cnum(const CNum& z) { return z; }

}  // namespace luroth

#endif
