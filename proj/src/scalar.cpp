#include "luroth/scalar.hpp"

#include <cmath>
#include <cstdio>

namespace luroth {

namespace {
thread_local unsigned g_default_prec = 128;
}

unsigned default_precision() { return g_default_prec; }

void set_default_precision(unsigned bits) {
    if (bits < 24) throw std::invalid_argument("precision below 24 bits");
    g_default_prec = bits;
}

std::string Real::str(int digits10) const {
    if (digits10 <= 0) digits10 = static_cast<int>(prec() * 0.30103) + 2;
    char* s = nullptr;
    mpfr_asprintf(&s, "%.*Rg", digits10, x_);
    std::string out(s);
    mpfr_free_str(s);
    return out;
}

CNum sqrt(const CNum& a) {
    // Stable complex square root via the half-angle identities.
    if (a.im().is_zero()) {
        if (a.re().sign() >= 0) return CNum(sqrt(a.re()));
        return CNum(Real(0.0), sqrt(-a.re()));
    }
    Real m = abs(a);
    Real half(0.5);
    Real w = sqrt((m + a.re()) * half);
    if (w.is_zero()) return CNum(Real(0.0), sqrt(m));
    Real v = a.im() / (w + w);
    return CNum(w, v);
}

std::string CNum::str(int digits10) const {
    std::string r = re_.str(digits10);
    if (im_.is_zero()) return r;
    std::string i = im_.str(digits10);
    if (!i.empty() && i[0] == '-') return r + i + "i";
    return r + "+" + i + "i";
}

}  // namespace luroth
