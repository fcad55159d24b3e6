#ifndef LUROTH_GEOMETRY_HPP
#define LUROTH_GEOMETRY_HPP

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

#include "luroth/linalg.hpp"
#include "luroth/poly.hpp"

namespace luroth {

inline constexpr double kIncidenceTol = 1e-8;  // relative, numeric mode

template <typename K>
struct PointP3 {
    std::array<K, 4> x;
    const K& operator[](size_t i) const { return x[i]; }
    K& operator[](size_t i) { return x[i]; }
};

template <typename K>
struct PlaneP3 {
    std::array<K, 4> c;  // covector of the linear form
    const K& operator[](size_t i) const { return c[i]; }
    K& operator[](size_t i) { return c[i]; }
};

// Line as a spanning point pair with cached Pluecker coordinates
// (p01, p02, p03, p12, p13, p23).
template <typename K>
struct LineP3 {
    PointP3<K> a, b;
    std::array<K, 6> pl;
};

template <typename K>
struct HexPoint {
    std::array<K, 6> z;
};

namespace geomdetail {

template <typename K>
Real scale_of(const std::array<K, 4>& v) {
    Real m(0.0);
    for (const auto& x : v) m = max(m, FieldOps<K>::magnitude(x));
    return m;
}

template <typename K>
bool near_zero(const K& x, const Real& scale) {
    if constexpr (FieldOps<K>::exact) {
        (void)scale;
        return FieldOps<K>::is_zero(x);
    } else {
        return FieldOps<K>::magnitude(x) <= Real(kIncidenceTol) * max(scale, Real(1e-300));
    }
}

}  // namespace geomdetail

template <typename K>
std::array<K, 6> plucker_of(const PointP3<K>& a, const PointP3<K>& b) {
    auto d = [&](size_t i, size_t j) -> K { return a[i] * b[j] - a[j] * b[i]; };
    return {d(0, 1), d(0, 2), d(0, 3), d(1, 2), d(1, 3), d(2, 3)};
}

template <typename K>
K plucker_relation(const std::array<K, 6>& p) {
    return p[0] * p[5] - p[1] * p[4] + p[2] * p[3];
}

// Pairing that vanishes exactly when two lines meet.
template <typename K>
K line_pairing(const std::array<K, 6>& p, const std::array<K, 6>& q) {
    return p[0] * q[5] - p[1] * q[4] + p[2] * q[3] + p[5] * q[0] - p[4] * q[1] + p[3] * q[2];
}

template <typename K>
K plane_point(const PlaneP3<K>& pi, const PointP3<K>& p) {
    K s = FieldOps<K>::from_long(0);
    for (size_t i = 0; i < 4; ++i) s += pi[i] * p[i];
    return s;
}

template <typename K>
bool points_equal(const PointP3<K>& p, const PointP3<K>& q) {
    // projective equality: all 2x2 minors vanish
    Real s = geomdetail::scale_of<K>(p.x) * geomdetail::scale_of<K>(q.x);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            if (!geomdetail::near_zero<K>(p[i] * q[j] - p[j] * q[i], s)) return false;
    return true;
}

template <typename K>
bool planes_equal(const PlaneP3<K>& p, const PlaneP3<K>& q) {
    Real s = geomdetail::scale_of<K>(p.c) * geomdetail::scale_of<K>(q.c);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i + 1; j < 4; ++j)
            if (!geomdetail::near_zero<K>(p[i] * q[j] - p[j] * q[i], s)) return false;
    return true;
}

template <typename K>
LineP3<K> span_line(const PointP3<K>& a, const PointP3<K>& b) {
    if (points_equal(a, b)) throw std::domain_error("degenerate span: coincident points");
    return LineP3<K>{a, b, plucker_of(a, b)};
}

// Plane through three points via the 3x4 cofactor covector.
template <typename K>
PlaneP3<K> span_plane(const PointP3<K>& p, const PointP3<K>& q, const PointP3<K>& r) {
    auto det3 = [&](size_t c0, size_t c1, size_t c2) -> K {
        return p[c0] * (q[c1] * r[c2] - q[c2] * r[c1]) - p[c1] * (q[c0] * r[c2] - q[c2] * r[c0]) +
               p[c2] * (q[c0] * r[c1] - q[c1] * r[c0]);
    };
    PlaneP3<K> pi;
    pi.c = {det3(1, 2, 3), -det3(0, 2, 3), det3(0, 1, 3), -det3(0, 1, 2)};
    Real s = geomdetail::scale_of<K>(p.x) * geomdetail::scale_of<K>(q.x) * geomdetail::scale_of<K>(r.x);
    bool all_zero = true;
    for (const auto& c : pi.c)
        if (!geomdetail::near_zero<K>(c, s)) all_zero = false;
    if (all_zero) throw std::domain_error("degenerate span: collinear points");
    return pi;
}

template <typename K>
bool point_on_plane(const PointP3<K>& p, const PlaneP3<K>& pi) {
    Real s = geomdetail::scale_of<K>(p.x) * geomdetail::scale_of<K>(pi.c);
    return geomdetail::near_zero<K>(plane_point(pi, p), s);
}

template <typename K>
bool point_on_line(const PointP3<K>& p, const LineP3<K>& l) {
    // rank([p; a; b]) <= 2: all 3x3 minors of the 3x4 stack vanish
    Real s = geomdetail::scale_of<K>(p.x) * geomdetail::scale_of<K>(l.a.x) * geomdetail::scale_of<K>(l.b.x);
    const auto& a = l.a;
    const auto& b = l.b;
    for (size_t c0 = 0; c0 < 4; ++c0)
        for (size_t c1 = c0 + 1; c1 < 4; ++c1)
            for (size_t c2 = c1 + 1; c2 < 4; ++c2) {
                K d = p[c0] * (a[c1] * b[c2] - a[c2] * b[c1]) - p[c1] * (a[c0] * b[c2] - a[c2] * b[c0]) +
                      p[c2] * (a[c0] * b[c1] - a[c1] * b[c0]);
                if (!geomdetail::near_zero<K>(d, s)) return false;
            }
    return true;
}

template <typename K>
bool line_in_plane(const LineP3<K>& l, const PlaneP3<K>& pi) {
    return point_on_plane(l.a, pi) && point_on_plane(l.b, pi);
}

template <typename K>
bool lines_meet(const LineP3<K>& l, const LineP3<K>& m) {
    Real s(0.0), t(0.0);
    for (const auto& x : l.pl) s = max(s, FieldOps<K>::magnitude(x));
    for (const auto& x : m.pl) t = max(t, FieldOps<K>::magnitude(x));
    return geomdetail::near_zero<K>(line_pairing(l.pl, m.pl), s * t);
}

// Intersection of a plane and a line not contained in it.
template <typename K>
PointP3<K> plane_meet_line(const PlaneP3<K>& pi, const LineP3<K>& l) {
    K da = plane_point(pi, l.a);
    K db = plane_point(pi, l.b);
    Real s = geomdetail::scale_of<K>(pi.c) *
             max(geomdetail::scale_of<K>(l.a.x), geomdetail::scale_of<K>(l.b.x));
    if (geomdetail::near_zero<K>(da, s) && geomdetail::near_zero<K>(db, s))
        throw std::domain_error("plane contains the line; meet is not a point");
    PointP3<K> p;
    for (size_t i = 0; i < 4; ++i) p[i] = db * l.a[i] - da * l.b[i];
    return p;
}

namespace geomdetail {

inline PointP3<Rat> intersection_exact(const LineP3<Rat>& l, const LineP3<Rat>& m) {
    // alpha l.a + beta l.b = gamma m.a + delta m.b: exact 4x4 nullspace
    std::array<std::array<Rat, 4>, 4> cols = {l.a.x, l.b.x, m.a.x, m.b.x};
    // Gaussian elimination on the 4x4 matrix whose columns are cols
    std::array<std::array<Rat, 4>, 4> a;
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) a[i][j] = cols[j][i];
    std::array<int, 4> pivot_col{-1, -1, -1, -1};
    size_t rank = 0;
    for (size_t col = 0; col < 4 && rank < 4; ++col) {
        size_t piv = rank;
        while (piv < 4 && a[piv][col] == 0) ++piv;
        if (piv == 4) continue;
        std::swap(a[rank], a[piv]);
        for (size_t i = 0; i < 4; ++i) {
            if (i == rank || a[i][col] == 0) continue;
            Rat f = a[i][col] / a[rank][col];
            for (size_t j = 0; j < 4; ++j) a[i][j] -= f * a[rank][j];
        }
        pivot_col[rank] = static_cast<int>(col);
        ++rank;
    }
    if (rank == 4) throw std::domain_error("lines are skew; no intersection");
    // free column = first non-pivot
    std::array<bool, 4> is_pivot{false, false, false, false};
    for (size_t r = 0; r < rank; ++r) is_pivot[static_cast<size_t>(pivot_col[r])] = true;
    size_t free_col = 0;
    while (is_pivot[free_col]) ++free_col;
    std::array<Rat, 4> ns{0, 0, 0, 0};
    ns[free_col] = 1;
    for (size_t r = 0; r < rank; ++r) {
        size_t pc = static_cast<size_t>(pivot_col[r]);
        ns[pc] = -a[r][free_col] / a[r][pc];
    }
    PointP3<Rat> p;
    for (size_t i = 0; i < 4; ++i) p[i] = ns[0] * l.a[i] + ns[1] * l.b[i];
    bool zero = (p[0] == 0 && p[1] == 0 && p[2] == 0 && p[3] == 0);
    if (zero)
        for (size_t i = 0; i < 4; ++i) p[i] = ns[2] * m.a[i] + ns[3] * m.b[i];
    return p;
}

inline PointP3<CNum> intersection_numeric(const LineP3<CNum>& l, const LineP3<CNum>& m, unsigned prec) {
    CMat a(4, CVec(4, CNum(0.0)));
    for (size_t i = 0; i < 4; ++i) {
        a[i][0] = l.a[i];
        a[i][1] = l.b[i];
        a[i][2] = m.a[i];
        a[i][3] = m.b[i];
    }
    auto [sv, ns] = smallest_singular(a, prec);
    PointP3<CNum> p;
    for (size_t i = 0; i < 4; ++i) p[i] = ns[0] * l.a[i] + ns[1] * l.b[i];
    Real pm(0.0);
    for (const auto& x : p.x) pm = max(pm, abs(x));
    if (pm.is_zero() || pm < Real(kIncidenceTol))
        for (size_t i = 0; i < 4; ++i) p[i] = ns[2] * m.a[i] + ns[3] * m.b[i];
    return p;
}

}  // namespace geomdetail

// Intersection point of two distinct meeting lines.
template <typename K>
PointP3<K> line_intersection(const LineP3<K>& l, const LineP3<K>& m, unsigned prec = 0) {
    if (!lines_meet(l, m)) throw std::domain_error("lines are skew; no intersection");
    if constexpr (FieldOps<K>::exact) {
        (void)prec;
        return geomdetail::intersection_exact(l, m);
    } else {
        return geomdetail::intersection_numeric(l, m, prec ? prec : default_precision());
    }
}

template <typename K>
PointP3<K> normalize_point(const PointP3<K>& p) {
    size_t best = 0;
    if constexpr (FieldOps<K>::exact) {
        while (best < 4 && FieldOps<K>::is_zero(p[best])) ++best;
        if (best == 4) throw std::domain_error("zero point");
    } else {
        Real m = FieldOps<K>::magnitude(p[0]);
        for (size_t i = 1; i < 4; ++i) {
            Real mi = FieldOps<K>::magnitude(p[i]);
            if (mi > m) { m = mi; best = i; }
        }
        if (m.is_zero()) throw std::domain_error("zero point");
    }
    PointP3<K> r;
    for (size_t i = 0; i < 4; ++i) r[i] = p[i] / p[best];
    return r;
}

template <typename K>
std::array<K, 6> normalize_plucker(const std::array<K, 6>& p) {
    size_t best = 0;
    if constexpr (FieldOps<K>::exact) {
        while (best < 6 && FieldOps<K>::is_zero(p[best])) ++best;
        if (best == 6) throw std::domain_error("zero pluecker vector");
    } else {
        Real m = FieldOps<K>::magnitude(p[0]);
        for (size_t i = 1; i < 6; ++i) {
            Real mi = FieldOps<K>::magnitude(p[i]);
            if (mi > m) { m = mi; best = i; }
        }
        if (m.is_zero()) throw std::domain_error("zero pluecker vector");
    }
    std::array<K, 6> r;
    for (size_t i = 0; i < 6; ++i) r[i] = p[i] / p[best];
    return r;
}

template <typename K>
Real line_distance(const LineP3<K>& l, const LineP3<K>& m) {
    auto p = normalize_plucker(l.pl);
    auto q = normalize_plucker(m.pl);
    CVec u(6), v(6);
    for (size_t i = 0; i < 6; ++i) {
        u[i] = to_cnum(p[i]);
        v[i] = to_cnum(q[i]);
    }
    return projective_distance(u, v);
}

template <typename K>
PointP3<CNum> to_cnum_point(const PointP3<K>& p) {
    PointP3<CNum> r;
    for (size_t i = 0; i < 4; ++i) r[i] = to_cnum(p[i]);
    return r;
}

template <typename K>
PlaneP3<CNum> to_cnum_plane(const PlaneP3<K>& p) {
    PlaneP3<CNum> r;
    for (size_t i = 0; i < 4; ++i) r[i] = to_cnum(p[i]);
    return r;
}

template <typename K>
LineP3<CNum> to_cnum_line(const LineP3<K>& l) {
    LineP3<CNum> r;
    r.a = to_cnum_point(l.a);
    r.b = to_cnum_point(l.b);
    for (size_t i = 0; i < 6; ++i) r.pl[i] = to_cnum(l.pl[i]);
    return r;
}

// ---- hexahedral model -------------------------------------------------

// Chart of the P3 in P5 cut out by sum Z_i = 0 and sum beta_i Z_i = 0:
// a 6x4 rational kernel basis plus the free-coordinate projection inverse.
struct HexChart {
    std::array<std::array<Rat, 6>, 4> basis;  // basis[j] = j-th kernel vector (Z_0..Z_5)
    std::array<size_t, 4> free_coords;        // chart coordinate i reads hex coordinate free_coords[i]
    std::array<size_t, 2> pivot_coords;
};

HexChart hex_chart(const std::array<Rat, 6>& beta);

template <typename K>
std::array<K, 6> chart_to_hex(const HexChart& ch, const PointP3<K>& p) {
    std::array<K, 6> z;
    for (size_t i = 0; i < 6; ++i) {
        K s = FieldOps<K>::from_long(0);
        for (size_t j = 0; j < 4; ++j) s += FieldOps<K>::from_rat(ch.basis[j][i]) * p[j];
        z[i] = s;
    }
    return z;
}

template <typename K>
PointP3<K> hex_to_chart(const HexChart& ch, const std::array<K, 6>& z) {
    PointP3<K> p;
    for (size_t j = 0; j < 4; ++j)
        p[j] = z[ch.free_coords[j]] / FieldOps<K>::from_rat(ch.basis[j][ch.free_coords[j]]);
    return p;
}

// Pull a 6-coordinate linear form sum c_i Z_i back to chart coordinates.
template <typename K>
PlaneP3<K> hex_form_to_chart(const HexChart& ch, const std::array<K, 6>& c) {
    PlaneP3<K> pi;
    for (size_t j = 0; j < 4; ++j) {
        K s = FieldOps<K>::from_long(0);
        for (size_t i = 0; i < 6; ++i) s += c[i] * FieldOps<K>::from_rat(ch.basis[j][i]);
        pi[j] = s;
    }
    return pi;
}

// The cubic sum Z_i^3 pulled back through the chart: a quaternary cubic.
Poly<Rat> chart_cubic(const HexChart& ch);

}  // namespace luroth

#endif
