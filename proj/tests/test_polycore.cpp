#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "luroth/polymatrix.hpp"
#include "luroth/resultant.hpp"
#include "luroth/rng.hpp"
#include "luroth/roots.hpp"

using namespace luroth;

namespace {

const std::vector<std::string> Z6{"Z0", "Z1", "Z2", "Z3", "Z4", "Z5"};
const std::vector<std::string> T{"t"};

Poly<Rat> sum_of_cubes() {
    Poly<Rat> p(Z6);
    for (size_t i = 0; i < 6; ++i) p += Poly<Rat>::variable(Z6, i).pow(3);
    return p;
}

Poly<Rat> random_poly(Rng& rng, const std::vector<std::string>& vars, int deg, int terms) {
    Poly<Rat> p(vars);
    for (int k = 0; k < terms; ++k) {
        Exp e(vars.size(), 0);
        int budget = static_cast<int>(rng.next_int(0, deg));
        for (int d = 0; d < budget; ++d) e[static_cast<size_t>(rng.next_int(0, static_cast<long>(vars.size()) - 1))]++;
        p.add_term(e, rng.next_rat());
    }
    return p;
}

Poly<Rat> random_univariate(Rng& rng, int deg) {
    Poly<Rat> p(T);
    for (int k = 0; k < deg; ++k) p.add_term(Exp{static_cast<unsigned>(k)}, rng.next_rat());
    p.add_term(Exp{static_cast<unsigned>(deg)}, rng.next_nonzero_rat());
    return p;
}

Matrix<Rat> symmetric4(Rng& rng) {
    Matrix<Rat> q(4, std::vector<Rat>(4));
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = i; j < 4; ++j) q[i][j] = q[j][i] = rng.next_rat();
    return q;
}

// 12x12 skew block matrix (0,Q0,-Q1;-Q0,0,Q2;Q1,-Q2,0)
Matrix<Rat> block_skew(const Matrix<Rat>& q0, const Matrix<Rat>& q1, const Matrix<Rat>& q2) {
    Matrix<Rat> m(12, std::vector<Rat>(12, Rat(0)));
    auto put = [&](size_t bi, size_t bj, const Matrix<Rat>& q, int sgn) {
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = 0; j < 4; ++j) m[4 * bi + i][4 * bj + j] = sgn * q[i][j];
    };
    put(0, 1, q0, 1);
    put(1, 0, q0, -1);
    put(0, 2, q1, -1);
    put(2, 0, q1, 1);
    put(1, 2, q2, 1);
    put(2, 1, q2, -1);
    return m;
}

}  // namespace

TEST_CASE("poly ops: derivative, evaluation, degree") {
    Poly<Rat> c = sum_of_cubes();
    CHECK(c.degree() == 3);
    CHECK(c.is_homogeneous());

    Poly<Rat> d0 = c.derivative(0);
    Rat v = d0.eval({Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)});
    CHECK(v == 3);

    Poly<Rat> lin(Z6);
    for (size_t i = 0; i < 6; ++i) lin += Poly<Rat>::variable(Z6, i);
    CHECK(lin.eval({Rat(1), Rat(-1), Rat(2), Rat(-2), Rat(3), Rat(-3)}) == 0);
}

TEST_CASE("poly ops: ring homomorphism at 100 random rational points") {
    Rng rng(17);
    std::vector<std::string> vars{"x", "y", "z"};
    for (int trial = 0; trial < 10; ++trial) {
        Poly<Rat> p = random_poly(rng, vars, 4, 6);
        Poly<Rat> q = random_poly(rng, vars, 4, 6);
        Poly<Rat> s = p + q, m = p * q;
        for (int k = 0; k < 10; ++k) {
            std::vector<Rat> pt{rng.next_rat(), rng.next_rat(), rng.next_rat()};
            CHECK(s.eval(pt) == p.eval(pt) + q.eval(pt));
            CHECK(m.eval(pt) == p.eval(pt) * q.eval(pt));
        }
    }
}

TEST_CASE("poly ops: substitution and exact division") {
    std::vector<std::string> vars{"x", "y"};
    Poly<Rat> x = Poly<Rat>::variable(vars, 0);
    Poly<Rat> y = Poly<Rat>::variable(vars, 1);
    Poly<Rat> f = (x + y).pow(3);
    Poly<Rat> g = f.substitute(0, y * Rat(2));  // x -> 2y
    CHECK(g == (y * Rat(3)).pow(3));

    Poly<Rat> prod = (x * x + y) * (x - y * Rat(5));
    CHECK(prod.divide_exact(x - y * Rat(5)) == (x * x + y));
    CHECK_THROWS_AS((x * x + y * Rat(1) + Poly<Rat>::constant(vars, Rat(1))).divide_exact(x + y),
                    std::domain_error);
}

TEST_CASE("poly ops: errors on variable and arity mismatch") {
    Poly<Rat> a({"x"});
    Poly<Rat> b({"y"});
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a.eval({Rat(1), Rat(2)}), std::invalid_argument);
}

TEST_CASE("resultant: closed forms") {
    std::vector<std::string> tx{"t", "x"};
    Poly<Rat> t = Poly<Rat>::variable(tx, 0);
    Poly<Rat> x = Poly<Rat>::variable(tx, 1);
    Poly<Rat> one = Poly<Rat>::constant(tx, Rat(1));

    Poly<Rat> r = resultant(t * t - x, t - one, size_t{0});
    CHECK(r == one - x);

    Poly<Rat> r2 = resultant(t * t, t * t, size_t{0});
    CHECK(r2.is_zero());

    CHECK_THROWS_AS(resultant(Poly<Rat>(tx), t, size_t{0}), std::domain_error);
}

TEST_CASE("resultant: product-of-root-differences oracle") {
    Rng rng(99);
    PrecScope ps(128);
    for (int trial = 0; trial < 5; ++trial) {
        Poly<Rat> f = random_univariate(rng, 3);
        Poly<Rat> g = random_univariate(rng, 4);
        Poly<Rat> res = resultant(f, g, size_t{0});
        REQUIRE(res.degree() == 0);
        Rat rv = res.eval({Rat(0)});

        auto rf = roots_numeric(f, 128);
        auto rg = roots_numeric(g, 128);
        CNum prod(1.0);
        for (const auto& a : rf.roots)
            for (const auto& b : rg.roots)
                for (int i = 0; i < a.multiplicity * b.multiplicity; ++i) prod *= (a.value - b.value);
        Rat lf = univariate_coeffs(f).back();
        Rat lg = univariate_coeffs(g).back();
        CNum oracle = prod;
        for (int i = 0; i < 4; ++i) oracle *= CNum(lf);  // lc(f)^deg(g)
        for (int i = 0; i < 3; ++i) oracle *= CNum(lg);  // lc(g)^deg(f)
        Real err = abs(oracle - CNum(rv));
        Real scale = max(Real(1.0), abs(CNum(rv)));
        CHECK(err / scale < Real(1e-25));
    }
}

TEST_CASE("resultant vanishes iff specialized gcd nonconstant") {
    Rng rng(7);
    std::vector<std::string> tx{"t"};
    for (int trial = 0; trial < 40; ++trial) {
        bool plant = trial % 2 == 0;
        Poly<Rat> f = random_univariate(rng, 2);
        Poly<Rat> g = random_univariate(rng, 2);
        if (plant) {
            Poly<Rat> common = random_univariate(rng, 1);
            f = f * common;
            g = g * common;
        }
        Poly<Rat> res = resultant(f, g, size_t{0});
        Rat rv = res.is_zero() ? Rat(0) : res.eval({Rat(0)});
        Poly<Rat> gcd = gcd_univariate(f, g);
        bool nonconstant = gcd.degree() > 0;
        CHECK((rv == 0) == nonconstant);
    }
}

TEST_CASE("determinant and pfaffian basics") {
    PolyMatrix<Rat> id(3, 3, {});
    for (size_t i = 0; i < 3; ++i) id.at(i, i) = Poly<Rat>::constant({}, Rat(1));
    CHECK(det(id) == Poly<Rat>::constant({}, Rat(1)));

    Rng rng(5);
    auto q = symmetric4(rng);
    auto m = block_skew(q, q, q);
    CHECK(pfaffian(m) == 0);

    Matrix<Rat> tiny{{Rat(0), Rat(3)}, {Rat(-3), Rat(0)}};
    CHECK(pfaffian(tiny) == 3);

    Matrix<Rat> odd(3, std::vector<Rat>(3, Rat(0)));
    CHECK_THROWS_AS(pfaffian(odd), std::invalid_argument);
    Matrix<Rat> nonskew{{Rat(1), Rat(0)}, {Rat(0), Rat(1)}};
    CHECK_THROWS_AS(pfaffian(nonskew), std::invalid_argument);
}

TEST_CASE("pfaffian squared equals determinant on random skew matrices") {
    Rng rng(23);
    for (int trial = 0; trial < 3; ++trial) {
        Matrix<Rat> m(12, std::vector<Rat>(12, Rat(0)));
        for (size_t i = 0; i < 12; ++i)
            for (size_t j = i + 1; j < 12; ++j) {
                m[i][j] = rng.next_rat();
                m[j][i] = -m[i][j];
            }
        Rat pf = pfaffian(m);
        Rat dt = det(m);
        CHECK(pf * pf == dt);
    }
    for (int trial = 0; trial < 5; ++trial) {
        size_t n = 2 * static_cast<size_t>(rng.next_int(1, 4));
        Matrix<Rat> m(n, std::vector<Rat>(n, Rat(0)));
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i + 1; j < n; ++j) {
                m[i][j] = rng.next_rat();
                m[j][i] = -m[i][j];
            }
        CHECK(pfaffian(m) * pfaffian(m) == det(m));
    }
}

TEST_CASE("determinant of polynomial matrices (Bareiss vs cofactor cross-check)") {
    Rng rng(31);
    std::vector<std::string> vars{"x", "y"};
    PolyMatrix<Rat> m(4, 4, vars);
    for (size_t i = 0; i < 4; ++i)
        for (size_t j = 0; j < 4; ++j) m.at(i, j) = random_poly(rng, vars, 1, 3);
    Poly<Rat> d1 = det(m);
    Poly<Rat> d2 = detail::det_cofactor(m);
    CHECK(d1 == d2);
}

TEST_CASE("roots: sqrt(2)") {
    PrecScope ps(128);
    Poly<Rat> f({"t"});
    f.add_term({2}, Rat(1));
    f.add_term({0}, Rat(-2));
    auto rep = roots_numeric(f, 128);
    REQUIRE(rep.roots.size() == 2);
    CHECK(rep.converged);
    Real s2 = sqrt(Real(Rat(2)));
    Real e1 = abs(rep.roots[0].value - CNum(-s2));
    Real e2 = abs(rep.roots[1].value - CNum(s2));
    CHECK(e1 < Real(1e-12));
    CHECK(e2 < Real(1e-12));
}

TEST_CASE("roots: multiplicities (t-1)^2 (t+3)") {
    PrecScope ps(128);
    std::vector<std::string> tv{"t"};
    Poly<Rat> t = Poly<Rat>::variable(tv, 0);
    Poly<Rat> one = Poly<Rat>::constant(tv, Rat(1));
    Poly<Rat> f = (t - one) * (t - one) * (t + one * Rat(3));
    auto rep = roots_numeric(f, 128);
    REQUIRE(rep.roots.size() == 2);
    int total = 0;
    for (const auto& r : rep.roots) total += r.multiplicity;
    CHECK(total == 3);
    for (const auto& r : rep.roots) {
        if (r.multiplicity == 2) CHECK(abs(r.value - CNum(1.0)) < Real(1e-20));
        else CHECK(abs(r.value - CNum(-3.0)) < Real(1e-20));
    }
}

TEST_CASE("roots: degree-36 pattern with 16 simple and 10 double roots") {
    PrecScope ps(128);
    Rng rng(301);
    std::vector<std::string> tv{"t"};
    Poly<Rat> t = Poly<Rat>::variable(tv, 0);
    std::vector<Rat> vals;
    while (vals.size() < 26) {
        Rat v = rng.next_rat(40, 9);
        bool dup = false;
        for (const auto& w : vals) dup = dup || (w == v);
        if (!dup) vals.push_back(v);
    }
    Poly<Rat> f = Poly<Rat>::constant(tv, Rat(1));
    for (size_t i = 0; i < 16; ++i) f = f * (t - Poly<Rat>::constant(tv, vals[i]));
    for (size_t i = 16; i < 26; ++i) {
        Poly<Rat> lf = t - Poly<Rat>::constant(tv, vals[i]);
        f = f * lf * lf;
    }
    CHECK(f.degree() == 36);

    // exact path
    auto rep = roots_numeric(f, 128);
    int simple = 0, dbl = 0, total = 0;
    for (const auto& r : rep.roots) {
        total += r.multiplicity;
        if (r.multiplicity == 1) ++simple;
        if (r.multiplicity == 2) ++dbl;
    }
    CHECK(simple == 16);
    CHECK(dbl == 10);
    CHECK(total == 36);

    // numeric path with clustering
    auto cs = univariate_coeffs(f);
    std::vector<CNum> cn(cs.size());
    for (size_t i = 0; i < cs.size(); ++i) cn[i] = CNum(cs[i]);
    auto rep2 = roots_numeric(cn, 128);
    simple = dbl = total = 0;
    for (const auto& r : rep2.roots) {
        total += r.multiplicity;
        if (r.multiplicity == 1) ++simple;
        if (r.multiplicity == 2) ++dbl;
    }
    CHECK(simple == 16);
    CHECK(dbl == 10);
    CHECK(total == 36);
}

TEST_CASE("roots: residual bound and degree accounting on random polynomials") {
    PrecScope ps(128);
    Rng rng(77);
    Real bound(0.0);
    {
        // 10^(3 - 0.3 * 128)
        Real e(-0.3 * 128 + 3);
        mpfr_ui_pow(bound.raw(), 10, e.raw(), MPFR_RNDN);
    }
    for (int trial = 0; trial < 5; ++trial) {
        Poly<Rat> f = random_univariate(rng, 6 + static_cast<int>(rng.next_int(0, 4)));
        auto rep = roots_numeric(f, 128);
        int total = 0;
        for (const auto& r : rep.roots) {
            total += r.multiplicity;
            CHECK(r.residual < bound);
        }
        CHECK(total == f.degree());
    }
    CHECK_THROWS_AS(roots_numeric(Poly<Rat>({"t"}), 128), std::domain_error);
}
