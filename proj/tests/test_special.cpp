#include "doctest.h"

#include "srpm/arithmetic.hpp"
#include "srpm/errors.hpp"
#include "srpm/maass.hpp"
#include "srpm/qseries.hpp"
#include "srpm/special.hpp"

#include <cmath>

using namespace srp;

namespace {

Real rel(const Real& a, const Real& b) { return abs(a - b) / abs(b); }

Real mpfr_zeta_ref(const Real& s)
{
    Real out;
    mpfr_zeta(out.get(), s.get(), MPFR_RNDN);
    return out;
}

// Gamma(m, y) straight from MPFR's incomplete gamma
Real mpfr_gamma_inc_ref(long m, const Real& y)
{
    Real out;
    mpfr_gamma_inc(out.get(), Real(m).get(), y.get(), MPFR_RNDN);
    return out;
}

} // namespace

TEST_CASE("precision context validation")
{
    PrecisionContext ctx;
    CHECK_NOTHROW(ctx.validate());
    ctx.precision_bits = 32;
    CHECK_THROWS_AS(ctx.validate(), Error);
    ctx = {};
    ctx.guard_bits = 8;
    CHECK_THROWS_AS(ctx.validate(), Error);
    ctx = {};
    ctx.stencil_order = 3;
    CHECK_THROWS_AS(ctx.validate(), Error);
    ctx = {};
    CHECK(ctx.doubled().precision_bits == 384);
    CHECK(ctx.doubled().guard_bits == 64);
}

TEST_CASE("half-plane points")
{
    PrecisionScope scope(128);
    CHECK_THROWS_AS(HalfPlanePoint::parse("0.1", "0"), Error);
    CHECK_THROWS_AS(HalfPlanePoint::parse("0.1", "-1"), Error);
    CHECK_THROWS_AS(HalfPlanePoint::parse("x", "1"), Error);
    const HalfPlanePoint p = HalfPlanePoint::parse("0.25", "0.5");
    CHECK(p.scaled(2).v == Real(1));
}

TEST_CASE("half-integer K-Bessel closed form")
{
    PrecisionContext ctx;
    ContextScope scope(ctx);
    const Real& pi = const_pi();
    for (const char* xs : {"0.5", "1", "3.7"}) {
        const Real x = Real::parse(xs);
        const Real lead = sqrt(pi / (Real(2) * x)) * exp(-x);
        CHECK(rel(k_bessel_half(0, x), lead) < epsilon_bits(200));
        CHECK(rel(k_bessel_half(1, x), lead * (Real(1) + Real(1) / x)) < epsilon_bits(200));
    }
    CHECK_THROWS_AS(k_bessel_half(1, Real(0)), Error);
    CHECK_THROWS_AS(k_bessel_half(1, Real(-1)), Error);
}

TEST_CASE("general-order K-Bessel quadrature")
{
    PrecisionContext ctx;
    ContextScope scope(ctx);
    const Real tol = epsilon_bits(ctx.precision_bits - ctx.guard_bits);
    const Real two_pi = Real(2) * const_pi();
    for (unsigned n = 0; n <= 3; ++n) {
        const Real nu = Real(static_cast<long>(n)) + Real(0.5);
        for (const Real& x : {Real(0.5), Real(1), two_pi, Real(10)})
            CHECK(rel(k_bessel_general(nu, x, ctx), k_bessel_half(n, x)) < tol);
    }
    // even in the order
    CHECK(rel(k_bessel_general(Real(-0.7), Real(1.3), ctx), k_bessel_general(Real(0.7), Real(1.3), ctx)) < tol);
    CHECK_THROWS_AS(k_bessel_general(Real(0.5), Real(0), ctx), Error);

    PrecisionContext starved = ctx;
    starved.quadrature_nodes = 16;
    CHECK_THROWS_AS(k_bessel_general(Real(1.1), Real(0.1), starved), Error);
}

TEST_CASE("incomplete gamma")
{
    PrecisionContext ctx;
    ContextScope scope(ctx);
    const Real tol = epsilon_bits(ctx.precision_bits);
    for (const char* ys : {"0.25", "1", "7.5"}) {
        const Real y = Real::parse(ys);
        CHECK(rel(incomplete_gamma_int(1, y), exp(-y)) < tol);
        for (unsigned m = 1; m <= 8; ++m) CHECK(rel(incomplete_gamma_int(m, y), mpfr_gamma_inc_ref(m, y)) < tol);
    }
    for (unsigned m = 1; m <= 8; ++m) {
        CHECK(incomplete_gamma_int(m, Real(0)) == Real(Integer(factorial(m - 1))));
        CHECK(incomplete_gamma_normalized(m, Real(0)) == Real(1));
    }
    CHECK(rel(incomplete_gamma_normalized(3, Real(1)), exp(Real(-1)) * Real(2.5)) < tol);
    // decreasing in y
    Real last = incomplete_gamma_int(4, Real(0));
    for (int i = 1; i <= 40; ++i) {
        const Real now = incomplete_gamma_int(4, Real(i) / Real(2));
        CHECK(now < last);
        last = now;
    }
    CHECK(last < Real(1e-4));
}

TEST_CASE("zeta values and constants")
{
    PrecisionContext ctx;
    ContextScope scope(ctx);
    const Real tol = epsilon_bits(ctx.precision_bits);
    const Real& pi = const_pi();
    CHECK(rel(zeta_real(Real(2), ctx), pi * pi / Real(6)) < tol);
    CHECK(rel(zeta_real(Real(4), ctx), pow(pi, 4) / Real(90)) < tol);
    for (const char* s : {"3", "5.5", "1.25", "11"}) {
        const Real x = Real::parse(s);
        CHECK(rel(zeta_real(x, ctx), mpfr_zeta_ref(x)) < tol);
    }
    CHECK_THROWS_AS(zeta_real(Real(1), ctx), Error);
    CHECK_THROWS_AS(zeta_real(Real(0.5), ctx), Error);

    Real gamma_ref;
    mpfr_const_euler(gamma_ref.get(), MPFR_RNDN);
    CHECK(rel(euler_gamma(ctx), gamma_ref) < tol);

    // zeta'(2) and zeta'(3) against a central difference of MPFR's zeta at much higher precision
    for (long s0 : {2L, 3L}) {
        Real reference;
        {
            PrecisionScope high(800);
            const Real h = epsilon_bits(200);
            const Real s(s0);
            reference = (mpfr_zeta_ref(s + h) - mpfr_zeta_ref(s - h)) / (Real(2) * h);
        }
        CHECK(rel(zeta_prime(Real(s0), ctx), reference) < tol);
    }
    CHECK(rel(zeta_prime_2(ctx), zeta_prime(Real(2), ctx)) < tol);
}

TEST_CASE("Dedekind eta")
{
    PrecisionContext ctx;
    ContextScope scope(ctx);
    const Real tol = epsilon_bits(ctx.precision_bits);
    const Real& pi = const_pi();

    // eta(i) = Gamma(1/4) / (2 pi^{3/4})
    const Complex at_i = dedekind_eta(HalfPlanePoint::parse("0", "1"), ctx);
    const Real want = gamma(Real(0.25)) / (Real(2) * pow(pi, Real(0.75)));
    CHECK(rel(at_i.re, want) < tol);
    CHECK(abs(at_i.im) < tol);

    const HalfPlanePoint tau = HalfPlanePoint::parse("0.3", "0.8");
    const Complex shifted = dedekind_eta(HalfPlanePoint(tau.u + Real(1), tau.v), ctx);
    const Complex expected = dedekind_eta(tau, ctx) * expi(pi / Real(12));
    CHECK(abs(shifted - expected) < tol);

    for (const char* v : {"0.05", "0.4", "1", "3"}) CHECK(abs(dedekind_eta(HalfPlanePoint::parse("0.17", v), ctx)) > Real(0));
}

TEST_CASE("series evaluation at q")
{
    PrecisionContext ctx;
    ContextScope scope(ctx);
    const Real tol = epsilon_bits(ctx.precision_bits);
    const HalfPlanePoint i = HalfPlanePoint::parse("0", "1");
    const GrowthBound unit{1.0, 0.0};

    const Complex one = eval_series_at(PowerSeries::one(40), i, 1, unit, ctx);
    CHECK(abs(one - Complex(1)) < tol);

    const Complex qv = eval_series_at(PowerSeries::monomial(40, 1), i, 1, unit, ctx);
    CHECK(abs(qv - Complex(exp(Real(-2) * const_pi()))) < tol);

    // real coefficients: f(-u + iv) = conj f(u + iv)
    const GrowthBound bound = g_series_bound(1);
    const HalfPlanePoint tau = HalfPlanePoint::parse("0.3", "0.8");
    const HalfPlanePoint mirror(-tau.u, tau.v);
    const PowerSeries g1 = g_series(1, required_series_order(bound, tau, 1, ctx));
    CHECK(abs(eval_series_at(g1, mirror, 1, bound, ctx) - conj(eval_series_at(g1, tau, 1, bound, ctx))) < tol);

    // a short series is refused with the order that would suffice
    const PowerSeries short_g1 = g_series(1, 5);
    std::size_t needed = 0;
    try {
        (void)eval_series_at(short_g1, tau, 1, bound, ctx);
    } catch (const InsufficientOrder& e) {
        needed = e.required();
    }
    REQUIRE(needed > 5);
    CHECK(needed == required_series_order(bound, tau, 1, ctx));
    CHECK_NOTHROW((void)eval_series_at(g_series(1, needed), tau, 1, bound, ctx));
}

TEST_CASE("tail bounds")
{
    // geometric majorant is monotone in the cutoff and reaches any target
    double last = tail_bound_log2(std::log(3.0), 2.0, 1.0, 1);
    for (std::size_t m = 2; m < 200; ++m) {
        const double now = tail_bound_log2(std::log(3.0), 2.0, 1.0, m);
        CHECK(now <= last);
        last = now;
    }
    const std::size_t m = minimal_cutoff(std::log(3.0), 2.0, 1.0, -200.0);
    CHECK(tail_bound_log2(std::log(3.0), 2.0, 1.0, m) < -200.0);
    CHECK(tail_bound_log2(std::log(3.0), 2.0, 1.0, m - 1) >= -200.0);
}

TEST_CASE("doubling precision leaves values unchanged to the coarse tolerance")
{
    PrecisionContext coarse;
    const PrecisionContext fine = coarse.doubled();
    const char* pts[][2] = {{"0.3", "0.8"}, {"0.2", "0.4"}, {"0.75", "2.0"}};
    for (const auto& p : pts) {
        Real a, b;
        {
            ContextScope s(coarse);
            const HalfPlanePoint tau = HalfPlanePoint::parse(p[0], p[1]);
            a = abs(dedekind_eta(tau, coarse)) + zeta_prime_2(coarse) + k_bessel_general(Real(1.3), tau.v, coarse);
        }
        {
            ContextScope s(fine);
            const HalfPlanePoint tau = HalfPlanePoint::parse(p[0], p[1]);
            b = abs(dedekind_eta(tau, fine)) + zeta_prime_2(fine) + k_bessel_general(Real(1.3), tau.v, fine);
        }
        ContextScope s(fine);
        CHECK(abs(a - b) < epsilon_bits(coarse.precision_bits));
    }
}
