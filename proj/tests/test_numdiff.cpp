#include "doctest.h"

#include "srpm/errors.hpp"
#include "srpm/maass.hpp"
#include "srpm/numdiff.hpp"

using namespace srp;

namespace {

struct Fixture {
    PrecisionContext ctx;
    ContextScope scope{ctx};
    StencilConfig cfg = StencilConfig::from_context(ctx);
    // stencil error at the default step sits near 2^{-prec/2}
    Real tol = epsilon_bits(ctx.precision_bits / 2 - 16);
};

Complex tau_of(const HalfPlanePoint& t) { return t.tau(); }

// smooth, non-holomorphic test function with known partials
Complex bumpy(const HalfPlanePoint& t) { return Complex(sin(t.u) * pow(t.v, 3), cos(t.u + t.v)); }

Complex bumpy_bar(const HalfPlanePoint& t)
{
    // f_u = (cos u v^3, -sin(u+v)), f_v = (3 sin u v^2, -sin(u+v)); (f_u + i f_v)/2
    const Complex fu(cos(t.u) * pow(t.v, 3), -sin(t.u + t.v));
    const Complex fv(Real(3) * sin(t.u) * t.v * t.v, -sin(t.u + t.v));
    return (fu + i_unit() * fv) / Real(2);
}

} // namespace

TEST_CASE_FIXTURE(Fixture, "Wirtinger derivative of the coordinates")
{
    const HalfPlanePoint p = HalfPlanePoint::parse("0.3", "0.8");
    CHECK(abs(wirtinger_bar(tau_of, p, cfg)) < tol);
    CHECK(abs(wirtinger_bar([](const HalfPlanePoint& t) { return conj(t.tau()); }, p, cfg) - Complex(1)) < tol);
    // dv/dtaubar = i/2
    const Complex dv = wirtinger_bar([](const HalfPlanePoint& t) { return Complex(t.v); }, p, cfg);
    CHECK(abs(dv - Complex(Real(0), Real(0.5))) < tol);
    CHECK(abs(wirtinger_bar(bumpy, p, cfg) - bumpy_bar(p)) < tol);
}

TEST_CASE_FIXTURE(Fixture, "shadow operator")
{
    const HalfPlanePoint p = HalfPlanePoint::parse("0.3", "0.8");
    const PointFunction q = [](const HalfPlanePoint& t) { return expi(Real(2) * const_pi() * t.u) * exp(Real(-2) * const_pi() * t.v); };
    CHECK(abs(xi_apply(0, q, p, cfg)) < tol);
    CHECK(abs(xi_apply(0, [](const HalfPlanePoint& t) { return Complex(t.v); }, p, cfg) - Complex(1)) < tol);
    // xi_k carries v^k
    CHECK(abs(xi_apply(2, [](const HalfPlanePoint& t) { return Complex(t.v); }, p, cfg) - Complex(p.v * p.v)) < tol);
}

TEST_CASE_FIXTURE(Fixture, "hyperbolic Laplacian")
{
    const HalfPlanePoint i = HalfPlanePoint::parse("0", "1");
    const HalfPlanePoint p = HalfPlanePoint::parse("0.4", "1.7");
    // Delta_0 v^s = s(1-s) v^s; at s = 2 this is -2 v^2
    const PointFunction v2 = [](const HalfPlanePoint& t) { return Complex(t.v * t.v); };
    CHECK(abs(laplacian_apply(0, v2, i, cfg) - Complex(-2)) < tol);
    CHECK(abs(laplacian_apply(0, v2, p, cfg) - Complex(Real(-2) * p.v * p.v)) < tol);
    CHECK(abs(laplacian_apply(0, [](const HalfPlanePoint&) { return Complex(7); }, p, cfg)) < tol);

    const HalfPlanePoint t = HalfPlanePoint::parse("0.3", "0.9");
    const PointFunction e = [&](const HalfPlanePoint& x) { return eisenstein_maass(x, Real(2), ctx).value; };
    CHECK(abs(laplacian_apply(0, e, t, cfg) + e(t) * Real(2)) / abs(e(t)) < Real(1e-6));

    // Delta_0 = -xi_2 xi_0, two nested stencils
    const PointFunction inner = [&](const HalfPlanePoint& x) { return xi_apply(0, e, x, cfg); };
    CHECK(abs(xi_apply(2, inner, t, cfg) - e(t) * Real(2)) / abs(e(t)) < Real(1e-6));

    // first-order weight term
    const Complex lap1 = laplacian_apply(1, tau_of, p, cfg);
    // f_u = 1, f_v = i: i k v (1 + i*i) = 0
    CHECK(abs(lap1) < tol);
    const Complex lap_conj = laplacian_apply(1, [](const HalfPlanePoint& x) { return conj(x.tau()); }, p, cfg);
    // f_u = 1, f_v = -i: i v (1 + 1) = 2 i v
    CHECK(abs(lap_conj - Complex(Real(0), Real(2) * p.v)) < tol);
}

TEST_CASE_FIXTURE(Fixture, "stencil domain and configuration")
{
    const HalfPlanePoint p = HalfPlanePoint::parse("0.3", "0.8");
    CHECK_THROWS_AS(wirtinger_bar(tau_of, p, StencilConfig{Real(0.3), 4, 0}), Error);
    CHECK_THROWS_AS(wirtinger_bar(tau_of, p, StencilConfig{Real(0.6), 2, 0}), Error);
    CHECK_THROWS_AS(wirtinger_bar(tau_of, p, StencilConfig{Real(0.01), 3, 0}), Error);
    CHECK_THROWS_AS(wirtinger_bar(tau_of, p, StencilConfig{Real(0), 4, 0}), Error);
    CHECK(cfg.step == epsilon_bits(ctx.precision_bits / 4));
    CHECK(cfg.order == 4);
    CHECK(cfg.richardson == 1);
}

TEST_CASE_FIXTURE(Fixture, "convergence rate follows the stencil order")
{
    const HalfPlanePoint p = HalfPlanePoint::parse("0.3", "0.8");
    for (int order : {2, 4}) {
        const Real e1 = abs(wirtinger_bar(bumpy, p, StencilConfig{Real(1) / Real(16), order, 0}) - bumpy_bar(p));
        const Real e2 = abs(wirtinger_bar(bumpy, p, StencilConfig{Real(1) / Real(32), order, 0}) - bumpy_bar(p));
        const Real ratio = e1 / e2;
        const Real expected = ldexp(Real(1), order);
        CHECK(ratio > expected / Real(2));
        CHECK(ratio < expected * Real(2));
    }
    // one Richardson level lifts an order-2 stencil to order 4
    const Real r1 = abs(wirtinger_bar(bumpy, p, StencilConfig{Real(1) / Real(16), 2, 1}) - bumpy_bar(p));
    const Real r2 = abs(wirtinger_bar(bumpy, p, StencilConfig{Real(1) / Real(32), 2, 1}) - bumpy_bar(p));
    CHECK(r1 / r2 > Real(8));
    CHECK(r1 / r2 < Real(32));
}
