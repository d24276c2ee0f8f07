#include "srpm/numdiff.hpp"

#include "srpm/errors.hpp"

#include <vector>

namespace srp {

namespace {

struct Partials {
    Complex du, dv, duu, dvv;
};

// Samples f on the axis-aligned cross of radius `order/2` around tau.
Partials central_partials(const PointFunction& f, const HalfPlanePoint& tau, const Real& h, int order, bool second)
{
    auto at = [&](long du, long dv) {
        return f(HalfPlanePoint(tau.u + h * Real(du), tau.v + h * Real(dv)));
    };
    Partials p;
    const Complex centre = second ? f(tau) : Complex();
    if (order == 2) {
        const Complex up = at(1, 0), um = at(-1, 0), vp = at(0, 1), vm = at(0, -1);
        p.du = (up - um) / (Real(2) * h);
        p.dv = (vp - vm) / (Real(2) * h);
        if (second) {
            const Real h2 = h * h;
            p.duu = (up + um - centre * Real(2)) / h2;
            p.dvv = (vp + vm - centre * Real(2)) / h2;
        }
        return p;
    }
    const Complex up1 = at(1, 0), um1 = at(-1, 0), up2 = at(2, 0), um2 = at(-2, 0);
    const Complex vp1 = at(0, 1), vm1 = at(0, -1), vp2 = at(0, 2), vm2 = at(0, -2);
    const Real twelve_h = Real(12) * h;
    p.du = ((up1 - um1) * Real(8) - (up2 - um2)) / twelve_h;
    p.dv = ((vp1 - vm1) * Real(8) - (vp2 - vm2)) / twelve_h;
    if (second) {
        const Real twelve_h2 = Real(12) * h * h;
        p.duu = ((up1 + um1) * Real(16) - (up2 + um2) - centre * Real(30)) / twelve_h2;
        p.dvv = ((vp1 + vm1) * Real(16) - (vp2 + vm2) - centre * Real(30)) / twelve_h2;
    }
    return p;
}

// Richardson table over h, h/2, h/4, ...; central stencils have even error
// expansions so level j removes the h^{order + 2(j-1)} term.
template <class Estimator>
Complex extrapolate(const HalfPlanePoint& tau, const StencilConfig& cfg, Estimator&& estimate)
{
    require(cfg.order == 2 || cfg.order == 4, "stencil order must be 2 or 4");
    require(cfg.richardson >= 0, "richardson levels must be non-negative");
    Real h = cfg.step * tau.v;
    if (!(h.sign() > 0) || !(h * Real(cfg.radius()) < tau.v / Real(2)))
        fail(ErrorCode::domain, "stencil leaves the upper half-plane (need h * radius < v / 2)");

    std::vector<Complex> row;
    for (int level = 0; level <= cfg.richardson; ++level) {
        row.push_back(estimate(h));
        h /= Real(2);
    }
    for (int level = 1; level <= cfg.richardson; ++level) {
        const Real factor = ldexp(Real(1), cfg.order + 2 * (level - 1));
        for (std::size_t i = row.size() - 1; i >= static_cast<std::size_t>(level); --i)
            row[i] = (row[i] * factor - row[i - 1]) / (factor - Real(1));
    }
    return row.back();
}

} // namespace

StencilConfig StencilConfig::from_context(const PrecisionContext& ctx)
{
    ContextScope scope(ctx);
    StencilConfig cfg;
    cfg.step = ctx.stencil_step > 0 ? Real(ctx.stencil_step) : epsilon_bits(ctx.precision_bits / 4);
    cfg.order = ctx.stencil_order;
    cfg.richardson = ctx.richardson_levels;
    return cfg;
}

Complex wirtinger_bar(const PointFunction& f, const HalfPlanePoint& tau, const StencilConfig& cfg)
{
    return extrapolate(tau, cfg, [&](const Real& h) {
        const Partials p = central_partials(f, tau, h, cfg.order, false);
        return (p.du + i_unit() * p.dv) / Real(2);
    });
}

Complex xi_apply(long k, const PointFunction& f, const HalfPlanePoint& tau, const StencilConfig& cfg)
{
    return i_unit() * Real(2) * pow(tau.v, k) * conj(wirtinger_bar(f, tau, cfg));
}

Complex laplacian_apply(long k, const PointFunction& f, const HalfPlanePoint& tau, const StencilConfig& cfg)
{
    return extrapolate(tau, cfg, [&](const Real& h) {
        const Partials p = central_partials(f, tau, h, cfg.order, true);
        const Complex first = p.du + i_unit() * p.dv;
        return (p.duu + p.dvv) * (-tau.v * tau.v) + i_unit() * first * (Real(k) * tau.v);
    });
}

} // namespace srp
