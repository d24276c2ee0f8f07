#pragma once

#include "srpm/complex.hpp"
#include "srpm/special.hpp"

#include <functional>

namespace srp {

using PointFunction = std::function<Complex(const HalfPlanePoint&)>;

/// Central-difference stencil. The step is relative: h = step * v.
struct StencilConfig {
    Real step;
    int order = 4;          ///< 2 or 4
    int richardson = 1;     ///< extrapolation levels on top of the base stencil

    /// ctx.stencil_step when set, else 2^{-prec/4}; order and levels from ctx.
    static StencilConfig from_context(const PrecisionContext& ctx);
    /// Half-width of the base stencil in units of h.
    int radius() const { return order / 2; }
};

/// d f / d taubar = (f_u + i f_v) / 2
Complex wirtinger_bar(const PointFunction& f, const HalfPlanePoint& tau, const StencilConfig& cfg);
/// xi_k f = 2 i v^k conj(d f / d taubar)
Complex xi_apply(long k, const PointFunction& f, const HalfPlanePoint& tau, const StencilConfig& cfg);
/// Delta_k f = -v^2 (f_uu + f_vv) + i k v (f_u + i f_v)
Complex laplacian_apply(long k, const PointFunction& f, const HalfPlanePoint& tau, const StencilConfig& cfg);

} // namespace srp
