#pragma once

#include "srpm/complex.hpp"
#include "srpm/power_series.hpp"
#include "srpm/real.hpp"

#include <cstddef>
#include <string>

namespace srp {

/// Numerical parameters of one evaluation run. Immutable once built and
/// freely shareable.
struct PrecisionContext {
    long precision_bits = 192;
    long guard_bits = 32;
    std::size_t series_order = 0;    ///< 0: chosen per evaluation from a tail bound
    std::size_t fourier_cutoff = 0;  ///< 0: chosen per evaluation from a tail bound
    std::size_t quadrature_nodes = 1 << 14;  ///< node budget for the Bessel integral
    double stencil_step = 0;         ///< h / v; 0 selects 2^{-prec/4}
    int stencil_order = 4;
    int richardson_levels = 1;

    /// Throws srp::Error when a field is out of range.
    void validate() const;
    long working_bits() const { return precision_bits + guard_bits; }
    /// log2 of the truncation target 2^{-(prec+guard)}.
    double tail_target_log2() const { return -static_cast<double>(working_bits()); }
    /// Same context at twice the precision (guard bits doubled too).
    PrecisionContext doubled() const;
};

/// Enters the working precision of a context for the lifetime of the guard.
class ContextScope {
public:
    explicit ContextScope(const PrecisionContext& ctx) : scope_((ctx.validate(), ctx.working_bits())) {}

private:
    PrecisionScope scope_;
};

/// tau = u + iv with v > 0.
struct HalfPlanePoint {
    Real u;
    Real v;

    HalfPlanePoint(Real u_, Real v_);
    static HalfPlanePoint parse(const std::string& u, const std::string& v);
    Complex tau() const { return {u, v}; }
    /// l * tau
    HalfPlanePoint scaled(long l) const { return {u * Real(l), v * Real(l)}; }
    std::string to_string(int digits = 6) const;
};

/// |c_n| <= constant * n^exponent for every n >= 1.
struct GrowthBound {
    double constant;
    double exponent;
};

/// log2 of an upper bound for sum_{n > cutoff} A n^e e^{-rate n} (A = e^{log_a}),
/// from a geometric majorant; +inf when the majorant does not converge.
double tail_bound_log2(double log_a, double exponent, double rate, std::size_t cutoff);
/// Smallest cutoff whose tail_bound_log2 is below target_log2.
std::size_t minimal_cutoff(double log_a, double exponent, double rate, double target_log2);

// --- Bessel, incomplete gamma ---------------------------------------------

/// K_{n+1/2}(x) by its terminating closed form.
Real k_bessel_half(unsigned n, const Real& x);
/// K_nu(x) = int_0^inf e^{-x cosh t} cosh(nu t) dt by trapezoidal
/// (double-exponential) quadrature, halving the step until two refinements agree.
Real k_bessel_general(const Real& nu, const Real& x, const PrecisionContext& ctx);

/// Gamma(m, y) = (m-1)! e^{-y} sum_{j<m} y^j / j!
Real incomplete_gamma_int(unsigned m, const Real& y);
/// Gamma(m, y) / (m-1)!
Real incomplete_gamma_normalized(unsigned m, const Real& y);

// --- constants and zeta -----------------------------------------------------

/// zeta(s) for real s > 1 by Euler-Maclaurin.
Real zeta_real(const Real& s, const PrecisionContext& ctx);
/// zeta'(s) for real s > 1 by Euler-Maclaurin on the differentiated series.
Real zeta_prime(const Real& s, const PrecisionContext& ctx);
Real zeta_prime_2(const PrecisionContext& ctx);
/// Euler's constant by the Brent-McMillan algorithm.
Real euler_gamma(const PrecisionContext& ctx);

// --- q-expansions -------------------------------------------------------------

/// eta(tau) = q^{1/24} prod (1 - q^n).
Complex dedekind_eta(const HalfPlanePoint& tau, const PrecisionContext& ctx);

/// Smallest order N with a provable truncation error below 2^{-(prec+guard)}
/// for a series bounded by `bound`, evaluated at q = e^{2 pi i scale tau}.
std::size_t required_series_order(const GrowthBound& bound, const HalfPlanePoint& tau, long scale, const PrecisionContext& ctx);

/// sum_n c_n e^{2 pi i scale n tau} by Horner's rule. Throws InsufficientOrder
/// (carrying the minimal sufficient order) when the series is too short.
Complex eval_series_at(const PowerSeries& series, const HalfPlanePoint& tau, long scale, const GrowthBound& bound,
                       const PrecisionContext& ctx);

} // namespace srp
