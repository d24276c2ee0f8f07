#pragma once

#include "srpm/complex.hpp"
#include "srpm/power_series.hpp"
#include "srpm/special.hpp"

#include <cstddef>
#include <cstdint>
#include <string>

namespace srp {

/// Matrix [[a, b], [c, d]] of determinant 1 with c = 0 mod level.
struct Gamma0Element {
    long a, b, c, d;
    long level;

    Gamma0Element(long a_, long b_, long c_, long d_, long level_ = 1);

    static Gamma0Element identity(long level = 1) { return {1, 0, 0, 1, level}; }
    static Gamma0Element translation(long n = 1, long level = 1) { return {1, n, 0, 1, level}; }
    static Gamma0Element inversion() { return {0, -1, 1, 0, 1}; }
    /// [[1, 0], [level, 1]]
    static Gamma0Element lower(long level) { return {1, 0, level, 1, level}; }

    Gamma0Element inverse() const { return {d, -b, -c, a, level}; }
    std::string to_string() const;
};

/// Product in the smaller of the two groups Gamma_0(level).
Gamma0Element operator*(const Gamma0Element& x, const Gamma0Element& y);

struct MobiusImage {
    HalfPlanePoint point;
    Complex factor;  ///< c tau + d
};

/// (a tau + b) / (c tau + d) together with the automorphy factor.
MobiusImage mobius_act(const Gamma0Element& g, const HalfPlanePoint& tau);

/// Value of a truncated Fourier expansion and how it was truncated.
struct FourierEvaluation {
    Complex value;
    std::size_t cutoff = 0;
    double tail_bound_log2 = 0;  ///< log2 of the bound on the dropped terms
    bool sufficient = false;      ///< tail bound below 2^{-prec}
};

// --- Maass Eisenstein series --------------------------------------------------

/// phi(s) = sqrt(pi) Gamma(s - 1/2) zeta(2s - 1) / (Gamma(s) zeta(2s)).
Real eisenstein_phi(const Real& s, const PrecisionContext& ctx);
/// phi(n, s) = pi^s / (Gamma(s) zeta(2s)) n^{s-1/2} sigma_{1-2s}(n).
Real eisenstein_phi_n(std::uint64_t n, const Real& s, const PrecisionContext& ctx);

/// E(tau; s) for real s > 1 from its K-Bessel Fourier expansion. Integer s
/// uses the closed-form half-integer Bessel function, other s the quadrature.
FourierEvaluation eisenstein_maass(const HalfPlanePoint& tau, const Real& s, const PrecisionContext& ctx);

// --- completed generating functions ------------------------------------------

/// Coefficient bounds |c_n| <= A n^e of the series used below.
GrowthBound g_series_bound(unsigned k);
GrowthBound eichler_bound(unsigned k);
GrowthBound sigma1_bound();

/// ctx.series_order when set, otherwise the smallest provably sufficient order.
std::size_t choose_series_order(const GrowthBound& bound, const HalfPlanePoint& tau, long scale, const PrecisionContext& ctx);

Real g1_hat(const HalfPlanePoint& tau, const PrecisionContext& ctx);

/// Exact rational part of the g_k-hat prefactor, (-1)^{k+1} (k-1)! B_{2k} / (2 (2k)!);
/// the full prefactor is this times (4 pi)^k.
Rational gk_hat_prefactor_rational(unsigned k);
Real gk_hat(unsigned k, const HalfPlanePoint& tau, const PrecisionContext& ctx);

/// 1 - 24 sum sigma_1(n) q^n - 3/(pi v); complex off the imaginary axis.
Complex e2_hat(const HalfPlanePoint& tau, const PrecisionContext& ctx);
/// pi/6 (E2-hat(tau) - 4 E2-hat(2 tau))
Complex shadow_g1_closed(const HalfPlanePoint& tau, const PrecisionContext& ctx);

/// g_2(q) + g_2(qbar) - pi^2 v^2 / 6 + (G_2(q) + G_2(qbar) - zeta(3)) / (2 pi v)
Real g2_hat_explicit(const HalfPlanePoint& tau, const PrecisionContext& ctx);

// --- completed Eichler integrals -----------------------------------------------

/// B_{2k} (4 pi)^{2k-1} / (2 (2k)!)
Real eichler_normalizer(unsigned k);

/// Harmonic completion of the weight 2-2k Eichler integral, evaluated at level * tau.
Complex eichler_completed(unsigned k, long level, const HalfPlanePoint& tau, const PrecisionContext& ctx);
/// Sesquiharmonic weight-0 completion of E_0, evaluated at level * tau.
Complex eichler_sesqui(long level, const HalfPlanePoint& tau, const PrecisionContext& ctx);

/// Coefficient (-1)^r C(n, r) (2-2k+r)_{n-r} of the iterated raising operator
/// R^n_{2-2k} = sum_r coeff(r) v^{r-n} (4 pi)^r D^r.
Integer raising_coefficient(unsigned k, unsigned n, unsigned r);

/// R^{k-1}_{2-2k} of the completed Eichler integral, applying the operator
/// term by term to each Fourier family (incomplete gamma route).
Complex raising_eichler_direct(unsigned k, const HalfPlanePoint& tau, const PrecisionContext& ctx);
/// Same quantity from its closed K-Bessel Fourier expansion.
Complex raising_eichler_closed(unsigned k, const HalfPlanePoint& tau, const PrecisionContext& ctx);
/// B_{2k} (4 pi)^{2k-1} (k-1)! / (2 (2k)!) * E(tau; k)
Real raising_eisenstein_multiple(unsigned k, const HalfPlanePoint& tau, const PrecisionContext& ctx);

/// (q d/dq)^{k-1} of the Eichler integral: coefficients n^{k-1} sigma_{1-2k}(n).
PowerSeries holomorphic_part_extract(unsigned k, std::size_t order);
/// Holomorphic part of the tau-copy minus 2 times the raised 2tau-copy:
/// H(q) - 2^k H(q^2).
PowerSeries holomorphic_part_difference(unsigned k, std::size_t order);

// --- Kronecker limit and eta -----------------------------------------------------

/// lim_{s->1} (E(tau; s) - 3/(pi (s-1))) through the eta closed form.
Real kronecker_limit(const HalfPlanePoint& tau, const PrecisionContext& ctx);
/// -pi/6 (2 Kr(2 tau) - Kr(tau))
Real g1_hat_via_kronecker(const HalfPlanePoint& tau, const PrecisionContext& ctx);
/// E(tau; 1 + eps) - 3 / (pi eps), the quantity whose eps -> 0 limit is Kr(tau).
Real eisenstein_pole_subtracted(const HalfPlanePoint& tau, const Real& eps, const PrecisionContext& ctx);

struct EtaIdentity {
    Complex eta_side;     ///< 2 Log eta(2 tau) - pi i tau / 4 - Log eta(tau), principal branches
    Complex series_side;  ///< g_1(q) summed as a q-series
    long winding = 0;     ///< (eta_side - series_side) / (2 pi i), rounded
    Real residual;        ///< |eta_side - series_side - 2 pi i winding|
};
EtaIdentity g1_eta_identity(const HalfPlanePoint& tau, const PrecisionContext& ctx);

} // namespace srp
