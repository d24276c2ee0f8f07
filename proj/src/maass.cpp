#include "srpm/maass.hpp"

#include "srpm/arithmetic.hpp"
#include "srpm/errors.hpp"
#include "srpm/qseries.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

namespace srp {

namespace {

// zeta(2k-1) <= zeta(3) < 1.25 bounds every sigma_{1-2k}(n) for k >= 2
constexpr double kSigmaBound = 1.25;

// sum_{r=0}^{m} (m+r)! / (r! (m-r)!) z^r in double precision
double bessel_poly(unsigned m, double z)
{
    double sum = 0, term = 1;
    for (unsigned r = 0; r <= m; ++r) {
        sum += std::tgamma(m + r + 1.0) / (std::tgamma(r + 1.0) * std::tgamma(m - r + 1.0)) * term;
        term *= z;
    }
    return sum;
}

Real sigma_real(std::uint64_t n, const Real& exponent)
{
    Real sum = 0;
    for (auto d : divisors(n)) sum += pow(Real(static_cast<unsigned long>(d)), exponent);
    return sum;
}

bool is_integer(const Real& x) { return mpfr_integer_p(x.get()) != 0; }

std::size_t choose_cutoff(double log_a, double exponent, double rate, const PrecisionContext& ctx)
{
    if (ctx.fourier_cutoff > 0) return ctx.fourier_cutoff;
    return minimal_cutoff(log_a, exponent, rate, ctx.tail_target_log2());
}

void require_sufficient(double tail_log2, std::size_t cutoff, double log_a, double exponent, double rate,
                        const PrecisionContext& ctx, const char* what)
{
    if (tail_log2 < -static_cast<double>(ctx.precision_bits)) return;
    throw InsufficientOrder(std::string(what) + ": Fourier cutoff " + std::to_string(cutoff) + " too small",
                            minimal_cutoff(log_a, exponent, rate, -static_cast<double>(ctx.precision_bits)));
}

} // namespace

// --- group action ------------------------------------------------------------------

Gamma0Element::Gamma0Element(long a_, long b_, long c_, long d_, long level_) : a(a_), b(b_), c(c_), d(d_), level(level_)
{
    require(level >= 1, "level must be positive");
    require(a * d - b * c == 1, "matrix must have determinant 1");
    require(c % level == 0, "lower-left entry must be divisible by the level");
}

std::string Gamma0Element::to_string() const
{
    std::ostringstream out;
    out << "[[" << a << "," << b << "],[" << c << "," << d << "]]";
    return out.str();
}

Gamma0Element operator*(const Gamma0Element& x, const Gamma0Element& y)
{
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d,
            std::gcd(x.level, y.level)};
}

MobiusImage mobius_act(const Gamma0Element& g, const HalfPlanePoint& tau)
{
    const Complex z = tau.tau();
    const Complex factor = Complex(Real(g.c)) * z + Complex(Real(g.d));
    const Complex image = (Complex(Real(g.a)) * z + Complex(Real(g.b))) / factor;
    return {HalfPlanePoint(image.re, tau.v / norm(factor)), factor};
}

// --- Eisenstein series ------------------------------------------------------------

Real eisenstein_phi(const Real& s, const PrecisionContext& ctx)
{
    ContextScope scope(ctx);
    const Real two_s = Real(2) * s;
    return sqrt(const_pi()) * gamma(s - Real(0.5)) * zeta_real(two_s - Real(1), ctx) / (gamma(s) * zeta_real(two_s, ctx));
}

Real eisenstein_phi_n(std::uint64_t n, const Real& s, const PrecisionContext& ctx)
{
    ContextScope scope(ctx);
    require(n >= 1, "phi(n, s) needs n >= 1");
    const Real c = pow(const_pi(), s) / (gamma(s) * zeta_real(Real(2) * s, ctx));
    const Real sig = is_integer(s) ? Real(sigma(1 - 2 * mpfr_get_si(s.get(), MPFR_RNDN), n))
                                   : sigma_real(n, Real(1) - Real(2) * s);
    return c * pow(Real(static_cast<unsigned long>(n)), s - Real(0.5)) * sig;
}

FourierEvaluation eisenstein_maass(const HalfPlanePoint& tau, const Real& s, const PrecisionContext& ctx)
{
    ContextScope scope(ctx);
    if (!(s > Real(1))) fail(ErrorCode::domain, "E(tau; s) is evaluated for real s > 1 only");
    const Real& pi = const_pi();
    const Real& v = tau.v;
    const bool half_integer_order = is_integer(s);
    const Real nu = s - Real(0.5);

    const Real zeta_2s = zeta_real(Real(2) * s, ctx);
    const Real zeta_2s1 = zeta_real(Real(2) * s - Real(1), ctx);
    const Real c = pow(pi, s) / (gamma(s) * zeta_2s);
    const Real phi = sqrt(pi) * gamma(nu) * zeta_2s1 / (gamma(s) * zeta_2s);

    // |4 sqrt(v) phi(n,s) K_nu(2 pi n v)| <= 2 c zeta(2s-1) P n^{s-1} e^{-2 pi n v},
    // with K_nu <= K_{m+1/2} for m + 1/2 >= nu
    const double sd = s.to_double(), vd = v.to_double();
    const unsigned m = static_cast<unsigned>(std::ceil(sd - 1.0 - 1e-12));
    const double log_a = std::log(2.0 * c.to_double() * zeta_2s1.to_double() * bessel_poly(m, 1.0 / (4.0 * M_PI * vd)));
    const double rate = 2.0 * M_PI * vd;
    const std::size_t cutoff = choose_cutoff(log_a, sd - 1.0, rate, ctx);

    Real sum = 0;
    const Real two_pi_v = Real(2) * pi * v;
    const Real two_pi_u = Real(2) * pi * tau.u;
    const unsigned long half_n = half_integer_order ? mpfr_get_ui(s.get(), MPFR_RNDN) - 1 : 0;
    for (std::size_t n = 1; n <= cutoff; ++n) {
        const Real nn(static_cast<unsigned long>(n));
        const Real x = two_pi_v * nn;
        const Real bessel = half_integer_order ? k_bessel_half(static_cast<unsigned>(half_n), x) : k_bessel_general(nu, x, ctx);
        const Real sig = half_integer_order ? Real(sigma(1 - 2 * static_cast<long>(half_n + 1), n)) : sigma_real(n, Real(1) - Real(2) * s);
        sum += pow(nn, nu) * sig * bessel * cos(two_pi_u * nn);
    }
    FourierEvaluation out;
    out.value = Complex(pow(v, s) + phi * pow(v, Real(1) - s) + Real(4) * sqrt(v) * c * sum);
    out.cutoff = cutoff;
    out.tail_bound_log2 = tail_bound_log2(log_a, sd - 1.0, rate, cutoff);
    out.sufficient = out.tail_bound_log2 < -static_cast<double>(ctx.precision_bits);
    return out;
}

// --- completed functions --------------------------------------------------------------

GrowthBound g_series_bound(unsigned k)
{
    // sigma_{-1}(n) <= 1 + ln n <= 2 sqrt(n)
    if (k == 1) return {6.0, 0.5};
    return {3.0 * kSigmaBound, static_cast<double>(k) - 1.0};
}

GrowthBound eichler_bound(unsigned k)
{
    if (k == 1) return {2.0, 0.5};
    return {kSigmaBound, 0.0};
}

GrowthBound sigma1_bound() { return {2.0, 1.5}; }  // sigma_1(n) <= n (1 + ln n)

std::size_t choose_series_order(const GrowthBound& bound, const HalfPlanePoint& tau, long scale, const PrecisionContext& ctx)
{
    if (ctx.series_order > 0) return ctx.series_order;
    return required_series_order(bound, tau, scale, ctx);
}

Real g1_hat(const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    ContextScope scope(ctx);
    const auto bound = g_series_bound(1);
    const PowerSeries g1 = g_series(1, choose_series_order(bound, tau, 1, ctx));
    const Complex series = eval_series_at(g1, tau, 1, bound, ctx);
    const Real& pi = const_pi();
    return Real(2) * const_log2() - euler_gamma(ctx) + Real(6) * zeta_prime_2(ctx) / (pi * pi) - pi * tau.v / Real(2) +
           log(tau.v) / Real(2) + Real(2) * series.re;
}

Rational gk_hat_prefactor_rational(unsigned k)
{
    require(k >= 2, "g_k-hat needs k >= 2");
    Rational r = Rational(factorial(k - 1)) * bernoulli(2 * k) / Rational(2 * factorial(2 * k));
    if (k % 2 == 0) r = -r;
    return r;
}

Real gk_hat(unsigned k, const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    ContextScope scope(ctx);
    const Real s(static_cast<long>(k));
    const FourierEvaluation e1 = eisenstein_maass(tau, s, ctx);
    const FourierEvaluation e2 = eisenstein_maass(tau.scaled(2), s, ctx);
    if (!e1.sufficient || !e2.sufficient) fail(ErrorCode::insufficient_order, "Fourier cutoff too small for g_k-hat");
    const Real prefactor = Real(gk_hat_prefactor_rational(k)) * pow(Real(4) * const_pi(), static_cast<long>(k));
    return prefactor * (e1.value.re - ldexp(e2.value.re, static_cast<long>(k)));
}

Complex e2_hat(const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    ContextScope scope(ctx);
    const auto bound = sigma1_bound();
    const std::size_t order = choose_series_order(bound, tau, 1, ctx);
    PowerSeries s(order);
    for (std::size_t n = 1; n <= order; ++n) s[n] = sigma(1, n);
    Complex value = Complex(1) - eval_series_at(s, tau, 1, bound, ctx) * Real(24);
    value.re -= Real(3) / (const_pi() * tau.v);
    return value;
}

Complex shadow_g1_closed(const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    ContextScope scope(ctx);
    return (e2_hat(tau, ctx) - e2_hat(tau.scaled(2), ctx) * Real(4)) * (const_pi() / Real(6));
}

Real g2_hat_explicit(const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    ContextScope scope(ctx);
    const Real& pi = const_pi();
    const auto g_bound = g_series_bound(2);
    const GrowthBound diff_bound{3.0 * kSigmaBound, 0.0};
    const Complex g2 = eval_series_at(g_series(2, choose_series_order(g_bound, tau, 1, ctx)), tau, 1, g_bound, ctx);
    const Complex big_g2 =
        eval_series_at(eichler_difference(2, choose_series_order(diff_bound, tau, 1, ctx)), tau, 1, diff_bound, ctx);
    const Real& v = tau.v;
    return Real(2) * g2.re - pi * pi * v * v / Real(6) +
           (Real(2) * big_g2.re - zeta_real(Real(3), ctx)) / (Real(2) * pi * v);
}

// --- completed Eichler integrals -------------------------------------------------------

Real eichler_normalizer(unsigned k)
{
    const Rational r = bernoulli(2 * k) / Rational(2 * factorial(2 * k));
    return Real(r) * pow(Real(4) * const_pi(), static_cast<long>(2 * k - 1));
}

Complex eichler_completed(unsigned k, long level, const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    ContextScope scope(ctx);
    require(k >= 2, "harmonic Eichler completion needs k >= 2");
    require(level >= 1, "level must be positive");
    const HalfPlanePoint w = tau.scaled(level);
    const Real& pi = const_pi();
    const long j = 1 - 2 * static_cast<long>(k);
    const unsigned m = 2 * k - 1;

    const auto bound = eichler_bound(k);
    const Complex holomorphic = eval_series_at(eichler_coeffs(k, choose_series_order(bound, w, 1, ctx)), w, 1, bound, ctx);

    // sigma Gamma*(m, 4 pi n v) |q|^{-n} <= 1.25 m (1 + 4 pi v)^{m-1} n^{m-1} e^{-2 pi n v}
    const double vd = w.v.to_double();
    const double log_a = std::log(kSigmaBound * m) + (m - 1) * std::log1p(4.0 * M_PI * vd);
    const double rate = 2.0 * M_PI * vd;
    const std::size_t cutoff = choose_cutoff(log_a, m - 1.0, rate, ctx);
    require_sufficient(tail_bound_log2(log_a, m - 1.0, rate, cutoff), cutoff, log_a, m - 1.0, rate, ctx,
                       "completed Eichler integral");

    Complex nonholomorphic;
    for (std::size_t n = 1; n <= cutoff; ++n) {
        const Real nn(static_cast<unsigned long>(n));
        const Real y = Real(4) * pi * nn * w.v;
        // q^{-n} = e^{2 pi n v} e^{-2 pi i n u}
        const Complex q_inv = exp(Complex(Real(2) * pi * nn * w.v, -Real(2) * pi * nn * w.u));
        nonholomorphic += q_inv * (Real(sigma(j, n)) * incomplete_gamma_normalized(m, y));
    }
    Complex value = holomorphic + nonholomorphic;
    value.re += eichler_normalizer(k) * pow(w.v, static_cast<long>(m)) + zeta_real(Real(static_cast<long>(m)), ctx);
    return value;
}

Complex eichler_sesqui(long level, const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    ContextScope scope(ctx);
    require(level >= 1, "level must be positive");
    const HalfPlanePoint w = tau.scaled(level);
    const Real& pi = const_pi();
    const auto bound = eichler_bound(1);
    const Complex e0 = eval_series_at(eichler_coeffs(1, choose_series_order(bound, w, 1, ctx)), w, 1, bound, ctx);
    // E_0(tau) + sum sigma_{-1}(n) qbar^n = 2 Re E_0(tau)
    return Complex(euler_gamma(ctx) - const_log2() + pi * w.v / Real(6) - log(w.v) / Real(2) -
                   Real(6) * zeta_prime_2(ctx) / (pi * pi) + Real(2) * e0.re);
}

Integer raising_coefficient(unsigned k, unsigned n, unsigned r)
{
    require(r <= n, "raising coefficient needs r <= n");
    Integer c = binomial(n, r) * rising_factorial(2 - 2 * static_cast<long>(k) + static_cast<long>(r), n - r);
    return (r % 2 == 0) ? c : Integer(-c);
}

Complex raising_eichler_direct(unsigned k, const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    ContextScope scope(ctx);
    require(k >= 2, "raising the Eichler integral needs k >= 2");
    const Real& pi = const_pi();
    const Real& v = tau.v;
    const Real four_pi = Real(4) * pi;
    const unsigned n_raise = k - 1;
    const long j = 1 - 2 * static_cast<long>(k);
    const unsigned p = 2 * k - 2;

    std::vector<Real> coeff;       // coeff(r) v^{r-n} (4 pi)^r
    std::vector<double> coeff_abs;
    for (unsigned r = 0; r <= n_raise; ++r) {
        coeff.push_back(Real(raising_coefficient(k, n_raise, r)) * pow(v, static_cast<long>(r) - static_cast<long>(n_raise)) *
                        pow(four_pi, static_cast<long>(r)));
        coeff_abs.push_back(std::fabs(coeff.back().to_double()));
    }

    // v^{2k-1} family: (4 pi)^r D^r v^{2k-1} = (-1)^r (2k-1)!/(2k-1-r)! v^{2k-1-r}; coeff already carries (4 pi)^r
    Real poly_part = 0;
    for (unsigned r = 0; r <= n_raise; ++r) {
        Real t = coeff[r] * Real(Integer(factorial(2 * k - 1) / factorial(2 * k - 1 - r))) * pow(v, static_cast<long>(2 * k - 1 - r)) /
                 pow(four_pi, static_cast<long>(r));
        poly_part += (r % 2 == 0) ? t : -t;
    }
    poly_part *= eichler_normalizer(k);
    // constant family: only r = 0 survives
    const Real constant_part = zeta_real(Real(static_cast<long>(2 * k - 1)), ctx) * coeff[0];

    // both q^n and Gamma* qbar^n families are bounded by A n^{2k-2} e^{-2 pi n v}
    const double vd = v.to_double();
    double a = 0;
    for (unsigned r = 0; r <= n_raise; ++r) a += coeff_abs[r] * (1.0 + (p - r + 1.0) * std::pow(1.0 + 4.0 * M_PI * vd, p - r));
    const double log_a = std::log(kSigmaBound * a);
    const double rate = 2.0 * M_PI * vd;
    const std::size_t cutoff = choose_cutoff(log_a, p, rate, ctx);
    require_sufficient(tail_bound_log2(log_a, p, rate, cutoff), cutoff, log_a, p, rate, ctx, "raised Eichler integral");

    Complex fourier;
    for (std::size_t n = 1; n <= cutoff; ++n) {
        const Real nn(static_cast<unsigned long>(n));
        const Real sig(sigma(j, n));
        const Complex q = exp(Complex(-Real(2) * pi * nn * v, Real(2) * pi * nn * tau.u));

        // D^r q^n = n^r q^n
        Real holo = 0;
        for (unsigned r = 0; r <= n_raise; ++r) holo += coeff[r] * pow(nn, static_cast<long>(r));

        // Gamma*(2k-1, y) q^{-n} = qbar^n / (2k-2)! int_0^inf (t + y)^{2k-2} e^{-t} dt, y = 4 pi n v,
        // D^r (t + y)^p = (-n)^r p!/(p-r)! (t + y)^{p-r}, int_0^inf (t + y)^a e^{-t} dt = e^y Gamma(a+1, y)
        const Real y = four_pi * nn * v;
        Real anti = 0;
        for (unsigned r = 0; r <= n_raise; ++r) {
            const Real integral = exp(y) * incomplete_gamma_int(p - r + 1, y);
            Real t = coeff[r] * pow(nn, static_cast<long>(r)) * integral / Real(factorial(p - r));
            anti += (r % 2 == 0) ? t : -t;
        }
        fourier += q * (sig * holo) + conj(q) * (sig * anti);
    }
    fourier.re += poly_part + constant_part;
    return fourier;
}

Complex raising_eichler_closed(unsigned k, const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    ContextScope scope(ctx);
    require(k >= 2, "raising the Eichler integral needs k >= 2");
    const Real& pi = const_pi();
    const Real& v = tau.v;
    const long sign = (k % 2 == 1) ? 1 : -1;  // (-1)^{k+1}
    const long j = 1 - 2 * static_cast<long>(k);

    const Real leading = eichler_normalizer(k) * Real(factorial(k - 1)) * pow(v, static_cast<long>(k));
    const Real constant = Real(sign) * zeta_real(Real(static_cast<long>(2 * k - 1)), ctx) *
                          Real(Integer(factorial(2 * k - 2) / factorial(k - 1))) * pow(v, 1 - static_cast<long>(k));

    const double vd = v.to_double();
    const double log_a =
        std::log(2.0 * kSigmaBound * std::pow(4.0 * M_PI, k - 0.5) / (2.0 * std::sqrt(M_PI)) * bessel_poly(k - 1, 1.0 / (4.0 * M_PI * vd)));
    const double rate = 2.0 * M_PI * vd;
    const std::size_t cutoff = choose_cutoff(log_a, k - 1.0, rate, ctx);
    require_sufficient(tail_bound_log2(log_a, k - 1.0, rate, cutoff), cutoff, log_a, k - 1.0, rate, ctx,
                       "raised Eichler integral (closed form)");

    const Real half_order = Real(static_cast<long>(k)) - Real(0.5);
    Real sum = 0;
    for (std::size_t n = 1; n <= cutoff; ++n) {
        const Real nn(static_cast<unsigned long>(n));
        sum += Real(sigma(j, n)) * pow(Real(4) * pi * nn, half_order) * k_bessel_half(k - 1, Real(2) * pi * nn * v) *
               Real(2) * cos(Real(2) * pi * nn * tau.u);
    }
    return Complex(leading + constant + Real(sign) * sqrt(v / pi) * sum);
}

Real raising_eisenstein_multiple(unsigned k, const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    ContextScope scope(ctx);
    require(k >= 2, "needs k >= 2");
    const FourierEvaluation e = eisenstein_maass(tau, Real(static_cast<long>(k)), ctx);
    if (!e.sufficient) fail(ErrorCode::insufficient_order, "Fourier cutoff too small for E(tau; k)");
    return eichler_normalizer(k) * Real(factorial(k - 1)) * e.value.re;
}

PowerSeries holomorphic_part_extract(unsigned k, std::size_t order)
{
    require(k >= 2, "needs k >= 2");
    PowerSeries h = eichler_coeffs(k, order);
    for (unsigned i = 1; i < k; ++i) h = h.theta();
    return h;
}

PowerSeries holomorphic_part_difference(unsigned k, std::size_t order)
{
    const PowerSeries h = holomorphic_part_extract(k, order);
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 2, k);
    return h - Rational(scale) * h.substitute_power(2);
}

// --- Kronecker limit and eta ---------------------------------------------------------

Real kronecker_limit(const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    ContextScope scope(ctx);
    const Real& pi = const_pi();
    const Real eta_abs = abs(dedekind_eta(tau, ctx));
    const Real inner = log(sqrt(tau.v) * eta_abs * eta_abs);
    return Real(6) / pi * (euler_gamma(ctx) - const_log2() - inner) - Real(36) / (pi * pi * pi) * zeta_prime_2(ctx);
}

Real g1_hat_via_kronecker(const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    ContextScope scope(ctx);
    return -const_pi() / Real(6) * (Real(2) * kronecker_limit(tau.scaled(2), ctx) - kronecker_limit(tau, ctx));
}

Real eisenstein_pole_subtracted(const HalfPlanePoint& tau, const Real& eps, const PrecisionContext& ctx)
{
    ContextScope scope(ctx);
    require(eps.sign() > 0, "eps must be positive");
    const FourierEvaluation e = eisenstein_maass(tau, Real(1) + eps, ctx);
    if (!e.sufficient) fail(ErrorCode::insufficient_order, "Fourier cutoff too small near s = 1");
    return e.value.re - Real(3) / (const_pi() * eps);
}

EtaIdentity g1_eta_identity(const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    ContextScope scope(ctx);
    const Real& pi = const_pi();
    EtaIdentity out;
    const Complex pi_i_tau_4 = Complex(-pi * tau.v, pi * tau.u) / Real(4);
    out.eta_side = log(dedekind_eta(tau.scaled(2), ctx)) * Real(2) - pi_i_tau_4 - log(dedekind_eta(tau, ctx));
    const auto bound = g_series_bound(1);
    out.series_side = eval_series_at(g_series(1, choose_series_order(bound, tau, 1, ctx)), tau, 1, bound, ctx);
    const Complex diff = out.eta_side - out.series_side;
    const Real two_pi = Real(2) * pi;
    out.winding = mpfr_get_si(round(diff.im / two_pi).get(), MPFR_RNDN);
    out.residual = abs(Complex(diff.re, diff.im - two_pi * Real(out.winding)));
    return out;
}

} // namespace srp
