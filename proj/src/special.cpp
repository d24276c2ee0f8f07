#include "srpm/special.hpp"

#include "srpm/arithmetic.hpp"
#include "srpm/errors.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <mutex>
#include <sstream>

namespace srp {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

/// Per-precision cache for the constants that are computed by series here.
class ConstantCache {
public:
    template <class Fn>
    Real get(long bits, Fn&& compute)
    {
        {
            std::lock_guard lock(mutex_);
            if (auto it = values_.find(bits); it != values_.end()) return it->second;
        }
        Real value = compute();
        std::lock_guard lock(mutex_);
        return values_.emplace(bits, std::move(value)).first->second;
    }

private:
    std::mutex mutex_;
    std::map<long, Real> values_;
};

} // namespace

void PrecisionContext::validate() const
{
    require(precision_bits >= 64, "working precision must be at least 64 bits");
    require(guard_bits >= 16, "guard bits must be at least 16");
    require(quadrature_nodes >= 16, "quadrature node budget too small");
    require(stencil_step >= 0 && stencil_step < 0.25, "stencil step h/v must lie in [0, 0.25)");
    require(stencil_order == 2 || stencil_order == 4, "stencil order must be 2 or 4");
    require(richardson_levels >= 0 && richardson_levels <= 4, "richardson levels must lie in [0, 4]");
}

PrecisionContext PrecisionContext::doubled() const
{
    PrecisionContext out = *this;
    out.precision_bits *= 2;
    out.guard_bits *= 2;
    return out;
}

HalfPlanePoint::HalfPlanePoint(Real u_, Real v_) : u(std::move(u_)), v(std::move(v_))
{
    if (v.sign() <= 0 || !v.is_finite() || !u.is_finite()) fail(ErrorCode::domain, "point must lie in the upper half-plane (v > 0)");
}

HalfPlanePoint HalfPlanePoint::parse(const std::string& u, const std::string& v)
{
    return {Real::parse(u), Real::parse(v)};
}

std::string HalfPlanePoint::to_string(int digits) const
{
    std::ostringstream out;
    out.precision(digits);
    out << u.to_double() << (v.sign() < 0 ? "-" : "+") << v.to_double() << "i";
    return out.str();
}

double tail_bound_log2(double log_a, double exponent, double rate, std::size_t cutoff)
{
    const double m1 = static_cast<double>(cutoff) + 1.0;
    const double first = log_a + exponent * std::log(m1) - rate * m1;
    const double log_ratio = std::max(0.0, exponent) * std::log1p(1.0 / m1) - rate;
    if (log_ratio >= 0) return std::numeric_limits<double>::infinity();
    return (first - std::log1p(-std::exp(log_ratio))) / kLn2;
}

std::size_t minimal_cutoff(double log_a, double exponent, double rate, double target_log2)
{
    require(rate > 0, "tail majorant needs a positive decay rate");
    constexpr std::size_t kLimit = 50'000'000;
    for (std::size_t m = 0; m < kLimit; ++m) {
        if (tail_bound_log2(log_a, exponent, rate, m) < target_log2) return m;
    }
    fail(ErrorCode::not_converged, "no truncation order below the limit reaches the requested accuracy");
}

// --- Bessel ----------------------------------------------------------------

Real k_bessel_half(unsigned n, const Real& x)
{
    if (x.sign() <= 0) fail(ErrorCode::domain, "K-Bessel needs x > 0");
    const Real two_x = Real(2) * x;
    Real sum = 0, power = 1;
    for (unsigned r = 0; r <= n; ++r) {
        const Integer c = factorial(n + r) / (factorial(r) * factorial(n - r));
        sum += Real(c) / power;
        power *= two_x;
    }
    return sqrt(const_pi() / two_x) * exp(-x) * sum;
}

Real k_bessel_general(const Real& nu, const Real& x, const PrecisionContext& ctx)
{
    ContextScope scope(ctx);
    if (x.sign() <= 0) fail(ErrorCode::domain, "K-Bessel needs x > 0");
    const long wp = ctx.working_bits();
    const double xd = x.to_double(), nud = std::fabs(nu.to_double());
    // beyond t_max the integrand is below 2^{-wp-16} of its value at 0 and decreasing
    const double budget = (wp + 16) * kLn2;
    double t_max = 1.0;
    while (xd * std::cosh(t_max) - nud * t_max - xd < budget) t_max *= 1.25;

    auto integrand = [&](const Real& t) { return exp(-x * cosh(t)) * cosh(nu * t); };
    const Real tol = epsilon_bits(wp - 4);

    Real h = Real(0.5);
    std::size_t nodes = static_cast<std::size_t>(std::ceil(t_max / 0.5));
    Real sum = integrand(Real(0)) / Real(2);
    for (std::size_t j = 1; j <= nodes; ++j) sum += integrand(h * Real(static_cast<long>(j)));
    Real estimate = h * sum;

    while (true) {
        if (2 * nodes > ctx.quadrature_nodes)
            fail(ErrorCode::not_converged, "K-Bessel quadrature did not converge within the node budget");
        // the refined rule reuses every old node and adds the midpoints
        const Real half = h / Real(2);
        for (std::size_t j = 0; j < nodes; ++j) sum += integrand(half * Real(static_cast<long>(2 * j + 1)));
        h = half;
        nodes *= 2;
        Real refined = h * sum;
        const bool converged = abs(refined - estimate) <= tol * abs(refined);
        estimate = std::move(refined);
        if (converged) return estimate;
    }
}

Real incomplete_gamma_int(unsigned m, const Real& y)
{
    require(m >= 1, "incomplete gamma needs m >= 1");
    if (y.sign() < 0) fail(ErrorCode::domain, "incomplete gamma needs y >= 0");
    return Real(factorial(m - 1)) * incomplete_gamma_normalized(m, y);
}

Real incomplete_gamma_normalized(unsigned m, const Real& y)
{
    require(m >= 1, "incomplete gamma needs m >= 1");
    if (y.sign() < 0) fail(ErrorCode::domain, "incomplete gamma needs y >= 0");
    Real sum = 0, term = 1;
    for (unsigned j = 0; j < m; ++j) {
        sum += term;
        term = term * y / Real(static_cast<long>(j + 1));
    }
    return exp(-y) * sum;
}

// --- zeta --------------------------------------------------------------------

namespace {

struct EulerMaclaurin {
    Real value;
    Real derivative;
};

// Sum_{n<N} plus integral, boundary and Bernoulli corrections. The derivative
// in s is carried along when wanted.
EulerMaclaurin euler_maclaurin_zeta(const Real& s, bool with_derivative, long wp)
{
    const long n_terms = wp / 4 + 10;
    const Real big_n(n_terms);
    const Real log_n = log(big_n);
    const Real sm1 = s - Real(1);

    Real value = 0, derivative = 0;
    for (long n = 1; n < n_terms; ++n) {
        const Real ln = log(Real(n));
        const Real t = exp(-s * ln);
        value += t;
        if (with_derivative) derivative -= ln * t;
    }
    const Real n_pow = exp(-s * log_n);  // N^{-s}
    const Real n_pow1 = n_pow * big_n;   // N^{1-s}
    value += n_pow1 / sm1 + n_pow / Real(2);
    if (with_derivative) derivative -= n_pow1 * (log_n / sm1 + Real(1) / (sm1 * sm1)) + log_n * n_pow / Real(2);

    const Real tol = epsilon_bits(wp);
    Real poly = s;             // s (s+1) ... (s+2j-2)
    Real poly_d = 1;           // its derivative in s
    Real w = n_pow / big_n;    // N^{-s-2j+1}
    const Real n_sq = big_n * big_n;
    Real last = 0;
    for (unsigned j = 1; j < 400; ++j) {
        const Real c = Real(bernoulli(2 * j)) / Real(factorial(2 * j));
        const Real term = c * poly * w;
        const Real term_d = c * (poly_d - log_n * poly) * w;
        value += term;
        if (with_derivative) derivative += term_d;
        const Real size = with_derivative ? max(abs(term), abs(term_d)) : abs(term);
        if (size <= tol * abs(value) && (!with_derivative || size <= tol * abs(derivative))) return {value, derivative};
        if (j > 2 && size > last) break;
        last = size;
        const Real a = s + Real(static_cast<long>(2 * j - 1));
        const Real b = s + Real(static_cast<long>(2 * j));
        poly_d = poly_d * a * b + poly * (a + b);
        poly = poly * a * b;
        w /= n_sq;
    }
    fail(ErrorCode::not_converged, "Euler-Maclaurin series for zeta stopped converging");
}

} // namespace

Real zeta_real(const Real& s, const PrecisionContext& ctx)
{
    ContextScope scope(ctx);
    if (!(s > Real(1))) fail(ErrorCode::domain, "zeta(s) is only evaluated for real s > 1");
    return euler_maclaurin_zeta(s, false, ctx.working_bits()).value;
}

Real zeta_prime(const Real& s, const PrecisionContext& ctx)
{
    ContextScope scope(ctx);
    if (!(s > Real(1))) fail(ErrorCode::domain, "zeta'(s) is only evaluated for real s > 1");
    return euler_maclaurin_zeta(s, true, ctx.working_bits()).derivative;
}

Real zeta_prime_2(const PrecisionContext& ctx)
{
    static ConstantCache cache;
    ContextScope scope(ctx);
    return cache.get(ctx.working_bits(), [&] { return zeta_prime(Real(2), ctx); });
}

Real euler_gamma(const PrecisionContext& ctx)
{
    static ConstantCache cache;
    ContextScope scope(ctx);
    const long wp = ctx.working_bits();
    return cache.get(wp, [&] {
        Real result;
        {
            PrecisionScope inner(wp + 24);
            // error of the truncated Brent-McMillan quotient is O(e^{-4n})
            const long n = static_cast<long>(std::ceil(wp * kLn2 / 4.0)) + 2;
            const Real n_sq = Real(n) * Real(n);
            Real a = -log(Real(n)), b = 1;
            Real u = a, v = b;
            const Real tol = epsilon_bits(wp + 20);
            for (long k = 1;; ++k) {
                const Real kk(k);
                b = b * n_sq / (kk * kk);
                a = (a * n_sq / kk + b) / kk;
                u += a;
                v += b;
                if (k > n && b <= tol * v && abs(a) <= tol * abs(u)) break;
            }
            result = u / v;
        }
        Real rounded;
        mpfr_set(rounded.get(), result.get(), MPFR_RNDN);
        return rounded;
    });
}

// --- eta and series evaluation -------------------------------------------------

Complex dedekind_eta(const HalfPlanePoint& tau, const PrecisionContext& ctx)
{
    ContextScope scope(ctx);
    const double v = tau.v.to_double();
    if (v > 1e9) fail(ErrorCode::domain, "q^{1/24} underflows at this height");
    const Real two_pi = Real(2) * const_pi();
    const Complex q = exp(Complex(-two_pi * tau.v, two_pi * tau.u));
    const double rate = 2.0 * M_PI * v;
    // |q|^{M+1} / (1 - |q|) below target
    const std::size_t m = minimal_cutoff(-std::log1p(-std::exp(-rate)), 0.0, rate, ctx.tail_target_log2());

    Complex product(1), q_power = q;
    for (std::size_t n = 1; n <= m; ++n) {
        product *= Complex(1) - q_power;
        q_power *= q;
    }
    const Complex q24 = exp(Complex(-two_pi * tau.v / Real(24), two_pi * tau.u / Real(24)));
    return q24 * product;
}

std::size_t required_series_order(const GrowthBound& bound, const HalfPlanePoint& tau, long scale, const PrecisionContext& ctx)
{
    require(scale >= 1, "series scale must be positive");
    const double rate = 2.0 * M_PI * static_cast<double>(scale) * tau.v.to_double();
    return minimal_cutoff(std::log(bound.constant), bound.exponent, rate, ctx.tail_target_log2());
}

Complex eval_series_at(const PowerSeries& series, const HalfPlanePoint& tau, long scale, const GrowthBound& bound,
                       const PrecisionContext& ctx)
{
    ContextScope scope(ctx);
    const std::size_t needed = required_series_order(bound, tau, scale, ctx);
    if (series.order() < needed)
        throw InsufficientOrder("series order " + std::to_string(series.order()) + " too small at " + tau.to_string() +
                                    "; need at least " + std::to_string(needed),
                                needed);
    const Real two_pi_scale = Real(2) * const_pi() * Real(scale);
    const Complex q = exp(Complex(-two_pi_scale * tau.v, two_pi_scale * tau.u));
    Complex acc;
    for (std::size_t n = series.order() + 1; n-- > 0;) {
        acc *= q;
        if (series[n] != 0) acc.re += Real(series[n]);
    }
    return acc;
}

} // namespace srp
