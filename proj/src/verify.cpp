#include "srpm/verify.hpp"

#include "srpm/arithmetic.hpp"
#include "srpm/errors.hpp"
#include "srpm/maass.hpp"
#include "srpm/numdiff.hpp"
#include "srpm/partitions.hpp"
#include "srpm/qseries.hpp"

#include "json.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>

namespace srp {

namespace {

using Json = nlohmann::ordered_json;

struct CheckDef {
    std::string id;
    std::string anchor;
    bool exact;
    bool float_criterion;  // subject to the doubled-precision comparison
    std::function<void(CheckReport&, const RunOptions&)> body;
};

Real analytic_tolerance(const PrecisionContext& ctx) { return pow10_neg(0.2 * static_cast<double>(ctx.precision_bits)); }

// --- bookkeeping ----------------------------------------------------------------

void add_point(CheckReport& r, const std::string& label)
{
    if (std::find(r.points.begin(), r.points.end(), label) == r.points.end()) r.points.push_back(label);
}

void record(CheckReport& r, const std::string& label, const Real& deviation)
{
    add_point(r, label);
    if (!deviation.is_finite()) {
        if (r.note.empty()) r.note = "non-finite deviation at " + label;
        r.max_deviation = Real(1e300);
        return;
    }
    if (deviation > r.max_deviation) r.max_deviation = deviation;
}

void compare_exact(CheckReport& r, const std::string& what, const Rational& got, const Rational& want)
{
    if (got == want || r.exact_mismatch) return;
    r.exact_mismatch = true;
    r.note = what + ": got " + to_fraction_string(got) + ", expected " + to_fraction_string(want);
}

void compare_series(CheckReport& r, const std::string& what, const PowerSeries& got, const PowerSeries& want)
{
    const std::size_t n = std::min(got.order(), want.order());
    for (std::size_t i = 0; i <= n; ++i) compare_exact(r, what + " [q^" + std::to_string(i) + "]", got[i], want[i]);
}

Real rel_dev(const Complex& got, const Complex& want)
{
    const Real scale = abs(want);
    return scale.is_zero() ? abs(got - want) : abs(got - want) / scale;
}

Real abs_dev(const Complex& got, const Complex& want) { return abs(got - want); }

std::vector<HalfPlanePoint> points_of(const RunOptions& o)
{
    std::vector<HalfPlanePoint> out;
    for (const auto& p : o.points) out.push_back(p.at_working_precision());
    return out;
}

std::string label_of(const HalfPlanePoint& p) { return p.to_string(8); }

struct NamedElement {
    std::string name;
    Gamma0Element g;
};

// Generators of Gamma_0(2) and three short words in them.
std::vector<NamedElement> gamma0_2_words()
{
    const Gamma0Element t = Gamma0Element::translation(1, 2);
    const Gamma0Element u = Gamma0Element::lower(2);
    return {{"T", t}, {"U", u}, {"TU", t * u}, {"UT^-1", u * t.inverse()}, {"UT^-1U^-1", u * t.inverse() * u.inverse()}};
}

std::vector<NamedElement> sl2z_generators()
{
    return {{"T", Gamma0Element::translation(1)}, {"S", Gamma0Element::inversion()}};
}

// Weight-w invariance f(g tau) = (c tau + d)^w f(tau) over a set of group elements.
void invariance(CheckReport& r, const RunOptions& o, const std::vector<NamedElement>& words, long weight,
                const std::function<Complex(const HalfPlanePoint&)>& f)
{
    r.tolerance = analytic_tolerance(o.ctx);
    for (const auto& tau : points_of(o)) {
        const Complex base = f(tau);
        r.observables.push_back(base);
        for (const auto& w : words) {
            const MobiusImage img = mobius_act(w.g, tau);
            const Complex moved = f(img.point);
            const Complex expected = weight == 0 ? base : base * pow(img.factor, weight);
            r.observables.push_back(moved);
            record(r, label_of(tau) + " " + w.name, abs_dev(moved, expected));
        }
    }
}

StencilConfig stencil(const RunOptions& o) { return StencilConfig::from_context(o.ctx); }

// Deviations of an order-`order` stencil without extrapolation at steps v/16 and v/32.
Real stencil_rate(const std::function<Real(const Real& step, int order)>& deviation_at, int order)
{
    const Real d1 = deviation_at(Real(1) / Real(16), order);
    const Real d2 = deviation_at(Real(1) / Real(32), order);
    return d1 / d2;
}

void rate_check(CheckReport& r, const std::function<Real(const Real&, int)>& error_at)
{
    // deviation = |log2(ratio) - order|; accepting ratios within a factor 2 of 2^order
    r.tolerance = Real(1);
    for (int order : {2, 4}) {
        const Real ratio = stencil_rate(error_at, order);
        const Real observed = log(ratio) / const_log2();
        r.observables.push_back(Complex(ratio));
        record(r, "order " + std::to_string(order) + " ratio " + ratio.to_string(4), abs(observed - Real(order)));
    }
}

// --- exact checks ---------------------------------------------------------------------

void check_moment_oracle(CheckReport& r, const RunOptions&)
{
    add_point(r, "k<=5, n<=25");
    for (unsigned k = 1; k <= 5; ++k) {
        const PowerSeries s = moment_series(k, 25);
        for (unsigned n = 0; n <= 25; ++n)
            compare_exact(r, "s_" + std::to_string(k) + "(" + std::to_string(n) + ")", s[n], s_oracle(k, n));
    }
}

void check_s1_s2_products(CheckReport& r, const RunOptions&)
{
    constexpr std::size_t N = 40;
    add_point(r, "n<=40");
    const PowerSeries poch = pochhammer_neg_q(N);
    const PowerSeries g1 = g_series(1, N), g2 = g_series(2, N);
    const PowerSeries s1 = poch * g1;
    const PowerSeries s2 = poch * (g1 * g1 + g2);
    for (unsigned n = 0; n <= N; ++n) {
        compare_exact(r, "s_1(" + std::to_string(n) + ")", s1[n], s_oracle(1, n));
        compare_exact(r, "s_2(" + std::to_string(n) + ")", s2[n], s_oracle(2, n));
    }
}

// g_k = sum_m m^{-k} sum_j (-1)^{j+1} j^{k-1} q^{mj}, expanded term by term
void check_g_geometric(CheckReport& r, const RunOptions&)
{
    constexpr std::size_t N = 50;
    add_point(r, "k<=4, n<=50");
    for (unsigned k = 1; k <= 4; ++k) {
        PowerSeries geo(N);
        for (std::size_t m = 1; m <= N; ++m) {
            Integer mk;
            mpz_ui_pow_ui(mk.get_mpz_t(), m, k);
            for (std::size_t j = 1; m * j <= N; ++j) {
                Integer jk;
                mpz_ui_pow_ui(jk.get_mpz_t(), j, k - 1);
                const Rational term = make_rational(j % 2 == 1 ? jk : Integer(-jk), mk);
                geo[m * j] += term;
            }
        }
        compare_series(r, "g_" + std::to_string(k), g_series(k, N), geo);
    }
}

void check_pochhammer_count(CheckReport& r, const RunOptions&)
{
    add_point(r, "n<=40");
    const PowerSeries poch = pochhammer_neg_q(40);
    for (unsigned n = 0; n <= 40; ++n) {
        std::size_t count = 0;
        for (const auto& lambda : enumerate_distinct(n)) {
            (void)lambda;
            ++count;
        }
        compare_exact(r, "|D_" + std::to_string(n) + "|", poch[n], Rational(static_cast<unsigned long>(count)));
    }
}

void check_bell_y3(CheckReport& r, const RunOptions&)
{
    constexpr std::size_t N = 20;
    add_point(r, "n<=20");
    const PowerSeries g1 = g_series(1, N), g2 = g_series(2, N), g3 = g_series(3, N);
    const std::vector<PowerSeries> args{g1, g2, g3};
    compare_series(r, "Y_3", bell_complete(args), g1 * g1 * g1 + Rational(3) * (g1 * g2) + g3);
}

void check_sigma_multiplicative(CheckReport& r, const RunOptions&)
{
    add_point(r, "m,n<=30 coprime; n<=100");
    for (long j : {-3L, -1L, 1L, 3L})
        for (std::uint64_t m = 1; m <= 30; ++m)
            for (std::uint64_t n = 1; n <= 30; ++n)
                if (std::gcd(m, n) == 1)
                    compare_exact(r, "sigma_" + std::to_string(j) + "(" + std::to_string(m * n) + ")", sigma(j, m * n),
                                  sigma(j, m) * sigma(j, n));
    for (std::uint64_t n = 1; n <= 100; ++n)
        compare_exact(r, "n sigma_-1(" + std::to_string(n) + ")", Rational(static_cast<unsigned long>(n)) * sigma(-1, n), sigma(1, n));
}

// (2-2k+r)_{k-1-r} = (-1)^{k+r+1} (2k-r-2)! / (k-1)!
void check_raising_constant(CheckReport& r, const RunOptions&)
{
    add_point(r, "k<=6");
    for (unsigned k = 2; k <= 6; ++k)
        for (unsigned rr = 0; rr + 1 <= k - 1; ++rr) {
            Integer want = factorial(2 * k - rr - 2) / factorial(k - 1);
            if ((k + rr + 1) % 2 == 1) want = -want;
            compare_exact(r, "rising k=" + std::to_string(k) + " r=" + std::to_string(rr),
                          Rational(rising_factorial(2 - 2 * static_cast<long>(k) + rr, k - 1 - rr)), Rational(want));
        }
}

// D^{2k-1} of the Eichler integral recovers sum sigma_{2k-1}(n) q^n = (B_{2k}/4k)(1 - E_{2k})
void check_eichler_derivative(CheckReport& r, const RunOptions&)
{
    constexpr std::size_t N = 20;
    add_point(r, "k<=4, n<=20");
    for (unsigned k = 2; k <= 4; ++k) {
        PowerSeries d = eichler_coeffs(k, N);
        for (unsigned i = 0; i < 2 * k - 1; ++i) d = d.theta();
        const Rational b = bernoulli(2 * k);
        PowerSeries e(N);
        e[0] = 1;
        for (std::size_t n = 1; n <= N; ++n)
            e[n] = -Rational(4 * static_cast<long>(k)) / b * sigma(2 * static_cast<long>(k) - 1, n);
        PowerSeries want = PowerSeries::one(N) - e;
        want *= b / Rational(4 * static_cast<long>(k));
        compare_series(r, "D^" + std::to_string(2 * k - 1) + " E_" + std::to_string(2 - 2 * static_cast<long>(k)), d, want);
    }
}

void check_holomorphic_part(CheckReport& r, const RunOptions&)
{
    constexpr std::size_t N = 30;
    add_point(r, "k<=4, n<=30");
    for (unsigned k = 2; k <= 4; ++k)
        compare_series(r, "H - 2^k H(q^2), k=" + std::to_string(k), holomorphic_part_difference(k, N), g_series(k, N));
}

void check_srp3_oracle(CheckReport& r, const RunOptions&)
{
    add_point(r, "n<=30");
    const PowerSeries s = srp3_series(30);
    for (unsigned n = 0; n <= 30; ++n) compare_exact(r, "s_3*(" + std::to_string(n) + ")", s[n], s_star_oracle(3, n));
}

void check_g2_prefactor(CheckReport& r, const RunOptions&)
{
    add_point(r, "k=2");
    // full prefactor (4 pi)^2 times the rational part is pi^2 / 90
    compare_exact(r, "g_2-hat prefactor / pi^2", gk_hat_prefactor_rational(2) * Rational(16), make_rational(1, 90));
}

void check_twisted_oracle(CheckReport& r, const RunOptions&)
{
    add_point(r, "p in {3,5}, n<=30");
    for (long p : {3L, 5L}) {
        const PowerSeries t = twisted_series(p, 30);
        for (unsigned n = 0; n <= 30; ++n)
            compare_exact(r, "T_" + std::to_string(p) + "(" + std::to_string(n) + ")", t[n], s_twisted_oracle(p, n));
    }
}

void check_twisted_inner(CheckReport& r, const RunOptions&)
{
    add_point(r, "p in {3,5,7}, n<=50");
    for (long p : {3L, 5L, 7L})
        for (std::uint64_t n = 1; n <= 50; ++n)
            compare_exact(r, "inner p=" + std::to_string(p) + " n=" + std::to_string(n), twisted_inner_divisor_form(p, n),
                          twisted_inner_antiderivative_form(p, n));
}

// --- analytic checks ------------------------------------------------------------------------

void check_g1_modularity(CheckReport& r, const RunOptions& o)
{
    invariance(r, o, gamma0_2_words(), 0, [&](const HalfPlanePoint& t) { return Complex(g1_hat(t, o.ctx)); });
}

void check_gk_modularity(CheckReport& r, const RunOptions& o)
{
    for (unsigned k = 2; k <= 4; ++k) {
        CheckReport part;
        part.max_deviation = Real(0);
        invariance(part, o, gamma0_2_words(), 0, [&](const HalfPlanePoint& t) { return Complex(gk_hat(k, t, o.ctx)); });
        for (const auto& p : part.points) add_point(r, p);
        if (part.max_deviation > r.max_deviation) r.max_deviation = part.max_deviation;
        r.observables.insert(r.observables.end(), part.observables.begin(), part.observables.end());
        r.tolerance = part.tolerance;
    }
}

void check_eisenstein_modularity(CheckReport& r, const RunOptions& o)
{
    invariance(r, o, sl2z_generators(), 0, [&](const HalfPlanePoint& t) { return eisenstein_maass(t, Real(2), o.ctx).value; });
}

void check_eichler_modularity(CheckReport& r, const RunOptions& o)
{
    for (unsigned k = 2; k <= 3; ++k) {
        const long w = 2 - 2 * static_cast<long>(k);
        CheckReport a, b;
        a.max_deviation = b.max_deviation = Real(0);
        invariance(a, o, sl2z_generators(), w, [&](const HalfPlanePoint& t) { return eichler_completed(k, 1, t, o.ctx); });
        invariance(b, o, gamma0_2_words(), w, [&](const HalfPlanePoint& t) { return eichler_completed(k, 2, t, o.ctx); });
        for (const auto* part : {&a, &b}) {
            for (const auto& p : part->points) add_point(r, p);
            r.max_deviation = max(r.max_deviation, part->max_deviation);
            r.observables.insert(r.observables.end(), part->observables.begin(), part->observables.end());
            r.tolerance = part->tolerance;
        }
    }
}

void check_sesqui_modularity(CheckReport& r, const RunOptions& o)
{
    invariance(r, o, sl2z_generators(), 0, [&](const HalfPlanePoint& t) { return eichler_sesqui(1, t, o.ctx); });
}

void check_kronecker_modularity(CheckReport& r, const RunOptions& o)
{
    invariance(r, o, sl2z_generators(), 0, [&](const HalfPlanePoint& t) { return Complex(kronecker_limit(t, o.ctx)); });
}

void check_e2_modularity(CheckReport& r, const RunOptions& o)
{
    invariance(r, o, sl2z_generators(), 2, [&](const HalfPlanePoint& t) { return e2_hat(t, o.ctx); });
}

// eta(tau + 1) = e^{pi i / 12} eta(tau), eta(-1/tau) = sqrt(-i tau) eta(tau)
void check_eta_modularity(CheckReport& r, const RunOptions& o)
{
    r.tolerance = analytic_tolerance(o.ctx);
    const Real& pi = const_pi();
    for (const auto& tau : points_of(o)) {
        const Complex eta = dedekind_eta(tau, o.ctx);
        r.observables.push_back(eta);
        const Complex shifted = dedekind_eta(HalfPlanePoint(tau.u + Real(1), tau.v), o.ctx);
        record(r, label_of(tau) + " T", abs_dev(shifted, eta * expi(pi / Real(12))));
        const MobiusImage img = mobius_act(Gamma0Element::inversion(), tau);
        const Complex minus_i_tau(tau.v, -tau.u);
        const Complex root = exp(log(minus_i_tau) * (Real(1) / Real(2)));
        record(r, label_of(tau) + " S", abs_dev(dedekind_eta(img.point, o.ctx), root * eta));
    }
}

void check_shadow_g1(CheckReport& r, const RunOptions& o)
{
    r.tolerance = Real(1e-8);
    const StencilConfig cfg = stencil(o);
    const PointFunction f = [&](const HalfPlanePoint& t) { return Complex(g1_hat(t, o.ctx)); };
    for (const auto& tau : points_of(o)) {
        const Complex numeric = xi_apply(0, f, tau, cfg);
        r.observables.push_back(numeric);
        record(r, label_of(tau), rel_dev(numeric, shadow_g1_closed(tau, o.ctx)));
    }
}

void check_shadow_sesqui(CheckReport& r, const RunOptions& o)
{
    r.tolerance = Real(1e-8);
    const StencilConfig cfg = stencil(o);
    const PointFunction f = [&](const HalfPlanePoint& t) { return eichler_sesqui(1, t, o.ctx); };
    for (const auto& tau : points_of(o)) {
        const Complex numeric = xi_apply(0, f, tau, cfg);
        r.observables.push_back(numeric);
        record(r, label_of(tau), rel_dev(numeric, e2_hat(tau, o.ctx) * (const_pi() / Real(6))));
    }
}

// the shadow of g1-hat is harmonic of weight 2
void check_shadow_harmonic(CheckReport& r, const RunOptions& o)
{
    r.tolerance = Real(1e-6);
    const StencilConfig cfg = stencil(o);
    const PointFunction f = [&](const HalfPlanePoint& t) { return shadow_g1_closed(t, o.ctx); };
    for (const auto& tau : points_of(o)) {
        const Complex lap = laplacian_apply(2, f, tau, cfg);
        r.observables.push_back(lap);
        record(r, label_of(tau), abs(lap) / abs(f(tau)));
    }
}

void check_shadow_rate(CheckReport& r, const RunOptions& o)
{
    const HalfPlanePoint tau = o.points.front().at_working_precision();
    add_point(r, label_of(tau));
    const PointFunction f = [&](const HalfPlanePoint& t) { return Complex(g1_hat(t, o.ctx)); };
    const Complex closed = shadow_g1_closed(tau, o.ctx);
    rate_check(r, [&](const Real& step, int order) {
        const StencilConfig cfg{step, order, 0};
        return abs(xi_apply(0, f, tau, cfg) - closed);
    });
}

void check_gk_eigenvalue(CheckReport& r, const RunOptions& o)
{
    r.tolerance = Real(1e-6);
    const StencilConfig cfg = stencil(o);
    for (unsigned k = 2; k <= 3; ++k) {
        const PointFunction f = [&](const HalfPlanePoint& t) { return Complex(gk_hat(k, t, o.ctx)); };
        const Real eigen(static_cast<long>(k) * (1 - static_cast<long>(k)));
        for (const auto& tau : points_of(o)) {
            const Complex lap = laplacian_apply(0, f, tau, cfg);
            r.observables.push_back(lap);
            record(r, label_of(tau) + " k=" + std::to_string(k), rel_dev(lap, f(tau) * eigen));
        }
    }
}

void check_eisenstein_eigenvalue(CheckReport& r, const RunOptions& o)
{
    r.tolerance = Real(1e-6);
    const StencilConfig cfg = stencil(o);
    const PointFunction f = [&](const HalfPlanePoint& t) { return eisenstein_maass(t, Real(2), o.ctx).value; };
    auto pts = points_of(o);
    pts.insert(pts.begin(), HalfPlanePoint::parse("0.3", "0.9"));
    for (const auto& tau : pts) {
        const Complex lap = laplacian_apply(0, f, tau, cfg);
        r.observables.push_back(lap);
        record(r, label_of(tau), rel_dev(lap, f(tau) * Real(-2)));
    }
}

// Delta_0 = -xi_2 o xi_0 with two nested stencils
void check_nested_xi(CheckReport& r, const RunOptions& o)
{
    r.tolerance = Real(1e-6);
    const StencilConfig cfg = stencil(o);
    const PointFunction f = [&](const HalfPlanePoint& t) { return eisenstein_maass(t, Real(2), o.ctx).value; };
    const PointFunction inner = [&](const HalfPlanePoint& t) { return xi_apply(0, f, t, cfg); };
    const HalfPlanePoint tau = HalfPlanePoint::parse("0.3", "0.9");
    const Complex nested = xi_apply(2, inner, tau, cfg);
    r.observables.push_back(nested);
    // -Delta_0 E = 2 E
    record(r, label_of(tau), rel_dev(nested, f(tau) * Real(2)));
}

void check_eigen_rate(CheckReport& r, const RunOptions& o)
{
    const HalfPlanePoint tau = o.points.front().at_working_precision();
    add_point(r, label_of(tau));
    const PointFunction f = [&](const HalfPlanePoint& t) { return Complex(gk_hat(2, t, o.ctx)); };
    const Complex want = f(tau) * Real(-2);
    rate_check(r, [&](const Real& step, int order) {
        const StencilConfig cfg{step, order, 0};
        return abs(laplacian_apply(0, f, tau, cfg) - want);
    });
}

void check_raising_dual_path(CheckReport& r, const RunOptions& o)
{
    r.tolerance = analytic_tolerance(o.ctx);
    auto pts = points_of(o);
    if (pts.size() > 4) pts.erase(pts.begin() + 4, pts.end());
    for (unsigned k = 2; k <= 3; ++k)
        for (const auto& tau : pts) {
            const Complex direct = raising_eichler_direct(k, tau, o.ctx);
            const Complex closed = raising_eichler_closed(k, tau, o.ctx);
            const Complex multiple(raising_eisenstein_multiple(k, tau, o.ctx));
            r.observables.push_back(multiple);
            const std::string label = label_of(tau) + " k=" + std::to_string(k);
            record(r, label, rel_dev(direct, multiple));
            record(r, label, rel_dev(closed, multiple));
        }
}

void check_kronecker_route(CheckReport& r, const RunOptions& o)
{
    r.tolerance = analytic_tolerance(o.ctx);
    for (const auto& tau : points_of(o)) {
        const Real direct = g1_hat(tau, o.ctx);
        r.observables.push_back(Complex(direct));
        record(r, label_of(tau), abs(direct - g1_hat_via_kronecker(tau, o.ctx)));
    }
}

void check_sesqui_difference(CheckReport& r, const RunOptions& o)
{
    r.tolerance = analytic_tolerance(o.ctx);
    for (const auto& tau : points_of(o)) {
        const Complex diff = eichler_sesqui(1, tau, o.ctx) - eichler_sesqui(2, tau, o.ctx) * Real(2);
        r.observables.push_back(diff);
        record(r, label_of(tau), abs_dev(diff, Complex(g1_hat(tau, o.ctx))));
    }
}

void check_eta_identity(CheckReport& r, const RunOptions& o)
{
    r.tolerance = analytic_tolerance(o.ctx);
    std::string windings;
    for (const auto& tau : points_of(o)) {
        const EtaIdentity e = g1_eta_identity(tau, o.ctx);
        r.observables.push_back(e.series_side);
        record(r, label_of(tau), e.residual);
        if (e.winding != 0) windings += (windings.empty() ? "" : "; ") + label_of(tau) + " winding " + std::to_string(e.winding);
    }
    if (!windings.empty() && r.note.empty()) r.note = "branch offsets (multiples of 2 pi i): " + windings;
}

// E(tau; 1 + eps) - 3/(pi eps) -> Kr(tau), extrapolated linearly in eps
void check_direct_limit(CheckReport& r, const RunOptions& o)
{
    const HalfPlanePoint tau = HalfPlanePoint::parse("0", "1");
    add_point(r, label_of(tau));
    const Real e1 = Real::parse("1e-2");
    const Real e2 = Real::parse("1e-3");
    const Real f1 = eisenstein_pole_subtracted(tau, e1, o.ctx);
    const Real f2 = eisenstein_pole_subtracted(tau, e2, o.ctx);
    const Real extrapolated = (f2 * e1 - f1 * e2) / (e1 - e2);
    const Real reference = kronecker_limit(tau, o.ctx);
    r.observables.push_back(Complex(extrapolated));
    r.tolerance = Real(10) * e2 * abs(reference);
    record(r, label_of(tau), abs(extrapolated - reference));
}

void check_g2_example(CheckReport& r, const RunOptions& o)
{
    r.tolerance = analytic_tolerance(o.ctx);
    for (const auto& tau : points_of(o)) {
        const Real value = gk_hat(2, tau, o.ctx);
        r.observables.push_back(Complex(value));
        record(r, label_of(tau), abs(value - g2_hat_explicit(tau, o.ctx)));
    }
}

// phi(2) = 45 zeta(3) / pi^3 and phi(n, 2) = 90 / pi^2 n^{3/2} sigma_{-3}(n)
void check_phi_values(CheckReport& r, const RunOptions& o)
{
    r.tolerance = analytic_tolerance(o.ctx);
    const Real& pi = const_pi();
    const Real two(2);
    const Real phi = eisenstein_phi(two, o.ctx);
    r.observables.push_back(Complex(phi));
    record(r, "s=2", rel_dev(Complex(phi), Complex(Real(45) * zeta_real(Real(3), o.ctx) / (pi * pi * pi))));
    for (std::uint64_t n = 1; n <= 12; ++n) {
        const Real nn(static_cast<unsigned long>(n));
        const Real want = Real(90) / (pi * pi) * nn * sqrt(nn) * Real(sigma(-3, n));
        record(r, "s=2", rel_dev(Complex(eisenstein_phi_n(n, two, o.ctx)), Complex(want)));
    }
}

// B_{2k} = 2 (-1)^{k+1} (2k)! zeta(2k) / (2 pi)^{2k}
void check_bernoulli_zeta(CheckReport& r, const RunOptions& o)
{
    r.tolerance = analytic_tolerance(o.ctx);
    add_point(r, "k<=10");
    const Real two_pi = Real(2) * const_pi();
    for (unsigned k = 1; k <= 10; ++k) {
        Real want = Real(2) * Real(factorial(2 * k)) * zeta_real(Real(static_cast<long>(2 * k)), o.ctx) /
                    pow(two_pi, static_cast<long>(2 * k));
        if (k % 2 == 0) want = -want;
        const Real b(bernoulli(2 * k));
        r.observables.push_back(Complex(b));
        record(r, "k<=10", rel_dev(Complex(b), Complex(want)));
    }
}

const std::vector<CheckDef>& registry()
{
    static const std::vector<CheckDef> checks = {
        {"exact.bell_y3", "complete Bell polynomial Y_3 = g1^3 + 3 g1 g2 + g3", true, false, check_bell_y3},
        {"exact.eichler_derivative", "D^{2k-1} of the Eichler integral = (B_2k / 4k)(1 - E_2k)", true, false, check_eichler_derivative},
        {"exact.g_geometric", "g_k from the logarithmic-derivative expansion", true, false, check_g_geometric},
        {"exact.holomorphic_part", "holomorphic part of E(tau) - 2 E(2 tau) raised k-1 times equals g_k", true, false, check_holomorphic_part},
        {"exact.moment_oracle", "sum over distinct partitions of srp^k vs (-q;q) Y_k(g_1..g_k)", true, false, check_moment_oracle},
        {"exact.pochhammer_count", "(-q;q) coefficients count distinct partitions", true, false, check_pochhammer_count},
        {"exact.raising_constant", "rising factorial closed form in the raised constant term", true, false, check_raising_constant},
        {"exact.s1_s2_products", "s_1 = (-q;q) g_1 and s_2 = (-q;q)(g_1^2 + g_2)", true, false, check_s1_s2_products},
        {"exact.sigma_arithmetic", "sigma_j multiplicative; n sigma_-1(n) = sigma_1(n)", true, false, check_sigma_multiplicative},
        {"example.bernoulli_zeta", "B_2k from zeta(2k)", false, true, check_bernoulli_zeta},
        {"example.g2_hat", "g_2-hat from E(tau;2) equals its explicit expansion", false, true, check_g2_example},
        {"example.g2_prefactor", "g_2-hat prefactor equals pi^2/90", true, false, check_g2_prefactor},
        {"example.phi_values", "scattering coefficient phi(2) and phi(n,2)", false, true, check_phi_values},
        {"example.srp3_oracle", "s_3* = (-q;q) G_2 vs partition oracle", true, false, check_srp3_oracle},
        {"eigenvalue.eisenstein", "Delta_0 E(tau;2) = -2 E(tau;2)", false, true, check_eisenstein_eigenvalue},
        {"eigenvalue.gk_hat", "Delta_0 g_k-hat = k(1-k) g_k-hat", false, true, check_gk_eigenvalue},
        {"eigenvalue.nested_xi", "xi_2 xi_0 E(tau;2) = -Delta_0 E(tau;2)", false, true, check_nested_xi},
        {"eigenvalue.raising_dual_path", "R^{k-1} of the completed Eichler integral, three routes", false, true, check_raising_dual_path},
        {"eigenvalue.stencil_rate", "Laplacian stencil error shrinks by 2^order per halving", false, false, check_eigen_rate},
        {"limit.direct", "E(tau;1+eps) - 3/(pi eps) -> Kr(tau)", false, true, check_direct_limit},
        {"limit.eta_identity", "g_1 as a combination of Log eta(tau), Log eta(2 tau)", false, true, check_eta_identity},
        {"limit.kronecker", "g_1-hat = -pi/6 (2 Kr(2 tau) - Kr(tau))", false, true, check_kronecker_route},
        {"limit.sesqui_difference", "E-completed(tau) - 2 E-completed(2 tau) = g_1-hat", false, true, check_sesqui_difference},
        {"modularity.e2_hat", "E_2-hat has weight 2 under SL_2(Z)", false, true, check_e2_modularity},
        {"modularity.eichler_completed", "completed Eichler integrals have weight 2-2k", false, true, check_eichler_modularity},
        {"modularity.eichler_sesqui", "sesquiharmonic completion is SL_2(Z)-invariant", false, true, check_sesqui_modularity},
        {"modularity.eisenstein", "E(tau;2) is SL_2(Z)-invariant", false, true, check_eisenstein_modularity},
        {"modularity.eta", "eta transformation under T and S", false, true, check_eta_modularity},
        {"modularity.g1_hat", "g_1-hat is Gamma_0(2)-invariant", false, true, check_g1_modularity},
        {"modularity.gk_hat", "g_k-hat is Gamma_0(2)-invariant, k = 2,3,4", false, true, check_gk_modularity},
        {"modularity.kronecker", "Kronecker limit is SL_2(Z)-invariant", false, true, check_kronecker_modularity},
        {"shadow.g1_hat", "xi_0 g_1-hat = pi/6 (E_2-hat(tau) - 4 E_2-hat(2 tau))", false, true, check_shadow_g1},
        {"shadow.harmonic", "Delta_2 of the g_1-hat shadow vanishes", false, true, check_shadow_harmonic},
        {"shadow.sesqui", "xi_0 of the sesquiharmonic completion = pi/6 E_2-hat", false, true, check_shadow_sesqui},
        {"shadow.stencil_rate", "xi_0 stencil error shrinks by 2^order per halving", false, false, check_shadow_rate},
        {"twisted.inner_forms", "divisor and antiderivative forms of the twisted coefficient agree", true, false, check_twisted_inner},
        {"twisted.oracle", "twisted series vs partition oracle", true, false, check_twisted_oracle},
    };
    return checks;
}

const CheckDef& find_check(const std::string& id)
{
    for (const auto& c : registry())
        if (c.id == id) return c;
    fail(ErrorCode::unknown_suite, "unknown check '" + id + "'");
}

bool slow_only(const std::string& id) { return id == "limit.direct"; }

} // namespace

const char* to_string(CheckStatus status)
{
    switch (status) {
    case CheckStatus::pass: return "pass";
    case CheckStatus::fail: return "fail";
    case CheckStatus::skipped: return "skipped";
    }
    return "?";
}

std::vector<PointSpec> default_manifest_points()
{
    return {{"0.3", "0.8"}, {"0.41", "0.83"}, {"0.37", "1.1"}, {"0.1", "1.5"}, {"0.2", "0.4"}, {"0.75", "2.0"}};
}

std::vector<PointSpec> parse_points_json(const std::string& text)
{
    Json doc;
    try {
        doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
        fail(ErrorCode::invalid_argument, std::string("points file is not valid JSON: ") + e.what());
    }
    auto as_text = [](const Json& x) {
        if (x.is_string()) return x.get<std::string>();
        if (x.is_number()) return x.dump();
        fail(ErrorCode::invalid_argument, "point coordinates must be numbers or decimal strings");
    };
    require(doc.is_array() && !doc.empty(), "points must be a non-empty JSON array");
    std::vector<PointSpec> out;
    for (const auto& p : doc) {
        PointSpec spec;
        if (p.is_array() && p.size() == 2) {
            spec = {as_text(p[0]), as_text(p[1])};
        } else if (p.is_object() && p.contains("u") && p.contains("v")) {
            spec = {as_text(p["u"]), as_text(p["v"])};
        } else {
            fail(ErrorCode::invalid_argument, "each point must be [u, v] or {\"u\": .., \"v\": ..}");
        }
        PrecisionScope scope(64);
        (void)spec.at_working_precision();  // validates v > 0
        out.push_back(std::move(spec));
    }
    return out;
}

std::size_t SuiteReport::count(CheckStatus status) const
{
    return static_cast<std::size_t>(std::count_if(checks.begin(), checks.end(), [&](const CheckReport& c) { return c.status == status; }));
}

const std::vector<SuiteManifest>& suite_manifests()
{
    static const std::vector<SuiteManifest> manifests = [] {
        std::map<std::string, std::vector<std::string>> by_suite;
        for (const auto& c : registry()) by_suite[c.id.substr(0, c.id.find('.'))].push_back(c.id);
        std::vector<SuiteManifest> out;
        for (const char* name : {"exact", "modularity", "shadow", "eigenvalue", "limit", "example", "twisted"}) {
            auto ids = by_suite[name];
            std::sort(ids.begin(), ids.end());
            out.push_back({name, ids, PrecisionContext{}, default_manifest_points()});
        }
        return out;
    }();
    return manifests;
}

std::vector<std::string> suite_names()
{
    std::vector<std::string> names;
    for (const auto& m : suite_manifests()) names.push_back(m.name);
    names.push_back("all");
    return names;
}

std::vector<std::string> all_check_ids()
{
    std::vector<std::string> ids;
    for (const auto& c : registry()) ids.push_back(c.id);
    std::sort(ids.begin(), ids.end());
    return ids;
}

std::vector<std::string> suite_check_ids(const std::string& suite)
{
    if (suite == "all") return all_check_ids();
    for (const auto& m : suite_manifests())
        if (m.name == suite) return m.check_ids;
    fail(ErrorCode::unknown_suite, "unknown suite '" + suite + "'");
}

CheckReport run_check(const std::string& id, const RunOptions& options)
{
    const CheckDef& def = find_check(id);
    options.ctx.validate();
    require(!options.points.empty(), "at least one sample point is required");
    ContextScope scope(options.ctx);

    CheckReport report;
    report.id = def.id;
    report.anchor = def.anchor;
    report.exact = def.exact;
    report.max_deviation = Real(0);
    report.tolerance = Real(0);

    if (slow_only(id) && !options.slow) {
        report.status = CheckStatus::skipped;
        report.note = "needs --slow";
        return report;
    }

    const auto start = std::chrono::steady_clock::now();
    try {
        def.body(report, options);
        if (def.exact) {
            report.status = report.exact_mismatch ? CheckStatus::fail : CheckStatus::pass;
        } else {
            report.status = report.max_deviation < report.tolerance ? CheckStatus::pass : CheckStatus::fail;
        }
    } catch (const InsufficientOrder& e) {
        report.status = CheckStatus::fail;
        report.note = std::string(e.what()) + " (sufficient order " + std::to_string(e.required()) + ")";
    } catch (const Error& e) {
        report.status = CheckStatus::fail;
        report.note = e.what();
    }
    report.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

SuiteReport run_suite(const std::string& suite, const RunOptions& options)
{
    const auto ids = suite_check_ids(suite);
    options.ctx.validate();
    SuiteReport report;
    report.suite = suite;
    report.ctx = options.ctx;
    for (const auto& id : ids) report.checks.push_back(run_check(id, options));
    std::sort(report.checks.begin(), report.checks.end(), [](const CheckReport& a, const CheckReport& b) { return a.id < b.id; });
    return report;
}

StabilityResult precision_stability(const std::string& id, const RunOptions& options)
{
    const CheckDef& def = find_check(id);
    require(def.float_criterion, "check '" + id + "' has no floating-point observables to compare");
    RunOptions fine = options;
    fine.ctx = options.ctx.doubled();
    const CheckReport coarse_report = run_check(id, options);
    const CheckReport fine_report = run_check(id, fine);

    ContextScope scope(options.ctx);
    StabilityResult out;
    out.id = id;
    out.tolerance = coarse_report.tolerance;
    out.max_change = Real(0);
    if (coarse_report.status == CheckStatus::skipped) {
        out.passed = true;
        return out;
    }
    if (coarse_report.observables.size() != fine_report.observables.size() || coarse_report.observables.empty()) {
        out.max_change = Real(1e300);
        return out;
    }
    for (std::size_t i = 0; i < coarse_report.observables.size(); ++i) {
        const Complex& a = coarse_report.observables[i];
        const Complex& b = fine_report.observables[i];
        out.max_change = max(out.max_change, abs(a - b) / max(Real(1), abs(b)));
    }
    out.passed = out.max_change < out.tolerance;
    return out;
}

// --- serialization ------------------------------------------------------------------------

namespace {

std::string real_text(const Real& x) { return x.to_string(6); }

Json context_json(const PrecisionContext& ctx)
{
    Json c;
    c["prec"] = ctx.precision_bits;
    c["order"] = ctx.series_order == 0 ? Json("auto") : Json(ctx.series_order);
    c["cutoff"] = ctx.fourier_cutoff == 0 ? Json("auto") : Json(ctx.fourier_cutoff);
    c["step"] = ctx.stencil_step > 0 ? ctx.stencil_step : std::ldexp(1.0, -static_cast<int>(ctx.precision_bits / 4));
    return c;
}

} // namespace

std::string report_to_json(const SuiteReport& report)
{
    Json doc;
    doc["suite"] = report.suite;
    doc["context"] = context_json(report.ctx);
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json j;
        j["id"] = c.id;
        j["anchor"] = c.anchor;
        j["points"] = c.points;
        if (c.exact) {
            j["max_deviation"] = c.status == CheckStatus::skipped ? Json(nullptr) : Json(c.exact_mismatch ? "mismatch" : "0");
            j["tolerance"] = "exact";
        } else {
            j["max_deviation"] = c.status == CheckStatus::skipped ? Json(nullptr) : Json(real_text(c.max_deviation));
            j["tolerance"] = c.status == CheckStatus::skipped ? Json(nullptr) : Json(real_text(c.tolerance));
        }
        j["status"] = to_string(c.status);
        j["runtime_ms"] = std::round(c.runtime_ms * 10.0) / 10.0;
        if (!c.note.empty()) j["note"] = c.note;
        checks.push_back(std::move(j));
    }
    doc["checks"] = std::move(checks);
    doc["summary"] = {{"pass", report.count(CheckStatus::pass)},
                      {"fail", report.count(CheckStatus::fail)},
                      {"skipped", report.count(CheckStatus::skipped)}};
    return doc.dump(2) + "\n";
}

std::string report_to_csv(const SuiteReport& report)
{
    std::ostringstream out;
    out << "id,status,max_deviation,tolerance,runtime_ms\n";
    for (const auto& c : report.checks) {
        out << c.id << ',' << to_string(c.status) << ',';
        if (c.status == CheckStatus::skipped) {
            out << ",";
        } else if (c.exact) {
            out << (c.exact_mismatch ? "mismatch" : "0") << ",exact";
        } else {
            out << real_text(c.max_deviation) << ',' << real_text(c.tolerance);
        }
        out << ',' << std::round(c.runtime_ms * 10.0) / 10.0 << '\n';
    }
    return out.str();
}

TableKind parse_table_kind(const std::string& text)
{
    if (text == "s_k") return TableKind::s_k;
    if (text == "g_k") return TableKind::g_k;
    if (text == "srp3") return TableKind::srp3;
    if (text == "twisted") return TableKind::twisted;
    fail(ErrorCode::invalid_argument, "unknown table kind '" + text + "' (s_k, g_k, srp3, twisted)");
}

TableFormat parse_table_format(const std::string& text)
{
    if (text == "csv") return TableFormat::csv;
    if (text == "json") return TableFormat::json;
    fail(ErrorCode::invalid_argument, "unknown format '" + text + "' (csv, json)");
}

PowerSeries table_series(TableKind kind, long param, std::size_t order)
{
    switch (kind) {
    case TableKind::s_k:
        require(param >= 1, "s_k table needs k >= 1");
        return moment_series(static_cast<unsigned>(param), order);
    case TableKind::g_k:
        require(param >= 1, "g_k table needs k >= 1");
        return g_series(static_cast<unsigned>(param), order);
    case TableKind::srp3:
        return srp3_series(order);
    case TableKind::twisted:
        return twisted_series(param, order);
    }
    fail(ErrorCode::invalid_argument, "unknown table kind");
}

std::string emit_table(TableKind kind, long param, std::size_t order, TableFormat format)
{
    const PowerSeries s = table_series(kind, param, order);
    return format == TableFormat::csv ? to_csv(s) : to_json(s) + "\n";
}

void write_table(TableKind kind, long param, std::size_t order, TableFormat format, const std::string& path)
{
    const std::string text = emit_table(kind, param, order, format);
    std::ofstream out(path, std::ios::binary);
    if (!out) fail(ErrorCode::io, "cannot open '" + path + "' for writing");
    out << text;
    out.flush();
    if (!out) fail(ErrorCode::io, "write to '" + path + "' failed");
}

} // namespace srp
