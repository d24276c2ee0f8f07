#include "srpm/qseries.hpp"

#include "srpm/arithmetic.hpp"
#include "srpm/errors.hpp"

#include <string>
#include <vector>

namespace srp {

PowerSeries pochhammer_neg_q(std::size_t order)
{
    auto& cache = ArithmeticCache::shared();
    PowerSeries s(order);
    for (std::size_t n = 0; n <= order; ++n) s[n] = Rational(cache.distinct_count(n));
    return s;
}

PowerSeries eichler_coeffs(unsigned k, std::size_t order)
{
    require(k >= 1, "Eichler integral needs k >= 1");
    PowerSeries s(order);
    for (std::size_t n = 1; n <= order; ++n) s[n] = sigma(1 - 2 * static_cast<long>(k), n);
    return s;
}

PowerSeries g_series(unsigned k, std::size_t order)
{
    require(k >= 1, "g_k needs k >= 1");
    const long j = 1 - 2 * static_cast<long>(k);
    PowerSeries s(order);
    Integer weight;
    for (std::size_t n = 1; n <= order; ++n) {
        Rational c = sigma(j, n);
        if (n % 2 == 0) c -= 2 * sigma(j, n / 2);
        mpz_ui_pow_ui(weight.get_mpz_t(), n, k - 1);
        s[n] = c * Rational(weight);
    }
    return s;
}

PowerSeries bell_complete(std::span<const PowerSeries> values)
{
    require(!values.empty(), "Bell polynomial needs at least one argument");
    const std::size_t order = values.front().order();
    for (const auto& v : values) require(v.order() == order, "Bell polynomial arguments must share one order");

    std::vector<PowerSeries> y{PowerSeries::one(order)};
    for (std::size_t m = 0; m < values.size(); ++m) {
        PowerSeries next(order);
        for (std::size_t j = 0; j <= m; ++j) {
            const Rational c(binomial(static_cast<unsigned>(m), static_cast<unsigned>(j)));
            next += c * series_mul(y[m - j], values[j]);
        }
        y.push_back(std::move(next));
    }
    return y.back();
}

PowerSeries moment_series(unsigned k, std::size_t order)
{
    require(k >= 1, "moment series needs k >= 1");
    std::vector<PowerSeries> g;
    for (unsigned j = 1; j <= k; ++j) g.push_back(g_series(j, order));
    return series_mul(pochhammer_neg_q(order), bell_complete(g));
}

PowerSeries eichler_difference(unsigned k, std::size_t order)
{
    const PowerSeries e = eichler_coeffs(k, order);
    return e - Rational(2) * e.substitute_power(2);
}

PowerSeries srp3_series(std::size_t order)
{
    return series_mul(pochhammer_neg_q(order), eichler_difference(2, order));
}

Rational twisted_inner_divisor_form(long p, std::uint64_t n)
{
    require(n >= 1, "twisted coefficient needs n >= 1");
    Rational acc = 0;
    for (auto m : divisors(n)) {
        const int chi = legendre_symbol(static_cast<long>(m), p);
        if (chi == 0) continue;
        const int sign = ((n / m) % 2 == 1) ? 1 : -1;
        acc += make_rational(Integer(chi * sign), Integer(static_cast<unsigned long>(m)));
    }
    return acc;
}

Rational twisted_inner_antiderivative_form(long p, std::uint64_t n)
{
    require(n >= 1, "twisted coefficient needs n >= 1");
    Integer acc = 0;
    for (auto d : divisors(n)) {
        const int chi = legendre_symbol(static_cast<long>(n / d), p);
        const long sign = (d % 2 == 0) ? 1 : -1;
        acc += Integer(sign * chi) * Integer(static_cast<unsigned long>(d));
    }
    return make_rational(-acc, Integer(static_cast<unsigned long>(n)));
}

PowerSeries twisted_series(long p, std::size_t order)
{
    require(p > 2 && is_prime(static_cast<std::uint64_t>(p)), "twisted series needs an odd prime, got " + std::to_string(p));
    PowerSeries inner(order);
    for (std::size_t n = 1; n <= order; ++n) {
        Rational a = twisted_inner_divisor_form(p, n);
        if (a != twisted_inner_antiderivative_form(p, n))
            fail(ErrorCode::domain, "twisted inner coefficient forms disagree at n = " + std::to_string(n));
        inner[n] = std::move(a);
    }
    return series_mul(pochhammer_neg_q(order), inner);
}

} // namespace srp
