#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace srp {

using Integer = mpz_class;
using Rational = mpq_class;

/// Builds num/den in canonical form; den must be nonzero.
Rational make_rational(const Integer& num, const Integer& den);
/// "num/den" with den > 0, always including the denominator.
std::string to_fraction_string(const Rational& r);

/// Truncated q-expansion sum_{n=0}^{N} c_n q^n over the rationals.
///
/// The order N travels with the value; binary operations truncate to the
/// smaller order of the two operands.
class PowerSeries {
public:
    explicit PowerSeries(std::size_t order = 0);
    PowerSeries(std::size_t order, std::vector<Rational> coeffs);

    static PowerSeries one(std::size_t order);
    static PowerSeries monomial(std::size_t order, std::size_t exponent, const Rational& c = 1);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
    Rational& operator[](std::size_t n) { return coeffs_.at(n); }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }

    PowerSeries truncated(std::size_t order) const;
    /// f(q) -> f(q^m), keeping the order.
    PowerSeries substitute_power(std::size_t m) const;
    /// q d/dq
    PowerSeries theta() const;
    /// Multiplicative inverse; requires a nonzero constant term.
    PowerSeries inverse() const;

    PowerSeries& operator+=(const PowerSeries& rhs);
    PowerSeries& operator-=(const PowerSeries& rhs);
    PowerSeries& operator*=(const Rational& c);

    friend bool operator==(const PowerSeries& a, const PowerSeries& b) { return a.coeffs_ == b.coeffs_; }

private:
    std::vector<Rational> coeffs_;
};

PowerSeries operator+(PowerSeries a, const PowerSeries& b);
PowerSeries operator-(PowerSeries a, const PowerSeries& b);
PowerSeries operator*(PowerSeries a, const Rational& c);
PowerSeries operator*(const Rational& c, PowerSeries a);
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b);

/// Cauchy product truncated to min(a.order(), b.order()).
PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b);

/// CSV with header "n,numerator,denominator", one row per coefficient.
std::string to_csv(const PowerSeries& s);
/// JSON array of "num/den" strings.
std::string to_json(const PowerSeries& s);

} // namespace srp
