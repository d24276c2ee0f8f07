#include "srpm/power_series.hpp"

#include "srpm/errors.hpp"

#include "json.hpp"

#include <algorithm>
#include <sstream>

namespace srp {

Rational make_rational(const Integer& num, const Integer& den)
{
    require(den != 0, "zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

std::string to_fraction_string(const Rational& r)
{
    return r.get_num().get_str() + "/" + r.get_den().get_str();
}

PowerSeries::PowerSeries(std::size_t order) : coeffs_(order + 1) {}

PowerSeries::PowerSeries(std::size_t order, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs))
{
    require(coeffs_.size() == order + 1, "coefficient count must be order + 1");
}

PowerSeries PowerSeries::one(std::size_t order)
{
    PowerSeries s(order);
    s.coeffs_[0] = 1;
    return s;
}

PowerSeries PowerSeries::monomial(std::size_t order, std::size_t exponent, const Rational& c)
{
    PowerSeries s(order);
    if (exponent <= order) s.coeffs_[exponent] = c;
    return s;
}

PowerSeries PowerSeries::truncated(std::size_t order) const
{
    require(order <= this->order(), "cannot extend a truncated series");
    return PowerSeries(order, std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + order + 1));
}

PowerSeries PowerSeries::substitute_power(std::size_t m) const
{
    require(m >= 1, "substitution power must be positive");
    PowerSeries out(order());
    for (std::size_t n = 0; n * m <= order(); ++n) out.coeffs_[n * m] = coeffs_[n];
    return out;
}

PowerSeries PowerSeries::theta() const
{
    PowerSeries out(order());
    for (std::size_t n = 1; n <= order(); ++n) out.coeffs_[n] = coeffs_[n] * static_cast<unsigned long>(n);
    return out;
}

PowerSeries PowerSeries::inverse() const
{
    require(coeffs_[0] != 0, "series with zero constant term has no inverse");
    PowerSeries out(order());
    out.coeffs_[0] = 1 / coeffs_[0];
    for (std::size_t n = 1; n <= order(); ++n) {
        Rational acc = 0;
        for (std::size_t m = 1; m <= n; ++m) acc += coeffs_[m] * out.coeffs_[n - m];
        out.coeffs_[n] = -acc / coeffs_[0];
    }
    return out;
}

PowerSeries& PowerSeries::operator+=(const PowerSeries& rhs)
{
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] += rhs.coeffs_[n];
    return *this;
}

PowerSeries& PowerSeries::operator-=(const PowerSeries& rhs)
{
    coeffs_.resize(std::min(coeffs_.size(), rhs.coeffs_.size()));
    for (std::size_t n = 0; n < coeffs_.size(); ++n) coeffs_[n] -= rhs.coeffs_[n];
    return *this;
}

PowerSeries& PowerSeries::operator*=(const Rational& c)
{
    for (auto& x : coeffs_) x *= c;
    return *this;
}

PowerSeries operator+(PowerSeries a, const PowerSeries& b) { return a += b; }
PowerSeries operator-(PowerSeries a, const PowerSeries& b) { return a -= b; }
PowerSeries operator*(PowerSeries a, const Rational& c) { return a *= c; }
PowerSeries operator*(const Rational& c, PowerSeries a) { return a *= c; }
PowerSeries operator*(const PowerSeries& a, const PowerSeries& b) { return series_mul(a, b); }

PowerSeries series_mul(const PowerSeries& a, const PowerSeries& b)
{
    const std::size_t order = std::min(a.order(), b.order());
    PowerSeries out(order);
    for (std::size_t m = 0; m <= order; ++m) {
        if (a[m] == 0) continue;
        for (std::size_t k = 0; m + k <= order; ++k) {
            if (b[k] != 0) out[m + k] += a[m] * b[k];
        }
    }
    return out;
}

std::string to_csv(const PowerSeries& s)
{
    std::ostringstream out;
    out << "n,numerator,denominator\n";
    for (std::size_t n = 0; n <= s.order(); ++n)
        out << n << ',' << s[n].get_num().get_str() << ',' << s[n].get_den().get_str() << '\n';
    return out.str();
}

std::string to_json(const PowerSeries& s)
{
    nlohmann::json array = nlohmann::json::array();
    for (const auto& c : s.coeffs()) array.push_back(to_fraction_string(c));
    return array.dump();
}

} // namespace srp
