#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <string>
#include <string_view>

namespace srp {

/// Bit precision used for every newly created Real on the calling thread.
mpfr_prec_t working_precision() noexcept;

/// RAII override of the thread's working precision.
class PrecisionScope {
public:
    explicit PrecisionScope(mpfr_prec_t bits);
    ~PrecisionScope();
    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

private:
    mpfr_prec_t saved_;
};

/// Arbitrary-precision real backed by an mpfr_t.
///
/// Default-constructed values and the results of arithmetic carry the
/// thread's working precision. Copies keep the precision of their source.
class Real {
public:
    Real();
    Real(int v);
    Real(long v);
    Real(unsigned long v);
    Real(double v);
    explicit Real(const mpz_class& v);
    explicit Real(const mpq_class& v);

    /// Parses a decimal string ("0.3", "-1e-5"); throws srp::Error on bad input.
    static Real parse(std::string_view text);

    Real(const Real& other);
    Real(Real&& other) noexcept;
    Real& operator=(const Real& other);
    Real& operator=(Real&& other) noexcept;
    ~Real();

    mpfr_srcptr get() const noexcept { return value_; }
    mpfr_ptr get() noexcept { return value_; }
    mpfr_prec_t precision() const noexcept { return mpfr_get_prec(value_); }

    Real& operator+=(const Real& rhs);
    Real& operator-=(const Real& rhs);
    Real& operator*=(const Real& rhs);
    Real& operator/=(const Real& rhs);
    Real operator-() const;

    int sign() const noexcept { return mpfr_sgn(value_); }
    bool is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
    bool is_finite() const noexcept { return mpfr_number_p(value_) != 0; }

    double to_double() const noexcept { return mpfr_get_d(value_, MPFR_RNDN); }
    /// Base-2 exponent e with 0.5 <= |x|/2^e < 1; very negative for zero.
    long exponent2() const noexcept;
    /// Scientific notation with the given number of significant digits
    /// (0 picks enough digits to round-trip the precision).
    std::string to_string(int digits = 0) const;

private:
    mpfr_t value_;
};

Real operator+(const Real& a, const Real& b);
Real operator-(const Real& a, const Real& b);
Real operator*(const Real& a, const Real& b);
Real operator/(const Real& a, const Real& b);

bool operator==(const Real& a, const Real& b);
bool operator<(const Real& a, const Real& b);
inline bool operator>(const Real& a, const Real& b) { return b < a; }
inline bool operator<=(const Real& a, const Real& b) { return !(b < a); }
inline bool operator>=(const Real& a, const Real& b) { return !(a < b); }

Real abs(const Real& x);
Real sqrt(const Real& x);
Real exp(const Real& x);
Real log(const Real& x);
Real sin(const Real& x);
Real cos(const Real& x);
Real cosh(const Real& x);
Real atan2(const Real& y, const Real& x);
Real pow(const Real& x, const Real& y);
Real pow(const Real& x, long n);
Real gamma(const Real& x);
Real max(const Real& a, const Real& b);
Real ldexp(const Real& x, long e);
/// Nearest integer, rounding half away from zero.
Real round(const Real& x);

/// 2^{-bits} at the current working precision.
Real epsilon_bits(long bits);
/// 10^{-decimal_digits}, decimal_digits may be fractional.
Real pow10_neg(double decimal_digits);

/// Constants at the current working precision, cached per precision.
const Real& const_pi();
const Real& const_log2();

} // namespace srp
