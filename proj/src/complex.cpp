#include "srpm/complex.hpp"

namespace srp {

Complex& Complex::operator*=(const Complex& z)
{
    Real r = re * z.re - im * z.im;
    im = re * z.im + im * z.re;
    re = std::move(r);
    return *this;
}

Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
Complex operator*(const Complex& a, const Complex& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }
Complex operator*(const Complex& a, const Real& x) { return {a.re * x, a.im * x}; }
Complex operator*(const Real& x, const Complex& a) { return {a.re * x, a.im * x}; }
Complex operator/(const Complex& a, const Real& x) { return {a.re / x, a.im / x}; }

Complex operator/(const Complex& a, const Complex& b)
{
    const Real d = norm(b);
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
}

Complex conj(const Complex& z) { return {z.re, -z.im}; }
Real norm(const Complex& z) { return z.re * z.re + z.im * z.im; }

Real abs(const Complex& z)
{
    Real r;
    mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
    return r;
}

Real arg(const Complex& z) { return atan2(z.im, z.re); }

Complex exp(const Complex& z)
{
    const Real m = exp(z.re);
    return {m * cos(z.im), m * sin(z.im)};
}

Complex log(const Complex& z) { return {log(abs(z)), arg(z)}; }

Complex expi(const Real& theta)
{
    Real s, c;
    mpfr_sin_cos(s.get(), c.get(), theta.get(), MPFR_RNDN);
    return {std::move(c), std::move(s)};
}

Complex pow(const Complex& z, long n)
{
    if (n < 0) return Complex(1) / pow(z, -n);
    Complex result(1), base = z;
    while (n > 0) {
        if (n & 1) result *= base;
        n >>= 1;
        if (n > 0) base *= base;
    }
    return result;
}

} // namespace srp
