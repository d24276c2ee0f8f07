#pragma once

#include "srpm/real.hpp"

namespace srp {

/// Complex number over Real; both parts live at the working precision.
struct Complex {
    Real re;
    Real im;

    Complex() = default;
    Complex(Real r) : re(std::move(r)), im(0) {}
    Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
    Complex(int r) : re(r), im(0) {}

    Complex& operator+=(const Complex& z) { re += z.re; im += z.im; return *this; }
    Complex& operator-=(const Complex& z) { re -= z.re; im -= z.im; return *this; }
    Complex& operator*=(const Complex& z);
    Complex& operator*=(const Real& x) { re *= x; im *= x; return *this; }
    Complex& operator/=(const Real& x) { re /= x; im /= x; return *this; }
    Complex operator-() const { return {-re, -im}; }
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Real& x);
Complex operator*(const Real& x, const Complex& a);
Complex operator/(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Real& x);

Complex conj(const Complex& z);
Real norm(const Complex& z);  ///< |z|^2
Real abs(const Complex& z);
Real arg(const Complex& z);
Complex exp(const Complex& z);
/// Principal branch, arg in (-pi, pi].
Complex log(const Complex& z);
/// e^{i theta}
Complex expi(const Real& theta);
Complex pow(const Complex& z, long n);
inline Complex i_unit() { return {Real(0), Real(1)}; }

} // namespace srp
