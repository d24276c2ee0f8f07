#pragma once

#include "srpm/power_series.hpp"

#include <cstdint>
#include <span>

namespace srp {

/// prod_{m=1}^{N} (1 + q^m) truncated at order N.
PowerSeries pochhammer_neg_q(std::size_t order);

/// Eichler integral of E_{2k}: coefficients sigma_{1-2k}(n).
PowerSeries eichler_coeffs(unsigned k, std::size_t order);

/// g_k(q), coefficients n^{k-1} (sigma_{1-2k}(n) - 2 [2|n] sigma_{1-2k}(n/2)).
PowerSeries g_series(unsigned k, std::size_t order);

/// Complete Bell polynomial Y_k(x_1, ..., x_k) of equal-order series,
/// via Y_{m+1} = sum_j C(m, j) Y_{m-j} x_{j+1}.
PowerSeries bell_complete(std::span<const PowerSeries> values);

/// sum_n s_k(n) q^n as (-q;q)_inf * Y_k(g_1, ..., g_k).
PowerSeries moment_series(unsigned k, std::size_t order);

/// E_{-2}(tau) - 2 E_{-2}(2 tau) = sum q^n / (n^3 (1 + q^n)).
PowerSeries eichler_difference(unsigned k, std::size_t order);

/// sum_n s_3^*(n) q^n = (-q;q)_inf * (E_{-2}(tau) - 2 E_{-2}(2 tau)).
PowerSeries srp3_series(std::size_t order);

/// Inner coefficient of sum_m chi_p(m) q^m / (m (1 + q^m)) at q^n, summed
/// over divisors m of n: sum chi_p(m) (-1)^{n/m+1} / m.
Rational twisted_inner_divisor_form(long p, std::uint64_t n);
/// Same coefficient in antiderivative form: -(1/n) sum_{d|n} (-1)^d chi_p(n/d) d.
Rational twisted_inner_antiderivative_form(long p, std::uint64_t n);

/// T_{chi_p}(q): coefficients s_{chi_p}(n). Both inner forms are computed and
/// must agree exactly.
PowerSeries twisted_series(long p, std::size_t order);

} // namespace srp
