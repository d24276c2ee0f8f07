#pragma once

#include "srpm/power_series.hpp"

#include <cstdint>
#include <map>
#include <shared_mutex>
#include <utility>
#include <vector>

namespace srp {

/// Memo tables for divisor sums, Bernoulli numbers and distinct-partition
/// counts. Tables only grow. Reads take a shared lock, growth an exclusive one,
/// so one instance can be shared between threads.
class ArithmeticCache {
public:
    /// sigma_j(n) = sum_{d | n} d^j, exact for any integer j.
    Rational sigma(long j, std::uint64_t n);
    /// B_m for even m >= 2.
    Rational bernoulli(unsigned m);
    /// Number of partitions of n into distinct parts.
    Integer distinct_count(std::size_t n);

    static ArithmeticCache& shared();

private:
    std::shared_mutex mutex_;
    std::map<std::pair<long, std::uint64_t>, Rational> sigma_;
    std::vector<Rational> bernoulli_{Rational(1)};  // B_0, B_1, ... (all indices)
    std::vector<Integer> distinct_{Integer(1)};      // coefficients of prod (1+q^m)
};

/// Positive divisors of n in increasing order.
std::vector<std::uint64_t> divisors(std::uint64_t n);
bool is_prime(std::uint64_t n);

Integer factorial(unsigned n);
Integer binomial(unsigned n, unsigned k);
/// (a)_n = a(a+1)...(a+n-1), with (a)_0 = 1.
Integer rising_factorial(long a, unsigned n);

/// Divisor sum via the shared cache; n = 0 is rejected.
Rational sigma(long j, std::uint64_t n);
/// Bernoulli number via the shared cache; odd or zero m rejected.
Rational bernoulli(unsigned m);

/// Legendre symbol (a/p) by Euler's criterion; p must be an odd prime.
int legendre_symbol(long a, long p);

} // namespace srp
