#pragma once

// Independent reference computations used only by the tests.

#include <gmpxx.h>

#include <functional>
#include <vector>

namespace oracle {

// Distinct partitions of n as subsets of {1..n}, built by include/exclude recursion
// from the smallest candidate part upward.
inline void for_each_distinct(unsigned n, const std::function<void(const std::vector<unsigned>&)>& visit)
{
    std::vector<unsigned> chosen;
    std::function<void(unsigned, unsigned)> rec = [&](unsigned next, unsigned remaining) {
        if (remaining == 0) {
            visit(chosen);
            return;
        }
        if (next > remaining) return;
        chosen.push_back(next);
        rec(next + 1, remaining - next);
        chosen.pop_back();
        rec(next + 1, remaining);
    };
    rec(1, n);
}

inline mpq_class sigma(long j, unsigned long n)
{
    mpq_class s = 0;
    for (unsigned long d = 1; d <= n; ++d) {
        if (n % d) continue;
        mpz_class p;
        mpz_ui_pow_ui(p.get_mpz_t(), d, static_cast<unsigned long>(j < 0 ? -j : j));
        s += j < 0 ? mpq_class(1, 1) / mpq_class(p) : mpq_class(p);
    }
    return s;
}

// Bernoulli numbers B_0..B_m (B_1 = +1/2 convention of the algorithm; only even indices are compared)
// by the Akiyama-Tanigawa algorithm.
inline std::vector<mpq_class> bernoulli_at(unsigned m)
{
    std::vector<mpq_class> a(m + 1), out(m + 1);
    for (unsigned i = 0; i <= m; ++i) {
        a[i] = mpq_class(1, i + 1);
        for (unsigned j = i; j >= 1; --j) {
            a[j - 1] = mpq_class(j) * (a[j - 1] - a[j]);
            a[j - 1].canonicalize();
        }
        out[i] = a[0];
    }
    return out;
}

inline int legendre(long a, long p)
{
    long r = ((a % p) + p) % p;
    if (r == 0) return 0;
    for (long x = 1; x < p; ++x)
        if ((x * x) % p == r) return 1;
    return -1;
}

} // namespace oracle
