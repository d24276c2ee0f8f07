#include "srpm/arithmetic.hpp"

#include "srpm/errors.hpp"

#include <mutex>
#include <string>

namespace srp {

std::vector<std::uint64_t> divisors(std::uint64_t n)
{
    std::vector<std::uint64_t> small, large;
    for (std::uint64_t d = 1; d * d <= n; ++d) {
        if (n % d != 0) continue;
        small.push_back(d);
        if (d != n / d) large.push_back(n / d);
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

bool is_prime(std::uint64_t n)
{
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

Integer factorial(unsigned n)
{
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

Integer binomial(unsigned n, unsigned k)
{
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

Integer rising_factorial(long a, unsigned n)
{
    Integer r = 1;
    for (unsigned i = 0; i < n; ++i) r *= a + static_cast<long>(i);
    return r;
}

Rational ArithmeticCache::sigma(long j, std::uint64_t n)
{
    require(n >= 1, "sigma_j(n) needs n >= 1");
    const auto key = std::make_pair(j, n);
    {
        std::shared_lock lock(mutex_);
        if (auto it = sigma_.find(key); it != sigma_.end()) return it->second;
    }
    // sigma_{-j}(n) = sigma_j(n) / n^j
    const unsigned long e = static_cast<unsigned long>(j < 0 ? -j : j);
    Integer sum = 0, term;
    for (auto d : divisors(n)) {
        mpz_ui_pow_ui(term.get_mpz_t(), d, e);
        sum += term;
    }
    Rational value(sum);
    if (j < 0) {
        Integer scale;
        mpz_ui_pow_ui(scale.get_mpz_t(), n, e);
        value = make_rational(sum, scale);
    }
    std::unique_lock lock(mutex_);
    sigma_.emplace(key, value);
    return value;
}

Rational ArithmeticCache::bernoulli(unsigned m)
{
    require(m >= 2 && m % 2 == 0, "bernoulli(m) needs even m >= 2, got " + std::to_string(m));
    {
        std::shared_lock lock(mutex_);
        if (m < bernoulli_.size()) return bernoulli_[m];
    }
    std::unique_lock lock(mutex_);
    // sum_{j=0}^{i} C(i+1, j) B_j = 0
    for (unsigned i = static_cast<unsigned>(bernoulli_.size()); i <= m; ++i) {
        Rational acc = 0;
        for (unsigned j = 0; j < i; ++j) {
            if (bernoulli_[j] != 0) acc += Rational(binomial(i + 1, j)) * bernoulli_[j];
        }
        Rational b = -acc / Rational(i + 1);
        b.canonicalize();
        bernoulli_.push_back(b);
    }
    return bernoulli_[m];
}

Integer ArithmeticCache::distinct_count(std::size_t n)
{
    {
        std::shared_lock lock(mutex_);
        if (n < distinct_.size()) return distinct_[n];
    }
    std::unique_lock lock(mutex_);
    if (n >= distinct_.size()) {
        // rebuild prod_{m<=n} (1+q^m) truncated at q^n
        std::vector<Integer> b(n + 1, 0);
        b[0] = 1;
        for (std::size_t m = 1; m <= n; ++m)
            for (std::size_t i = n; i >= m; --i) b[i] += b[i - m];
        distinct_ = std::move(b);
    }
    return distinct_[n];
}

ArithmeticCache& ArithmeticCache::shared()
{
    static ArithmeticCache cache;
    return cache;
}

Rational sigma(long j, std::uint64_t n) { return ArithmeticCache::shared().sigma(j, n); }
Rational bernoulli(unsigned m) { return ArithmeticCache::shared().bernoulli(m); }

int legendre_symbol(long a, long p)
{
    require(p > 2 && is_prime(static_cast<std::uint64_t>(p)), "Legendre symbol needs an odd prime, got " + std::to_string(p));
    long r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    Integer base = r, result;
    mpz_powm_ui(result.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>((p - 1) / 2), Integer(p).get_mpz_t());
    return result == 1 ? 1 : -1;
}

} // namespace srp
