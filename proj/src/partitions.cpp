#include "srpm/partitions.hpp"

#include "srpm/arithmetic.hpp"
#include "srpm/errors.hpp"

#include <numeric>
#include <string>

namespace srp {

unsigned DistinctPartition::size() const { return std::accumulate(parts.begin(), parts.end(), 0U); }

namespace {

// Largest distinct partition of r with every part < bound, appended to out.
// Feasible whenever r <= bound(bound-1)/2.
void fill_greedy(std::vector<unsigned>& out, unsigned r, unsigned bound)
{
    while (r > 0) {
        const unsigned part = std::min(bound - 1, r);
        out.push_back(part);
        r -= part;
        bound = part;
    }
}

} // namespace

DistinctPartitions::iterator::iterator(unsigned n) : n_(n), done_(false)
{
    if (n > 0) current_.parts.push_back(n);
}

DistinctPartitions::iterator& DistinctPartitions::iterator::operator++()
{
    auto& parts = current_.parts;
    unsigned prefix = n_;
    for (std::size_t i = parts.size(); i-- > 0;) {
        prefix -= parts[i];
        const unsigned rem = n_ - prefix;  // sum of parts[i..]
        const unsigned x = parts[i] - 1;
        // parts[i] -> x keeps the sequence decreasing; the rest must fit below x
        if (x >= 1 && static_cast<unsigned long>(x) * (x + 1) / 2 >= rem) {
            parts.resize(i);
            parts.push_back(x);
            fill_greedy(parts, rem - x, x);
            return *this;
        }
    }
    done_ = true;
    parts.clear();
    return *this;
}

Rational srp_moment(const DistinctPartition& lambda, unsigned k)
{
    Rational sum = 0;
    for (auto part : lambda.parts) sum += Rational(1, part);
    Rational result = 1;
    for (unsigned i = 0; i < k; ++i) result *= sum;
    return result;
}

Rational srp_power_sum(const DistinctPartition& lambda, unsigned k)
{
    require(k >= 1, "power sum needs k >= 1");
    Rational sum = 0;
    Integer den;
    for (auto part : lambda.parts) {
        mpz_ui_pow_ui(den.get_mpz_t(), part, k);
        sum += make_rational(1, den);
    }
    return sum;
}

Rational srp_twisted(const DistinctPartition& lambda, long p)
{
    Rational sum = 0;
    for (auto part : lambda.parts) {
        const int chi = legendre_symbol(part, p);
        if (chi != 0) sum += make_rational(chi, part);
    }
    return sum;
}

Rational s_oracle(unsigned k, unsigned n)
{
    Rational total = 0;
    for (const auto& lambda : enumerate_distinct(n)) total += srp_moment(lambda, k);
    return total;
}

Rational s_star_oracle(unsigned k, unsigned n)
{
    require(k >= 1, "s_k^* needs k >= 1");
    Rational total = 0;
    for (const auto& lambda : enumerate_distinct(n)) total += srp_power_sum(lambda, k);
    return total;
}

Rational s_twisted_oracle(long p, unsigned n)
{
    require(p > 2 && is_prime(static_cast<std::uint64_t>(p)), "twisted oracle needs an odd prime, got " + std::to_string(p));
    Rational total = 0;
    for (const auto& lambda : enumerate_distinct(n)) total += srp_twisted(lambda, p);
    return total;
}

} // namespace srp
