#include "doctest.h"
#include "oracles.hpp"

#include "srpm/errors.hpp"
#include "srpm/partitions.hpp"
#include "srpm/qseries.hpp"

#include <set>

using namespace srp;

namespace {

std::vector<DistinctPartition> collect(unsigned n)
{
    std::vector<DistinctPartition> out;
    for (const auto& p : enumerate_distinct(n)) out.push_back(p);
    return out;
}

Rational q(long a, long b) { return make_rational(a, b); }

} // namespace

TEST_CASE("enumeration small cases")
{
    const auto three = collect(3);
    REQUIRE(three.size() == 2);
    CHECK(three[0].parts == std::vector<unsigned>{3});
    CHECK(three[1].parts == std::vector<unsigned>{2, 1});

    const auto zero = collect(0);
    REQUIRE(zero.size() == 1);
    CHECK(zero[0].parts.empty());

    CHECK(collect(10).size() == 10);
}

TEST_CASE("enumeration is complete, duplicate-free and well-formed")
{
    const PowerSeries counts = pochhammer_neg_q(40);
    for (unsigned n = 0; n <= 40; ++n) {
        const auto all = collect(n);
        CHECK(Rational(static_cast<unsigned long>(all.size())) == counts[n]);
        for (const auto& p : all) {
            CHECK(p.size() == n);
            for (std::size_t i = 0; i + 1 < p.parts.size(); ++i) CHECK(p.parts[i] > p.parts[i + 1]);
            if (!p.parts.empty()) CHECK(p.parts.back() > 0);
        }
        if (n <= 30) {
            const std::set<DistinctPartition> unique(all.begin(), all.end());
            CHECK(unique.size() == all.size());
            // same set as the include/exclude reference enumeration
            std::set<DistinctPartition> ref;
            oracle::for_each_distinct(n, [&](const std::vector<unsigned>& parts) {
                ref.insert(DistinctPartition{{parts.rbegin(), parts.rend()}});
            });
            CHECK(ref == unique);
        }
    }
}

TEST_CASE("reciprocal statistics of one partition")
{
    const DistinctPartition two_one{{2, 1}};
    CHECK(srp_moment(two_one, 1) == q(3, 2));
    CHECK(srp_moment(two_one, 2) == q(9, 4));
    CHECK(srp_moment(two_one, 0) == 1);
    CHECK(srp_moment(DistinctPartition{{7, 3}}, 0) == 1);

    CHECK(srp_power_sum(two_one, 3) == q(9, 8));
    for (unsigned n = 1; n <= 6; ++n)
        for (unsigned k = 1; k <= 4; ++k) {
            Integer nk;
            mpz_ui_pow_ui(nk.get_mpz_t(), n, k);
            CHECK(srp_power_sum(DistinctPartition{{n}}, k) == make_rational(1, nk));
        }
    CHECK(srp_power_sum(DistinctPartition{{3, 2, 1}}, 1) == q(11, 6));
}

TEST_CASE("oracle sums")
{
    CHECK(s_oracle(1, 3) == q(11, 6));
    CHECK(s_oracle(2, 2) == q(1, 4));
    const PowerSeries counts = pochhammer_neg_q(20);
    for (unsigned n = 0; n <= 20; ++n) CHECK(s_oracle(0, n) == counts[n]);

    CHECK(s_star_oracle(3, 1) == 1);
    CHECK(s_star_oracle(3, 3) == q(1, 27) + q(9, 8));
    for (unsigned n = 0; n <= 20; ++n) CHECK(s_star_oracle(1, n) == s_oracle(1, n));

    for (unsigned k : {0u, 2u, 4u})
        for (unsigned n = 1; n <= 20; ++n) CHECK(s_oracle(k, n) > 0);
}

TEST_CASE("twisted oracle")
{
    CHECK(s_twisted_oracle(3, 1) == 1);
    CHECK(s_twisted_oracle(3, 2) == q(-1, 2));
    CHECK(s_twisted_oracle(3, 3) == q(1, 2));
    CHECK_THROWS_AS(s_twisted_oracle(4, 3), Error);
    CHECK_THROWS_AS(s_twisted_oracle(1, 3), Error);
}

TEST_CASE("oracle cap flag")
{
    CHECK_FALSE(beyond_oracle_cap(60));
    CHECK(beyond_oracle_cap(61));
}
