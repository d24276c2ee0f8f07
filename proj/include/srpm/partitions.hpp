#pragma once

#include "srpm/power_series.hpp"

#include <cstddef>
#include <iterator>
#include <vector>

namespace srp {

/// Partition into distinct parts, parts strictly decreasing.
struct DistinctPartition {
    std::vector<unsigned> parts;

    unsigned size() const;  ///< sum of the parts
    friend bool operator==(const DistinctPartition&, const DistinctPartition&) = default;
    friend auto operator<=>(const DistinctPartition&, const DistinctPartition&) = default;
};

/// Oracle sums above this n are accepted but flagged as expensive.
inline constexpr unsigned kOracleDefaultCap = 60;
inline bool beyond_oracle_cap(unsigned n) { return n > kOracleDefaultCap; }

/// Lazy range over the partitions of n into distinct parts, in
/// lexicographically decreasing order (largest part first). n = 0 yields the
/// empty partition once.
class DistinctPartitions {
public:
    class iterator {
    public:
        using iterator_category = std::input_iterator_tag;
        using value_type = DistinctPartition;
        using difference_type = std::ptrdiff_t;
        using pointer = const DistinctPartition*;
        using reference = const DistinctPartition&;

        iterator() = default;
        reference operator*() const { return current_; }
        pointer operator->() const { return &current_; }
        iterator& operator++();
        void operator++(int) { ++*this; }
        friend bool operator==(const iterator& a, const iterator& b) { return a.done_ == b.done_ && (a.done_ || a.current_ == b.current_); }

    private:
        friend class DistinctPartitions;
        explicit iterator(unsigned n);
        unsigned n_ = 0;
        bool done_ = true;
        DistinctPartition current_;
    };

    explicit DistinctPartitions(unsigned n) : n_(n) {}
    iterator begin() const { return iterator(n_); }
    iterator end() const { return {}; }

private:
    unsigned n_;
};

inline DistinctPartitions enumerate_distinct(unsigned n) { return DistinctPartitions(n); }

/// (sum_j 1/lambda_j)^k
Rational srp_moment(const DistinctPartition& lambda, unsigned k);
/// sum_j lambda_j^{-k}
Rational srp_power_sum(const DistinctPartition& lambda, unsigned k);
/// sum_j (lambda_j / p) / lambda_j
Rational srp_twisted(const DistinctPartition& lambda, long p);

/// s_k(n) by enumeration.
Rational s_oracle(unsigned k, unsigned n);
/// s_k^*(n) by enumeration.
Rational s_star_oracle(unsigned k, unsigned n);
/// s_{chi_p}(n) by enumeration; p must be an odd prime.
Rational s_twisted_oracle(long p, unsigned n);

} // namespace srp
