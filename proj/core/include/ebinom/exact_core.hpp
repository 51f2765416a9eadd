#pragma once

#include <cstdint>
#include <vector>

#include "ebinom/rational.hpp"

namespace ebinom {

/// Coefficients of (1 + x + ... + x^q)^n, i.e. the extended binomial
/// coefficients binom(n, k)^(q) for k = 0..n*q.
///
/// The row is symmetric and unimodal, starts and ends with 1, and sums to
/// (q+1)^n. Indices outside 0..n*q read as zero.
struct BigRow {
    int n = 0;
    int q = 0;
    std::vector<BigInt> coeffs;

    std::int64_t max_index() const noexcept { return static_cast<std::int64_t>(n) * q; }
    BigInt at(std::int64_t k) const;
};

// Iterated convolution with the all-ones window of length q+1, kept as a
// running window sum so each step costs one addition and one subtraction
// per output entry.
BigRow compute_row(int n, int q);

// Zero for k < 0 or k > n*q.
BigInt coefficient(int n, std::int64_t k, int q);

/// Number of compositions of k into n parts, each in 1..q.
///
/// Equals binom(n, k - n)^(q-1) for q >= 2. For q = 1 the only candidate is
/// k = n with every part equal to one.
BigInt composition_count(std::int64_t k, int n, int q);

// P(S_n = k) for S_n a sum of n independent uniforms on {0..q}.
Rational scaled_probability(int n, std::int64_t k, int q);

}  // namespace ebinom
