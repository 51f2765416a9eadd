#pragma once

#include <vector>

#include "ebinom/rational.hpp"

namespace ebinom {

// Bernoulli number B_m from sum_{j=0..m} C(m+1, j) B_j = 0, B_0 = 1.
// This fixes B_1 = -1/2; every odd index above one is zero.
Rational bernoulli(unsigned m);

// B_0..B_m in one pass.
std::vector<Rational> bernoulli_numbers(unsigned m);

// Probabilist's Hermite polynomial He_m, orthogonal under exp(-x^2/2):
//   He_0 = 1, He_1 = x, He_{m+1} = x He_m - m He_{m-1}.
// Not the physicist's H_m (weight exp(-x^2), H_1 = 2x); He_m(x) = 2^{-m/2} H_m(x/sqrt 2).
RationalPolynomial hermite(unsigned m);

/// One solution (k_1, ..., k_nu) of k_1 + 2 k_2 + ... + nu k_nu = nu.
///
/// For the even-only enumeration the slots are reindexed: multiplicities[m-1]
/// holds k_{2m} and the constraint reads k_2 + 2 k_4 + ... + nu k_{2nu} = nu.
/// In both cases `s` is the total multiplicity.
struct PartitionSolution {
    std::vector<unsigned> multiplicities;
    unsigned s = 0;

    // Weighted sum sum_m m * multiplicities[m-1].
    unsigned weight() const noexcept;

    friend bool operator==(const PartitionSolution&, const PartitionSolution&) = default;
};

// Every solution, one per integer partition of nu. Order is lexicographic in
// (k_nu, ..., k_1) descending but callers should not rely on it.
std::vector<PartitionSolution> enumerate_partition_solutions(unsigned nu);

std::vector<PartitionSolution> enumerate_even_solutions(unsigned nu);

}  // namespace ebinom
