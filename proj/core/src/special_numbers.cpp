#include "ebinom/special_numbers.hpp"

#include <functional>

namespace ebinom {

std::vector<Rational> bernoulli_numbers(unsigned m) {
    std::vector<Rational> b(m + 1);
    b[0] = 1;
    // (m+1) B_m = -sum_{j<m} C(m+1, j) B_j
    for (unsigned k = 1; k <= m; ++k) {
        Rational acc = 0;
        for (unsigned j = 0; j < k; ++j) {
            if (b[j] == 0) continue;
            acc += Rational(binomial(k + 1, j)) * b[j];
        }
        b[k] = -acc / Rational(k + 1);
    }
    return b;
}

Rational bernoulli(unsigned m) { return bernoulli_numbers(m).back(); }

RationalPolynomial hermite(unsigned m) {
    RationalPolynomial prev = RationalPolynomial::constant(1);
    if (m == 0) return prev;
    RationalPolynomial cur = RationalPolynomial::x();
    const RationalPolynomial x = RationalPolynomial::x();
    for (unsigned j = 1; j < m; ++j) {
        RationalPolynomial next = x * cur - Rational(j) * prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

unsigned PartitionSolution::weight() const noexcept {
    unsigned w = 0;
    for (std::size_t i = 0; i < multiplicities.size(); ++i) {
        w += static_cast<unsigned>(i + 1) * multiplicities[i];
    }
    return w;
}

std::vector<PartitionSolution> enumerate_partition_solutions(unsigned nu) {
    std::vector<PartitionSolution> out;
    if (nu == 0) return out;

    std::vector<unsigned> mult(nu, 0);
    // Assign k_part for part = largest..1, spending `remaining` of the weight.
    std::function<void(unsigned, unsigned, unsigned)> descend =
        [&](unsigned part, unsigned remaining, unsigned count) {
            if (part == 1) {
                mult[0] = remaining;
                out.push_back(PartitionSolution{mult, count + remaining});
                return;
            }
            for (unsigned k = remaining / part + 1; k-- > 0;) {
                mult[part - 1] = k;
                descend(part - 1, remaining - k * part, count + k);
            }
            mult[part - 1] = 0;
        };
    descend(nu, nu, 0);
    return out;
}

std::vector<PartitionSolution> enumerate_even_solutions(unsigned nu) {
    // k_2 + 2 k_4 + ... + nu k_{2nu} = nu is the same constraint on relabelled slots.
    return enumerate_partition_solutions(nu);
}

}  // namespace ebinom
