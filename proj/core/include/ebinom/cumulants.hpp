#pragma once

#include <vector>

#include "ebinom/rational.hpp"

namespace ebinom {

/// Cumulants gamma_1..gamma_K of a lattice distribution.
///
/// gammas[k-1] holds gamma_k. Vectors produced in this module describe the
/// uniform law on {0..q}; vectors supplied from elsewhere may set q = 0.
struct CumulantVector {
    int q = 0;
    std::vector<Rational> gammas;

    int max_order() const noexcept { return static_cast<int>(gammas.size()); }
    // Throws std::out_of_range when k lies outside 1..max_order().
    const Rational& gamma(int k) const;
};

// Closed form for the uniform law on {0..q}:
//   gamma_1 = q/2, gamma_k = 0 for odd k > 1,
//   gamma_{2l} = B_{2l} / (2l) * ((q+1)^{2l} - 1).
Rational cumulant(int k, int q);

CumulantVector cumulants_up_to(int max_order, int q);

// Raw moments m_j = (1/(q+1)) sum_v v^j, then the moment-cumulant recursion
//   gamma_k = m_k - sum_{j=1..k-1} C(k-1, j-1) gamma_j m_{k-j}.
// Independent of the Bernoulli route; used to cross-check cumulant().
CumulantVector oracle_cumulants(int max_order, int q);

Rational uniform_mean(int q);
Rational uniform_variance(int q);

}  // namespace ebinom
