#include "ebinom/cumulants.hpp"

#include <stdexcept>
#include <string>

#include "ebinom/error.hpp"
#include "ebinom/special_numbers.hpp"

namespace ebinom {

const Rational& CumulantVector::gamma(int k) const {
    if (k < 1 || k > max_order()) {
        throw std::out_of_range("cumulant of order " + std::to_string(k) +
                                " not present (have 1.." + std::to_string(max_order()) + ")");
    }
    return gammas[static_cast<std::size_t>(k - 1)];
}

namespace {

Rational even_cumulant(const Rational& bernoulli_2l, int l, int q) {
    const unsigned long two_l = 2ul * static_cast<unsigned long>(l);
    BigInt spread = pow(BigInt(q + 1), two_l) - 1;
    return bernoulli_2l * Rational(spread) / Rational(static_cast<long>(two_l));
}

}  // namespace

Rational cumulant(int k, int q) {
    detail::require_positive(k, "k");
    detail::require_positive(q, "q");
    if (k == 1) return make_rational(q, 2);
    if (k % 2 == 1) return 0;
    return even_cumulant(bernoulli(static_cast<unsigned>(k)), k / 2, q);
}

CumulantVector cumulants_up_to(int max_order, int q) {
    detail::require_positive(max_order, "K");
    detail::require_positive(q, "q");
    const std::vector<Rational> b = bernoulli_numbers(static_cast<unsigned>(max_order));
    CumulantVector out{q, {}};
    out.gammas.reserve(static_cast<std::size_t>(max_order));
    for (int k = 1; k <= max_order; ++k) {
        if (k == 1) out.gammas.push_back(make_rational(q, 2));
        else if (k % 2 == 1) out.gammas.emplace_back(0);
        else out.gammas.push_back(even_cumulant(b[static_cast<std::size_t>(k)], k / 2, q));
    }
    return out;
}

CumulantVector oracle_cumulants(int max_order, int q) {
    detail::require_positive(max_order, "K");
    detail::require_positive(q, "q");
    const auto order = static_cast<std::size_t>(max_order);

    std::vector<Rational> moments(order + 1);
    for (std::size_t j = 0; j <= order; ++j) {
        BigInt power_sum = 0;
        for (int v = 0; v <= q; ++v) power_sum += pow(BigInt(v), j);
        moments[j] = make_rational(power_sum, q + 1);
    }

    // kappa[k] for k = 1..K; index 0 unused.
    std::vector<Rational> kappa(order + 1);
    for (std::size_t k = 1; k <= order; ++k) {
        Rational acc = moments[k];
        for (std::size_t j = 1; j < k; ++j) {
            acc -= Rational(binomial(k - 1, j - 1)) * kappa[j] * moments[k - j];
        }
        kappa[k] = acc;
    }
    return CumulantVector{q, std::vector<Rational>(kappa.begin() + 1, kappa.end())};
}

Rational uniform_mean(int q) {
    detail::require_positive(q, "q");
    return make_rational(q, 2);
}

Rational uniform_variance(int q) {
    detail::require_positive(q, "q");
    return make_rational(BigInt(q) * (q + 2), 12);
}

}  // namespace ebinom
