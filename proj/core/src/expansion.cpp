#include "ebinom/expansion.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "ebinom/error.hpp"
#include "ebinom/special_numbers.hpp"

namespace ebinom {

double gaussian_density(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

GaussPolyFn::GaussPolyFn(RationalPolynomial poly)
    : poly_(std::move(poly)), coeffs_(poly_.to_doubles()) {}

double GaussPolyFn::operator()(double x) const {
    double acc = 0.0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return gaussian_density(x) * acc;
}

namespace {

class HermiteTable {
public:
    const RationalPolynomial& operator()(unsigned m) {
        while (table_.size() <= m) table_.push_back(hermite(static_cast<unsigned>(table_.size())));
        return table_[m];
    }

private:
    std::vector<RationalPolynomial> table_;
};

bool exact_sqrt(const Rational& value, Rational& root) {
    if (sgn(value) < 0) return false;
    const mpz_class& num = value.get_num();
    const mpz_class& den = value.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t())) {
        return false;
    }
    root = make_rational(sqrt(num), sqrt(den));
    return true;
}

}  // namespace

GaussPolyFn build_q_general(int nu, const CumulantVector& cumulants, const Rational& sigma2) {
    detail::require_positive(nu, "nu");
    if (sgn(sigma2) <= 0) throw DomainError("variance must be positive, got " + to_string(sigma2));
    if (cumulants.max_order() < nu + 2) {
        throw std::invalid_argument("q_" + std::to_string(nu) + " needs cumulants up to order " +
                                    std::to_string(nu + 2) + ", got " +
                                    std::to_string(cumulants.max_order()));
    }

    const auto order = static_cast<unsigned>(nu);
    // (gamma_{m+2} / (m+2)!) for m = 1..nu
    std::vector<Rational> scaled(order + 1);
    for (unsigned m = 1; m <= order; ++m) {
        scaled[m] = cumulants.gamma(static_cast<int>(m + 2)) / Rational(factorial(m + 2));
    }

    Rational sigma;
    const bool sigma_rational = exact_sqrt(sigma2, sigma);

    HermiteTable hermite_of;
    RationalPolynomial poly;
    for (const PartitionSolution& sol : enumerate_partition_solutions(order)) {
        Rational weight = 1;
        for (unsigned m = 1; m <= order && weight != 0; ++m) {
            const unsigned k = sol.multiplicities[m - 1];
            if (k == 0) continue;
            weight *= pow(scaled[m], k) / Rational(factorial(k));
        }
        if (weight == 0) continue;

        // Total sigma exponent: sum_m (m+2) k_m = nu + 2s.
        const unsigned sigma_exponent = order + 2 * sol.s;
        if (sigma_exponent % 2 == 0) {
            weight /= pow(sigma2, sigma_exponent / 2);
        } else if (sigma_rational) {
            weight /= pow(sigma, sigma_exponent);
        } else {
            throw DomainError("q_" + std::to_string(nu) +
                              " needs an odd power of sigma, but sigma^2 = " + to_string(sigma2) +
                              " has no rational square root");
        }
        poly += weight * hermite_of(order + 2 * sol.s);
    }
    return GaussPolyFn(std::move(poly));
}

GaussPolyFn build_q_even(int nu, int q) {
    detail::require_positive(nu, "nu");
    detail::require_positive(q, "q");

    const auto order = static_cast<unsigned>(nu);
    const BigInt qq2 = BigInt(q) * (q + 2);
    const std::vector<Rational> b = bernoulli_numbers(2 * order + 2);

    // B_{2m+2} ((q+1)^{2m+2} - 1) / ((2m+2)! (m+1)) for m = 1..nu
    std::vector<Rational> factor(order + 1);
    for (unsigned m = 1; m <= order; ++m) {
        const unsigned long e = 2ul * m + 2;
        Rational spread(pow(BigInt(q + 1), e) - 1);
        factor[m] = b[e] * spread / Rational(factorial(e) * (m + 1));
    }
    const Rational per_s = make_rational(6, qq2);

    HermiteTable hermite_of;
    RationalPolynomial poly;
    for (const PartitionSolution& sol : enumerate_even_solutions(order)) {
        Rational weight = pow(per_s, sol.s);
        for (unsigned m = 1; m <= order; ++m) {
            const unsigned k = sol.multiplicities[m - 1];
            if (k == 0) continue;
            weight *= pow(factor[m], k) / Rational(factorial(k));
        }
        poly += weight * hermite_of(2 * (order + sol.s));
    }
    poly *= pow(make_rational(12, qq2), order);
    return GaussPolyFn(std::move(poly));
}

StandardizedPoint standardize(int n, std::int64_t k, int q) {
    detail::require_positive(n, "n");
    detail::require_positive(q, "q");
    // sqrt(12) (k - qn/2) = sqrt(3) (2k - qn)
    const std::int64_t offset = 2 * k - static_cast<std::int64_t>(q) * n;
    const double spread = static_cast<double>(q) * (q + 2) * n;
    return StandardizedPoint{n, k, q, std::sqrt(3.0) * static_cast<double>(offset) / std::sqrt(spread)};
}

TruncatedExpansion::TruncatedExpansion(int q, int nu_max) : q_(q) {
    detail::require_positive(q, "q");
    if (nu_max < 0) throw DomainError("nu_max must be nonnegative, got " + std::to_string(nu_max));
    corrections_.reserve(static_cast<std::size_t>(nu_max));
    for (int nu = 1; nu <= nu_max; ++nu) corrections_.push_back(build_q_even(nu, q));
}

std::vector<double> TruncatedExpansion::terms(int n, std::int64_t k) const {
    const double x = standardize(n, k, q_).x;
    std::vector<double> out;
    out.reserve(corrections_.size() + 1);
    out.push_back(gaussian_density(x));
    double n_power = 1.0;
    for (const GaussPolyFn& correction : corrections_) {
        n_power *= n;
        out.push_back(correction(x) / n_power);
    }
    return out;
}

double TruncatedExpansion::operator()(int n, std::int64_t k) const {
    const double x = standardize(n, k, q_).x;
    double value = gaussian_density(x);
    double n_power = 1.0;
    for (const GaussPolyFn& correction : corrections_) {
        n_power *= n;
        value += correction(x) / n_power;
    }
    return value;
}

double approximate_scaled(int n, std::int64_t k, int q, int nu_max) {
    return TruncatedExpansion(q, nu_max)(n, k);
}

}  // namespace ebinom
