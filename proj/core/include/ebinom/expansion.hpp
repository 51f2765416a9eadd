#pragma once

#include <cstdint>
#include <vector>

#include "ebinom/cumulants.hpp"
#include "ebinom/rational.hpp"

namespace ebinom {

inline constexpr double kInvSqrt2Pi = 0.398942280401432677939946059934;

// Standard normal density.
double gaussian_density(double x);

/// A function (1/sqrt(2 pi)) exp(-x^2/2) P(x) with P exact.
///
/// The polynomial stays rational; only evaluation goes through doubles.
/// Immutable after construction.
class GaussPolyFn {
public:
    GaussPolyFn() = default;
    explicit GaussPolyFn(RationalPolynomial poly);

    const RationalPolynomial& poly() const noexcept { return poly_; }
    bool is_zero() const noexcept { return poly_.is_zero(); }

    double operator()(double x) const;

private:
    RationalPolynomial poly_;
    std::vector<double> coeffs_;
};

struct StandardizedPoint {
    int n = 0;
    std::int64_t k = 0;
    int q = 0;
    double x = 0.0;
};

/// Correction q_nu of the lattice Edgeworth expansion for arbitrary cumulants:
///
///   q_nu(x) = phi(x) sum_{k_1 + 2k_2 + ... + nu k_nu = nu} He_{nu+2s}(x)
///             prod_m (1/k_m!) (gamma_{m+2} / ((m+2)! sigma^{m+2}))^{k_m}
///
/// Needs gamma_3..gamma_{nu+2}; throws std::invalid_argument otherwise.
/// A term carries sigma^{-(nu+2s)}, so for even nu the algebra stays in the
/// field of sigma^2. For odd nu any term with a nonzero cumulant product needs
/// sigma itself, which is only accepted when sigma2 is the square of a
/// rational; anything else raises DomainError.
GaussPolyFn build_q_general(int nu, const CumulantVector& cumulants, const Rational& sigma2);

/// Even correction q_{2nu} for the uniform law on {0..q}, from the closed form
///
///   q_{2nu}(x) = phi(x) (12/(q(q+2)))^nu sum_{k_2 + 2k_4 + ... + nu k_{2nu} = nu}
///                He_{2(nu+s)}(x) (6/(q(q+2)))^s
///                prod_m (1/k_{2m}!) (B_{2m+2} ((q+1)^{2m+2} - 1) / ((2m+2)! (m+1)))^{k_{2m}}
GaussPolyFn build_q_even(int nu, int q);

// x = sqrt(12) (k - q n / 2) / sqrt(q (q+2) n); exactly zero at k = q n / 2.
StandardizedPoint standardize(int n, std::int64_t k, int q);

/// phi(x) + sum_{nu=1..nu_max} q_{2nu}(x) / n^nu, the approximation of
/// sigma sqrt(n) P(S_n = k). The odd corrections vanish for the uniform law,
/// so truncating after nu_max terms leaves an O(n^{-(nu_max+1)}) remainder.
///
/// Holds the correction functions for one q so repeated evaluation does not
/// rebuild them.
class TruncatedExpansion {
public:
    TruncatedExpansion(int q, int nu_max);

    int q() const noexcept { return q_; }
    int nu_max() const noexcept { return static_cast<int>(corrections_.size()); }
    // corrections()[nu-1] is q_{2nu}.
    const std::vector<GaussPolyFn>& corrections() const noexcept { return corrections_; }

    double operator()(int n, std::int64_t k) const;

    // terms[0] is the Gaussian term; terms[nu] is q_{2nu}(x) / n^nu.
    std::vector<double> terms(int n, std::int64_t k) const;

private:
    int q_;
    std::vector<GaussPolyFn> corrections_;
};

double approximate_scaled(int n, std::int64_t k, int q, int nu_max);

}  // namespace ebinom
