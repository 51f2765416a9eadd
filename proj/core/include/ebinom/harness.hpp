#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace ebinom {

// sigma sqrt(n) P(S_n = k), formed exactly and rounded once.
double exact_scaled(int n, std::int64_t k, int q);

struct UniformError {
    double sup_error = 0.0;
    std::int64_t argmax_k = 0;
};

// max over k in 0..n*q of |sigma sqrt(n) p_n(k) - approximate_scaled(n, k, q, nu_max)|.
// Outside the support the exact value is zero and the Gaussian tail is below
// double resolution at the sizes this is used for, so those k are skipped.
// Ties go to the smallest k.
UniformError uniform_error(int n, int q, int nu_max);

struct SweepRecord {
    int n = 0;
    double sup_error = 0.0;
    std::int64_t argmax_k = 0;
};

/// Sup errors over a list of n together with the least-squares slope of
/// log(sup_error) against log(n).
struct SweepReport {
    int q = 0;
    int nu_max = 0;
    std::vector<SweepRecord> records;  // ascending n
    double fitted_slope = 0.0;
    double slope_stderr = 0.0;
};

struct LineFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_stderr = 0.0;
};

// Ordinary least squares of y on x; needs at least three points. The slope
// standard error uses n-2 degrees of freedom.
LineFit fit_line(std::span<const double> x, std::span<const double> y);

// n_list must hold at least three strictly increasing positive values.
// Each n is evaluated on its own thread; records come back in n order.
SweepReport rate_sweep(int q, int nu_max, std::span<const int> n_list);

// binom(n, nq/2)^(q) / ((q+1)^n / sqrt(2 pi n q(q+2)/12)). DomainError when n q is odd.
double eger_central_ratio(int n, int q);

struct RemarkComparison {
    double general_value = 0.0;
    double remark_value = 0.0;
};

// approximate_scaled(n, k, q, 1) next to the hand-expanded first-order form
//   phi(x) (1 - ((q+1)^4 - 1)(x^4 - 6x^2 + 3) / (20 n q^2 (q+2)^2)).
RemarkComparison remark_n5_check(int n, std::int64_t k, int q);

}  // namespace ebinom
