#include "ebinom/harness.hpp"

#include <cmath>
#include <future>
#include <numbers>
#include <string>

#include "ebinom/error.hpp"
#include "ebinom/exact_core.hpp"
#include "ebinom/expansion.hpp"

namespace ebinom {

namespace {

double scale_factor(int n, int q) {
    return std::sqrt(static_cast<double>(q) * (q + 2) * n / 12.0);
}

}  // namespace

double exact_scaled(int n, std::int64_t k, int q) {
    return scaled_probability(n, k, q).get_d() * scale_factor(n, q);
}

UniformError uniform_error(int n, int q, int nu_max) {
    const BigRow row = compute_row(n, q);
    const TruncatedExpansion expansion(q, nu_max);
    const BigInt total = pow(BigInt(q + 1), static_cast<unsigned long>(n));
    const double scale = scale_factor(n, q);

    UniformError worst{-1.0, 0};
    for (std::int64_t k = 0; k <= row.max_index(); ++k) {
        const double exact =
            make_rational(row.coeffs[static_cast<std::size_t>(k)], total).get_d() * scale;
        const double err = std::abs(exact - expansion(n, k));
        if (err > worst.sup_error) worst = {err, k};
    }
    return worst;
}

LineFit fit_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) throw std::invalid_argument("fit_line: x and y differ in length");
    if (x.size() < 3) throw DomainError("fit_line needs at least three points");

    const double count = static_cast<double>(x.size());
    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        mean_x += x[i];
        mean_y += y[i];
    }
    mean_x /= count;
    mean_y /= count;

    double sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        sxx += (x[i] - mean_x) * (x[i] - mean_x);
        sxy += (x[i] - mean_x) * (y[i] - mean_y);
    }
    if (sxx == 0.0) throw DomainError("fit_line: x values are all equal");

    LineFit fit;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;
    double rss = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double r = y[i] - (fit.intercept + fit.slope * x[i]);
        rss += r * r;
    }
    fit.slope_stderr = std::sqrt(rss / (count - 2.0) / sxx);
    return fit;
}

SweepReport rate_sweep(int q, int nu_max, std::span<const int> n_list) {
    detail::require_positive(q, "q");
    if (nu_max < 0) throw DomainError("nu_max must be nonnegative");
    if (n_list.size() < 3) {
        throw DomainError("rate sweep needs at least three values of n, got " +
                          std::to_string(n_list.size()));
    }
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        detail::require_positive(n_list[i], "n");
        if (i > 0 && n_list[i] <= n_list[i - 1]) {
            throw DomainError("n values must be strictly increasing");
        }
    }

    std::vector<std::future<UniformError>> pending;
    pending.reserve(n_list.size());
    for (int n : n_list) {
        pending.push_back(std::async(std::launch::async, uniform_error, n, q, nu_max));
    }

    SweepReport report;
    report.q = q;
    report.nu_max = nu_max;
    std::vector<double> log_n, log_err;
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        const UniformError e = pending[i].get();
        report.records.push_back({n_list[i], e.sup_error, e.argmax_k});
        log_n.push_back(std::log(static_cast<double>(n_list[i])));
        log_err.push_back(std::log(e.sup_error));
    }
    const LineFit fit = fit_line(log_n, log_err);
    report.fitted_slope = fit.slope;
    report.slope_stderr = fit.slope_stderr;
    return report;
}

double eger_central_ratio(int n, int q) {
    detail::require_positive(n, "n");
    detail::require_positive(q, "q");
    const std::int64_t nq = static_cast<std::int64_t>(n) * q;
    if (nq % 2 != 0) {
        throw DomainError("central coefficient needs n*q even, got n*q = " + std::to_string(nq));
    }
    // binom(n, nq/2)^(q) / (q+1)^n, exact until this point
    const double central = scaled_probability(n, nq / 2, q).get_d();
    return central * std::sqrt(2.0 * std::numbers::pi * n * q * (q + 2) / 12.0);
}

RemarkComparison remark_n5_check(int n, std::int64_t k, int q) {
    const double x = standardize(n, k, q).x;
    const double x2 = x * x;
    const double hermite4 = x2 * x2 - 6.0 * x2 + 3.0;
    const double q1_4 = std::pow(static_cast<double>(q + 1), 4) - 1.0;
    const double denom = 20.0 * n * q * q * static_cast<double>(q + 2) * (q + 2);
    RemarkComparison out;
    out.general_value = approximate_scaled(n, k, q, 1);
    out.remark_value = gaussian_density(x) * (1.0 - q1_4 * hermite4 / denom);
    return out;
}

}  // namespace ebinom
