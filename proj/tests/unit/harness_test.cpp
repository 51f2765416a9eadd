#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "ebinom/error.hpp"
#include "ebinom/expansion.hpp"
#include "ebinom/harness.hpp"

using namespace ebinom;

// Reference values below come from tests/oracles/uniform_error_oracle.py
// (Python integers and the closed-form first correction).

TEST(UniformError, SingleFactor) {
    // sigma sqrt(n) p = 0.25 at k = 0, 1; x = -1, +1.
    const auto e = uniform_error(1, 1, 0);
    EXPECT_NEAR(e.sup_error, 0.25 - 0.24197072451914337, 1e-16);
    EXPECT_NEAR(e.sup_error, 0.0080292754808566347, 1e-16);
    EXPECT_EQ(e.argmax_k, 0);
}

TEST(UniformError, FrozenValues) {
    const auto e0 = uniform_error(100, 2, 0);
    EXPECT_NEAR(e0.sup_error, 0.00074793223213509563, 1e-15);
    EXPECT_EQ(e0.argmax_k, 100);

    const auto e1 = uniform_error(100, 2, 1);
    EXPECT_NEAR(e1.sup_error, 2.5068002078576512e-06, 1e-15);
    EXPECT_TRUE(e1.argmax_k == 86 || e1.argmax_k == 114) << e1.argmax_k;

    EXPECT_NEAR(uniform_error(50, 1, 1).sup_error, 1.6847959827981374e-05, 1e-15);
    EXPECT_NEAR(uniform_error(200, 3, 0).sup_error, 0.00033914769677295675, 1e-15);
}

TEST(UniformError, MoreTermsHelp) {
    for (int q = 1; q <= 3; ++q) {
        for (int n : {50, 120}) {
            const double e0 = uniform_error(n, q, 0).sup_error;
            const double e1 = uniform_error(n, q, 1).sup_error;
            const double e2 = uniform_error(n, q, 2).sup_error;
            EXPECT_LT(e1, e0) << n << "," << q;
            EXPECT_LT(e2, e1) << n << "," << q;
            EXPECT_GE(e2, 0.0);
        }
    }
}

TEST(UniformError, TailOutsideSupportIsNegligible) {
    for (int q = 1; q <= 3; ++q)
        for (int n : {100, 200, 400})
            for (int nu = 0; nu <= 2; ++nu) {
                EXPECT_LT(std::abs(approximate_scaled(n, -1, q, nu)), 1e-15);
                EXPECT_LT(std::abs(approximate_scaled(n, static_cast<std::int64_t>(n) * q + 1, q, nu)), 1e-15);
            }
}

TEST(ExactScaled, MatchesDefinition) {
    EXPECT_NEAR(exact_scaled(2, 2, 2), std::sqrt(8.0 * 2 / 12) / 3.0, 1e-16);
    EXPECT_EQ(exact_scaled(2, 5, 2), 0.0);
}

TEST(FitLine, RecoversExactLine) {
    const std::vector<double> x{1, 2, 3, 4}, y{5, 3, 1, -1};
    const LineFit fit = fit_line(x, y);
    EXPECT_NEAR(fit.slope, -2.0, 1e-14);
    EXPECT_NEAR(fit.intercept, 7.0, 1e-14);
    EXPECT_NEAR(fit.slope_stderr, 0.0, 1e-14);

    const std::vector<double> noisy{5, 3.1, 0.9, -1};
    EXPECT_GT(fit_line(x, noisy).slope_stderr, 0.0);
    const std::vector<double> two{1, 2};
    EXPECT_THROW(fit_line(two, two), DomainError);
}

TEST(RateSweep, SlopesFollowTruncationOrder) {
    const std::vector<int> n_list{50, 100, 200, 400};
    const SweepReport r0 = rate_sweep(2, 0, n_list);
    EXPECT_NEAR(r0.fitted_slope, -1.0, 0.3);
    const SweepReport r1 = rate_sweep(2, 1, n_list);
    EXPECT_NEAR(r1.fitted_slope, -2.0, 0.3);
    ASSERT_EQ(r1.records.size(), 4u);
    for (std::size_t i = 0; i < n_list.size(); ++i) {
        EXPECT_EQ(r1.records[i].n, n_list[i]);
        EXPECT_EQ(r1.records[i].sup_error, uniform_error(n_list[i], 2, 1).sup_error);
    }
    EXPECT_EQ(r1.q, 2);
    EXPECT_EQ(r1.nu_max, 1);

    const std::vector<int> small{64, 128, 256};
    EXPECT_NEAR(rate_sweep(1, 0, small).fitted_slope, -1.0, 0.3);
}

TEST(RateSweep, RejectsBadLists) {
    const std::vector<int> one{10}, unsorted{10, 30, 20}, dup{10, 10, 20}, zero{0, 10, 20};
    EXPECT_THROW(rate_sweep(1, 0, one), DomainError);
    EXPECT_THROW(rate_sweep(1, 0, unsorted), DomainError);
    EXPECT_THROW(rate_sweep(1, 0, dup), DomainError);
    EXPECT_THROW(rate_sweep(1, 0, zero), DomainError);
}

TEST(EgerCentralRatio, Values) {
    // 3 / (9 / sqrt(2 pi * 2 * 8/12))
    EXPECT_NEAR(eger_central_ratio(2, 2), 3.0 / 9.0 * std::sqrt(2 * M_PI * 2 * 8.0 / 12.0), 1e-15);
    EXPECT_NEAR(eger_central_ratio(2, 2), 0.9648016727443568, 1e-15);
    EXPECT_NEAR(eger_central_ratio(200, 2), 0.99906255089603713, 1e-14);
    EXPECT_NEAR(1.0 - eger_central_ratio(200, 2), 0.1875 / 200, 5e-6);
    EXPECT_THROW(eger_central_ratio(101, 1), DomainError);
    EXPECT_THROW(eger_central_ratio(0, 2), DomainError);

    double prev = 1.0;
    for (int n : {100, 200, 400}) {
        const double gap = std::abs(eger_central_ratio(n, 2) - 1.0);
        EXPECT_LE(gap, 0.25 / n);
        EXPECT_LT(gap, prev);
        prev = gap;
    }
}

TEST(RemarkCheck, Examples) {
    for (auto [n, k, q] : {std::tuple{10, 10, 2}, {25, 30, 3}, {7, 0, 4}}) {
        const auto r = remark_n5_check(n, k, q);
        EXPECT_LE(std::abs(r.general_value - r.remark_value), 1e-12) << n << "," << k << "," << q;
    }
}

TEST(RemarkCheck, RandomGrid) {
    std::mt19937 rng(2024);
    for (int i = 0; i < 100; ++i) {
        const int n = std::uniform_int_distribution<int>(1, 500)(rng);
        const int q = std::uniform_int_distribution<int>(1, 8)(rng);
        const std::int64_t k = std::uniform_int_distribution<std::int64_t>(0, std::int64_t{n} * q)(rng);
        const auto r = remark_n5_check(n, k, q);
        EXPECT_LE(std::abs(r.general_value - r.remark_value), 1e-12);
    }
}
