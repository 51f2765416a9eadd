#include <gtest/gtest.h>

#include <cmath>

#include "ebinom/cumulants.hpp"
#include "ebinom/error.hpp"
#include "ebinom/expansion.hpp"
#include "ebinom/special_numbers.hpp"
#include "oracles/oracles.hpp"

using namespace ebinom;

namespace {

GaussPolyFn general_uniform(int nu, int q) {
    return build_q_general(nu, cumulants_up_to(nu + 2, q), uniform_variance(q));
}

}  // namespace

TEST(BuildQGeneral, FirstOrderVanishesForUniform) {
    EXPECT_TRUE(general_uniform(1, 3).is_zero());
    EXPECT_TRUE(general_uniform(3, 2).is_zero());
}

TEST(BuildQGeneral, SecondOrderAtQOne) {
    const RationalPolynomial want = make_rational(-1, 12) * hermite(4);
    EXPECT_EQ(general_uniform(2, 1).poly(), want);
}

TEST(BuildQGeneral, OddOrdersVanishForUniform) {
    for (int q = 1; q <= 5; ++q)
        for (int nu : {1, 3, 5, 7}) EXPECT_TRUE(general_uniform(nu, q).is_zero()) << nu << "," << q;
}

TEST(BuildQGeneral, SkewedInputWithRationalSigma) {
    // gamma_3 = 1, sigma^2 = 4: q_1 = He_3 gamma_3 / (3! sigma^3) = He_3 / 48.
    CumulantVector c{0, {Rational(0), Rational(4), Rational(1)}};
    EXPECT_EQ(build_q_general(1, c, Rational(4)).poly(), make_rational(1, 48) * hermite(3));
}

TEST(BuildQGeneral, RejectsIrrationalSigmaOnOddOrder) {
    CumulantVector c{0, {Rational(0), Rational(2), Rational(1)}};
    EXPECT_THROW(build_q_general(1, c, Rational(2)), DomainError);
}

TEST(BuildQGeneral, ArgumentErrors) {
    const auto short_vector = cumulants_up_to(3, 2);
    EXPECT_THROW(build_q_general(2, short_vector, uniform_variance(2)), std::invalid_argument);
    EXPECT_THROW(build_q_general(0, cumulants_up_to(4, 2), uniform_variance(2)), DomainError);
    EXPECT_THROW(build_q_general(2, cumulants_up_to(4, 2), Rational(0)), DomainError);
}

TEST(BuildQEven, FirstOrderClosedForm) {
    EXPECT_EQ(build_q_even(1, 1).poly(), make_rational(-1, 12) * hermite(4));
    for (int q = 1; q <= 8; ++q) {
        EXPECT_EQ(build_q_even(1, q).poly(), oracle::first_correction_closed_form(q)) << q;
    }
    // x^4 coefficient for q = 2 is -80/1280.
    EXPECT_EQ(build_q_even(1, 2).poly()[4], make_rational(-1, 16));
}

TEST(BuildQEven, MatchesIndependentSeriesExpansion) {
    EXPECT_EQ(build_q_even(2, 2).poly(), oracle::sympy_q4_q2());
    EXPECT_EQ(build_q_even(3, 1).poly(), oracle::sympy_q6_q1());
    EXPECT_EQ(build_q_even(1, 3).poly(), oracle::sympy_q2_q3());
}

TEST(BuildQEven, EqualsGeneralFormOnEvenIndex) {
    for (int nu = 1; nu <= 3; ++nu)
        for (int q = 1; q <= 5; ++q)
            EXPECT_EQ(build_q_even(nu, q).poly(), general_uniform(2 * nu, q).poly()) << nu << "," << q;
}

TEST(BuildQEven, EvenPowersAndDegree) {
    for (int nu = 1; nu <= 4; ++nu)
        for (int q = 1; q <= 4; ++q) {
            const auto poly = build_q_even(nu, q).poly();
            EXPECT_TRUE(poly.has_only_even_powers());
            // Largest s is nu (all weight on k_2), so degree 2(nu + nu) = 4 nu.
            EXPECT_EQ(poly.degree(), 4 * nu);
        }
    EXPECT_THROW(build_q_even(0, 2), DomainError);
    EXPECT_THROW(build_q_even(1, 0), DomainError);
}

TEST(BuildQEven, CorrectionsIntegrateToZero) {
    for (int nu = 1; nu <= 3; ++nu)
        for (int q = 1; q <= 3; ++q) {
            const GaussPolyFn fn = build_q_even(nu, q);
            EXPECT_LT(std::abs(oracle::trapezoid(fn, -16.0, 16.0, 64000)), 1e-8) << nu << "," << q;
        }
}

TEST(GaussPolyFn, Evaluation) {
    const GaussPolyFn fn(hermite(4));
    EXPECT_NEAR(fn(0.0), 3.0 * kInvSqrt2Pi, 1e-15);
    const double x = 1.3;
    EXPECT_NEAR(fn(x), (std::pow(x, 4) - 6 * x * x + 3) * std::exp(-x * x / 2) / std::sqrt(2 * M_PI), 1e-15);
    EXPECT_EQ(GaussPolyFn{}(0.5), 0.0);
}

TEST(Standardize, Examples) {
    EXPECT_EQ(standardize(10, 10, 2).x, 0.0);
    EXPECT_EQ(standardize(12, 6, 1).x, 0.0);
    EXPECT_NEAR(standardize(4, 6, 2).x, std::sqrt(1.5), 1e-15);
    EXPECT_NEAR(standardize(4, 6, 2).x, 1.224744871, 1e-9);
    const auto pt = standardize(7, -3, 4);
    EXPECT_EQ(pt.n, 7);
    EXPECT_EQ(pt.k, -3);
    EXPECT_EQ(pt.q, 4);
    EXPECT_LT(pt.x, 0.0);
}

TEST(ApproximateScaled, Examples) {
    for (int q = 1; q <= 4; ++q) EXPECT_NEAR(approximate_scaled(20, 10 * q, q, 0), kInvSqrt2Pi, 1e-16);
    EXPECT_NEAR(approximate_scaled(100, 100, 2, 1), kInvSqrt2Pi * (1 - 0.001875), 1e-15);
    EXPECT_THROW(approximate_scaled(0, 0, 2, 1), DomainError);
    EXPECT_THROW(approximate_scaled(10, 0, 2, -1), DomainError);
}

TEST(TruncatedExpansion, TermsSumToValue) {
    const TruncatedExpansion e(1, 3);
    EXPECT_EQ(e.nu_max(), 3);
    const auto terms = e.terms(50, 30);
    ASSERT_EQ(terms.size(), 4u);
    double sum = 0.0;
    for (double t : terms) sum += t;
    EXPECT_NEAR(sum, e(50, 30), 1e-16);
    EXPECT_NEAR(terms[0], gaussian_density(standardize(50, 30, 1).x), 1e-17);
}
