#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace ebinom {

using BigInt = mpz_class;

// GMP keeps mpq_class results of arithmetic in lowest terms with a positive
// denominator; values built from raw numerator/denominator pairs must go
// through make_rational so the same holds.
using Rational = mpq_class;

Rational make_rational(const BigInt& numerator, const BigInt& denominator = 1);

// "p/q" in lowest terms, or "p" when the denominator is one.
std::string to_string(const Rational& value);
std::string to_string(const BigInt& value);

BigInt pow(const BigInt& base, unsigned long exponent);
Rational pow(const Rational& base, unsigned long exponent);
BigInt factorial(unsigned long m);
BigInt binomial(unsigned long n, unsigned long k);

/// Dense univariate polynomial with exact rational coefficients.
///
/// Coefficient i multiplies x^i. The stored sequence never ends in a zero, so
/// the zero polynomial has no stored coefficients and two polynomials are
/// equal exactly when their coefficient vectors are.
class RationalPolynomial {
public:
    RationalPolynomial() = default;
    explicit RationalPolynomial(std::vector<Rational> coeffs);

    static RationalPolynomial constant(const Rational& c);
    static RationalPolynomial monomial(const Rational& c, std::size_t power);
    static RationalPolynomial x();

    const std::vector<Rational>& coefficients() const noexcept { return coeffs_; }

    // Coefficient of x^power; zero past the degree.
    Rational operator[](std::size_t power) const;

    // -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool has_only_even_powers() const;

    RationalPolynomial derivative() const;

    Rational evaluate(const Rational& at) const;
    // Horner in double precision on the rounded coefficients.
    double evaluate(double at) const;
    std::vector<double> to_doubles() const;

    RationalPolynomial& operator+=(const RationalPolynomial& rhs);
    RationalPolynomial& operator-=(const RationalPolynomial& rhs);
    RationalPolynomial& operator*=(const RationalPolynomial& rhs);
    RationalPolynomial& operator*=(const Rational& scalar);

    friend RationalPolynomial operator+(RationalPolynomial lhs, const RationalPolynomial& rhs) {
        return lhs += rhs;
    }
    friend RationalPolynomial operator-(RationalPolynomial lhs, const RationalPolynomial& rhs) {
        return lhs -= rhs;
    }
    friend RationalPolynomial operator*(RationalPolynomial lhs, const RationalPolynomial& rhs) {
        return lhs *= rhs;
    }
    friend RationalPolynomial operator*(RationalPolynomial lhs, const Rational& scalar) {
        return lhs *= scalar;
    }
    friend RationalPolynomial operator*(const Rational& scalar, RationalPolynomial rhs) {
        return rhs *= scalar;
    }
    friend bool operator==(const RationalPolynomial& a, const RationalPolynomial& b) {
        return a.coeffs_ == b.coeffs_;
    }

private:
    void trim();

    std::vector<Rational> coeffs_;
};

std::string to_string(const RationalPolynomial& p);

}  // namespace ebinom
