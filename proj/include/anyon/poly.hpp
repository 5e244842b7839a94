#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>
#include <json.hpp>

namespace anyon {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Dense univariate polynomial in t over the integers. Stored canonically:
/// coefficient i multiplies t^i and there are no trailing zeros.
class IntPoly {
public:
    static constexpr int kZeroDegree = std::numeric_limits<int>::min();

    IntPoly() = default;
    IntPoly(long constant);  // NOLINT: integers promote to constant polynomials
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly monomial(const BigInt& c, std::size_t power);
    /// The polynomial t.
    static IntPoly t() { return monomial(1, 1); }

    bool is_zero() const { return coeffs_.empty(); }
    /// kZeroDegree for the zero polynomial.
    int degree() const { return is_zero() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
    std::span<const BigInt> coeffs() const { return coeffs_; }
    /// Coefficient of t^power; zero beyond the degree.
    BigInt coeff(std::size_t power) const;
    const BigInt& leading() const { return coeffs_.back(); }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    IntPoly& operator*=(const IntPoly& rhs);
    IntPoly& operator*=(const BigInt& scalar);

    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const BigInt& s) { return a *= s; }
    friend bool operator==(const IntPoly& a, const IntPoly& b) { return a.coeffs_ == b.coeffs_; }

    /// Quotient q with q * divisor == *this. Throws std::domain_error when the
    /// division leaves a remainder or needs non-integer coefficients.
    IntPoly divide_exact(const IntPoly& divisor) const;

    /// Non-negative gcd of the coefficients (0 for the zero polynomial).
    BigInt content() const;
    /// this / content(), sign preserved.
    IntPoly primitive_part() const;

    BigRational evaluate(const BigRational& x) const;
    double evaluate(double x) const;

    /// Sign of p(num / 2^exponent), computed exactly.
    int sign_at_dyadic(const BigInt& num, unsigned long exponent) const;

    /// ASCII, increasing powers: "1 - 4*t^3 - 1*t^6". Linear term prints as "c*t".
    std::string to_string() const;
    /// {"coeffs": ["1","0","0","-4"]}
    nlohmann::json to_json() const;
    static IntPoly from_json(const nlohmann::json& j);

private:
    void trim();

    std::vector<BigInt> coeffs_;
};

/// Pseudo-remainder of a by b (b nonzero), up to a positive scalar multiple.
IntPoly pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Primitive gcd with positive leading coefficient, via the primitive
/// remainder sequence. Throws InvalidArgument when both inputs are zero.
IntPoly poly_gcd(const IntPoly& p, const IntPoly& q);

/// Reduced quotient num/den. Invariants after construction: den != 0,
/// gcd(num, den) = 1 over Q, gcd of all coefficients is 1, and den(0) > 0
/// (or leading(den) > 0 when den(0) == 0). The zero function is 0/1.
class RationalFn {
public:
    RationalFn(IntPoly num, IntPoly den);

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    friend bool operator==(const RationalFn&, const RationalFn&) = default;

    /// "(num) / (den)"
    std::string to_string() const;
    nlohmann::json to_json() const;

private:
    IntPoly num_;
    IntPoly den_;
};

/// First n_max + 1 Taylor coefficients at t = 0, via the recurrence induced by
/// the denominator. Throws SingularAtOrigin when den(0) == 0.
std::vector<BigRational> series_coeffs(const RationalFn& f, std::size_t n_max);
/// Same expansion for an unreduced quotient.
std::vector<BigRational> series_coeffs(const IntPoly& num, const IntPoly& den, std::size_t n_max);

}  // namespace anyon
