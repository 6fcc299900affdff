#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lvcert {

using BigInt = mpz_class;
using Rational = mpq_class;

class AlgebraError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Exponent pair of a monomial t^t_deg r^r_deg.
struct Monomial {
    std::uint32_t t_deg = 0;
    std::uint32_t r_deg = 0;

    auto operator<=>(const Monomial&) const = default;
};

/// Sparse bivariate polynomial in (t, r) with arbitrary-precision integer
/// coefficients. Terms are kept sorted by (t_deg, r_deg) and zero
/// coefficients are never stored, so structural equality is value equality.
class BiPoly {
public:
    struct Term {
        Monomial mono;
        BigInt coeff;
    };

    BiPoly() = default;
    BiPoly(long value);  // NOLINT: implicit constants read naturally in formulas
    BiPoly(const BigInt& value);  // NOLINT

    static BiPoly monomial(std::uint32_t t_deg, std::uint32_t r_deg, const BigInt& coeff = 1);
    static BiPoly t();
    static BiPoly r();
    /// Builds from arbitrary (possibly unsorted, duplicated, zero) terms.
    static BiPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// -1 for the zero polynomial.
    int t_degree() const;
    int r_degree() const;

    BigInt coeff(std::uint32_t t_deg, std::uint32_t r_deg) const;

    /// gcd of all coefficients (always >= 0; 0 for the zero polynomial).
    BigInt content() const;

    /// p(t, 0).
    BiPoly at_r_zero() const;

    /// p(t, r + shift).
    BiPoly shift_r(long shift) const;

    Rational eval(const Rational& t0, const Rational& r0) const;

    BiPoly operator-() const;
    BiPoly& operator+=(const BiPoly& other);
    BiPoly& operator-=(const BiPoly& other);
    BiPoly& operator*=(const BiPoly& other);
    BiPoly& operator*=(const BigInt& scalar);

    /// Divides every coefficient by `divisor`; throws if any division is inexact.
    BiPoly divide_scalar(const BigInt& divisor) const;

    friend BiPoly operator+(BiPoly a, const BiPoly& b) { return a += b; }
    friend BiPoly operator-(BiPoly a, const BiPoly& b) { return a -= b; }
    friend BiPoly operator*(const BiPoly& a, const BiPoly& b);

    friend bool operator==(const BiPoly& a, const BiPoly& b);

private:
    std::vector<Term> terms_;
};

BiPoly pow(const BiPoly& base, unsigned exponent);

/// sum_i factors[i] * polys[i], accumulated in one pass.
BiPoly linear_combination(const std::vector<const BiPoly*>& factors,
                          const std::vector<const BiPoly*>& polys);

/// Exact quotient s with s * q == p over the integers, or nullopt when no
/// such integer polynomial exists. Division runs in t over Q(r) with an
/// integrality check on each leading-coefficient quotient.
std::optional<BiPoly> exact_divide(const BiPoly& p, const BiPoly& q);

/// Outcome of a coefficient sign scan.
struct SignReport {
    bool all_nonnegative = true;
    /// Meaningful when all_nonnegative: p(t, 0) is not the zero polynomial.
    bool strictly_positive_at_r0 = false;
    /// First negative monomial in (t, r) order when !all_nonnegative.
    std::optional<Monomial> witness;
};

SignReport coeff_sign_report(const BiPoly& p);

std::string to_string(const Monomial& m);

}  // namespace lvcert
