#pragma once

#include <lvcert/algebra/bipoly.hpp>

namespace lvcert {

/// Quotient of two BiPolys. The denominator always has non-negative
/// coefficients with at least one positive, so the sign of the function for
/// t > 0, r >= 0 is carried entirely by the numerator. No gcd normalisation
/// is performed; equality is by cross-multiplication.
class RatFn {
public:
    RatFn() : num_(0), den_(1) {}
    RatFn(const BiPoly& num);  // NOLINT
    RatFn(long value);  // NOLINT
    /// Throws AlgebraError for a zero denominator or one whose coefficients
    /// are of mixed sign. An all-non-positive denominator is negated together
    /// with the numerator.
    RatFn(BiPoly num, BiPoly den);

    const BiPoly& num() const { return num_; }
    const BiPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }

    /// Exact value; throws AlgebraError when the denominator vanishes there.
    Rational eval(const Rational& t0, const Rational& r0) const;

    RatFn operator-() const;
    friend RatFn operator+(const RatFn& a, const RatFn& b);
    friend RatFn operator-(const RatFn& a, const RatFn& b);
    friend RatFn operator*(const RatFn& a, const RatFn& b);
    friend RatFn operator/(const RatFn& a, const RatFn& b);

    RatFn& operator+=(const RatFn& b) { return *this = *this + b; }
    RatFn& operator-=(const RatFn& b) { return *this = *this - b; }
    RatFn& operator*=(const RatFn& b) { return *this = *this * b; }

private:
    void reduce_content();

    BiPoly num_;
    BiPoly den_;
};

/// a.num * b.den == b.num * a.den.
bool ratfn_eq(const RatFn& a, const RatFn& b);

}  // namespace lvcert
