#include <lvcert/algebra/ratfn.hpp>

namespace lvcert {

namespace {

enum class SignPattern { Zero, NonNegative, NonPositive, Mixed };

SignPattern sign_pattern(const BiPoly& p)
{
    bool pos = false, neg = false;
    for (const auto& term : p.terms()) {
        if (sgn(term.coeff) > 0)
            pos = true;
        else
            neg = true;
    }
    if (pos && neg)
        return SignPattern::Mixed;
    if (pos)
        return SignPattern::NonNegative;
    if (neg)
        return SignPattern::NonPositive;
    return SignPattern::Zero;
}

}  // namespace

RatFn::RatFn(const BiPoly& num) : num_(num), den_(1) {}

RatFn::RatFn(long value) : num_(value), den_(1) {}

RatFn::RatFn(BiPoly num, BiPoly den) : num_(std::move(num)), den_(std::move(den))
{
    switch (sign_pattern(den_)) {
    case SignPattern::Zero:
        throw AlgebraError("RatFn: zero denominator");
    case SignPattern::Mixed:
        throw AlgebraError("RatFn: denominator coefficients have mixed signs; positivity cannot be certified");
    case SignPattern::NonPositive:
        num_ = -num_;
        den_ = -den_;
        break;
    case SignPattern::NonNegative:
        break;
    }
    reduce_content();
}

void RatFn::reduce_content()
{
    if (num_.is_zero()) {
        den_ = 1;
        return;
    }
    BigInt g = num_.content();
    BigInt h = den_.content();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), h.get_mpz_t());
    if (g > 1) {
        num_ = num_.divide_scalar(g);
        den_ = den_.divide_scalar(g);
    }
}

Rational RatFn::eval(const Rational& t0, const Rational& r0) const
{
    Rational d = den_.eval(t0, r0);
    if (sgn(d) == 0)
        throw AlgebraError("RatFn::eval: zero denominator at evaluation point");
    Rational v = num_.eval(t0, r0) / d;
    v.canonicalize();
    return v;
}

RatFn RatFn::operator-() const
{
    RatFn out = *this;
    out.num_ = -out.num_;
    return out;
}

RatFn operator+(const RatFn& a, const RatFn& b)
{
    if (a.den_ == b.den_)
        return RatFn(a.num_ + b.num_, a.den_);
    return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a, const RatFn& b) { return a + (-b); }

RatFn operator*(const RatFn& a, const RatFn& b)
{
    return RatFn(a.num_ * b.num_, a.den_ * b.den_);
}

RatFn operator/(const RatFn& a, const RatFn& b)
{
    if (b.is_zero())
        throw AlgebraError("RatFn: division by zero");
    // The new denominator a.den * b.num must be single-signed; the RatFn
    // constructor absorbs a negative sign into the numerator or fails.
    return RatFn(a.num_ * b.den_, a.den_ * b.num_);
}

bool ratfn_eq(const RatFn& a, const RatFn& b)
{
    return a.num() * b.den() == b.num() * a.den();
}

}  // namespace lvcert
