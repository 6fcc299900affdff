#include <doctest.h>

#include <lvcert/algebra/linear_solve.hpp>
#include <lvcert/algebra/poly_io.hpp>

#include <random>

using namespace lvcert;

namespace {

const BiPoly t = BiPoly::t();
const BiPoly r = BiPoly::r();
const BiPoly one(1);

BiPoly random_poly(std::mt19937& rng, int max_t, int max_r, bool nonneg = false)
{
    std::uniform_int_distribution<int> td(0, max_t), rd(0, max_r), cd(nonneg ? 0 : -9, 9), nd(1, 6);
    std::vector<BiPoly::Term> terms;
    int n = nd(rng);
    for (int i = 0; i < n; ++i)
        terms.push_back({{static_cast<std::uint32_t>(td(rng)), static_cast<std::uint32_t>(rd(rng))}, cd(rng)});
    return BiPoly::from_terms(terms);
}

}  // namespace

TEST_CASE("polynomial arithmetic examples")
{
    CHECK(pow(one + t, 0) == one);
    CHECK((one + t) * (one + t) == one + BiPoly(2) * t + t * t);
    CHECK((r + BiPoly(3)) * (r + BiPoly(4)) == r * r + BiPoly(7) * r + BiPoly(12));
    CHECK((t - t).is_zero());
    CHECK((t - t).term_count() == 0);
    CHECK(BiPoly(0).is_zero());
}

TEST_CASE("degree bounds well beyond t^200 r^20")
{
    auto p = pow(one + t, 210) * pow(one + r, 22);
    CHECK(p.t_degree() == 210);
    CHECK(p.r_degree() == 22);
    CHECK(p.coeff(210, 22) == 1);
    CHECK(p.eval(1, 1) == Rational(BigInt(1) << 232));
}

TEST_CASE("exact division examples")
{
    auto q = exact_divide(pow(one + t, 3), one + t);
    REQUIRE(q);
    CHECK(*q == pow(one + t, 2));
    auto s = exact_divide(t * t + r * t, t);
    REQUIRE(s);
    CHECK(*s == t + r);
    CHECK_FALSE(exact_divide(t + one, t));
    CHECK_FALSE(exact_divide(t + one, BiPoly(2)));
    CHECK_THROWS_AS(exact_divide(t, BiPoly(0)), AlgebraError);
}

TEST_CASE("rational function examples")
{
    CHECK(ratfn_eq(RatFn(t) + RatFn(1), RatFn(t + one)));
    auto inv = RatFn(one, one + t);
    CHECK((inv * inv).den() == pow(one + t, 2));
    CHECK(ratfn_eq(RatFn(BiPoly(2) * t, BiPoly(2)), RatFn(t)));
    CHECK_FALSE(ratfn_eq(RatFn(t), RatFn(t + one)));
    CHECK(ratfn_eq(RatFn(BiPoly(0), one + t), RatFn(0)));
    CHECK(ratfn_eq(-RatFn(t), RatFn(BiPoly(0) - t)));
}

TEST_CASE("rational function denominators stay certified")
{
    CHECK_THROWS_AS(RatFn(one, BiPoly(0)), AlgebraError);
    CHECK_THROWS_AS(RatFn(one, t - one), AlgebraError);
    RatFn f(one, BiPoly(0) - one - t);
    CHECK(coeff_sign_report(f.den()).all_nonnegative);
    CHECK(ratfn_eq(f, RatFn(BiPoly(-1), one + t)));
    // Dividing by something whose numerator changes sign cannot keep a
    // certified denominator.
    CHECK_THROWS_AS(RatFn(one) / RatFn(t - one), AlgebraError);
    auto q = RatFn(one) / RatFn(BiPoly(0) - one - t);
    CHECK(ratfn_eq(q, RatFn(BiPoly(-1), one + t)));
}

TEST_CASE("solve_2x2 examples")
{
    RatFn a(t + one), b(r);
    auto solved = solve_2x2({LinearRow{1, 0, a}, LinearRow{0, 1, b}, LinearRow{1, 1, a + b}});
    CHECK(solved.status == SolveStatus::Solved);
    CHECK(ratfn_eq(solved.delta1, a));
    CHECK(ratfn_eq(solved.delta2, b));
    CHECK(solve_2x2({LinearRow{1, 1, 1}, LinearRow{2, 2, 2}, LinearRow{3, 3, 3}}).status == SolveStatus::Singular);
    CHECK(solve_2x2({LinearRow{1, 0, 1}, LinearRow{0, 1, 1}, LinearRow{1, 1, 3}}).status == SolveStatus::Inconsistent);
    auto later = solve_2x2({LinearRow{1, 1, 2}, LinearRow{2, 2, 4}, LinearRow{1, -1, 0}});
    CHECK(later.status == SolveStatus::Solved);
    CHECK(ratfn_eq(later.delta1, RatFn(1)));
}

TEST_CASE("coefficient sign report examples")
{
    auto a = coeff_sign_report(one + BiPoly(2) * t + t * t);
    CHECK(a.all_nonnegative);
    CHECK(a.strictly_positive_at_r0);
    auto b = coeff_sign_report(r * t);
    CHECK(b.all_nonnegative);
    CHECK_FALSE(b.strictly_positive_at_r0);
    auto c = coeff_sign_report(t - one);
    CHECK_FALSE(c.all_nonnegative);
    REQUIRE(c.witness);
    CHECK(to_string(*c.witness) == "t^0 r^0");
}

TEST_CASE("evaluation examples")
{
    CHECK((one + t).eval(1, 0) == 2);
    CHECK(RatFn(one, one + t).eval(0, 0) == 1);
    CHECK(((r + BiPoly(3)) * (r + BiPoly(4))).eval(0, 0) == 12);
    CHECK_THROWS_AS(RatFn(one, t).eval(0, 0), AlgebraError);
    CHECK(RatFn(t, BiPoly(3)).eval(Rational(1, 2), 0) == Rational(1, 6));
}

TEST_CASE("algebraic properties on random inputs")
{
    std::mt19937 rng(7);
    for (int trial = 0; trial < 200; ++trial) {
        auto p = random_poly(rng, 6, 3);
        auto q = random_poly(rng, 5, 3);
        auto s = random_poly(rng, 4, 2);
        if (!q.is_zero()) {
            auto back = exact_divide(p * q, q);
            REQUIRE(back);
            CHECK(*back == p);
        }
        CHECK((p + q) * s == p * s + q * s);
        Rational t0(trial % 7 + 1, 3), r0(trial % 5, 2);
        CHECK((p * q).eval(t0, r0) == p.eval(t0, r0) * q.eval(t0, r0));
        auto pn = random_poly(rng, 5, 2, true), qn = random_poly(rng, 5, 2, true);
        CHECK(coeff_sign_report(pn * qn).all_nonnegative);
        CHECK(linear_combination({&p, &q}, {&s, &pn}) == p * s + q * pn);
    }
}

TEST_CASE("polynomial text round trip")
{
    std::mt19937 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto p = random_poly(rng, 8, 4);
        CHECK(parse_poly(poly_to_text(p)) == p);
        RatFn f(p, random_poly(rng, 3, 2, true) + one);
        auto g = parse_ratfn(ratfn_to_text(f));
        CHECK(g.num() == f.num());
        CHECK(g.den() == f.den());
    }
    CHECK(poly_to_text(BiPoly(-3) + t * r) == "t^0 r^0 -3\nt^1 r^1 1\n");
    CHECK_THROWS_AS(parse_poly("t^1 r^0 1\nt^0 r^0 1\n"), AlgebraError);
    CHECK_THROWS_AS(parse_poly("t^0 r^0 0\n"), AlgebraError);
}

TEST_CASE("factored expressions")
{
    CHECK(parse_expression("(r+3)(r+4)") == (r + BiPoly(3)) * (r + BiPoly(4)));
    CHECK(parse_expression("6 t^2 (t+1)") == BiPoly(6) * t * t * (t + one));
    CHECK(parse_expression("2*(t + 1)^25") == BiPoly(2) * pow(t + one, 25));
    CHECK(parse_expression("-t + 3") == BiPoly(3) - t);
    CHECK_THROWS_AS(parse_expression("(t+1"), AlgebraError);
    CHECK_THROWS_AS(parse_expression("x+1"), AlgebraError);
    CHECK(parse_expression(to_infix(BiPoly(5) * t * r - BiPoly(2))) == BiPoly(5) * t * r - BiPoly(2));
}
