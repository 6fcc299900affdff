#include <doctest.h>

#include "test_support.hpp"

#include <lvcert/certify/crosscheck.hpp>
#include <lvcert/certify/dual.hpp>
#include <lvcert/certify/magic.hpp>
#include <lvcert/certify/verify.hpp>
#include <lvcert/oracle/oracles.hpp>

using namespace lvcert;

namespace {

const std::vector<CoeffRecord>& q5_records()
{
    static std::vector<CoeffRecord> records = [] {
        const auto& cat = testing::catalogue(4);
        std::vector<CoeffRecord> out;
        for (std::size_t i = 0; i < cat.views.size(); ++i)
            out.push_back(coefficient_vectors(cat.views[i], CaseSpec::min_q5(), static_cast<int>(i)));
        return out;
    }();
    return records;
}

std::vector<CoeffRecord> support_records(const CaseSpec& spec)
{
    const auto& cat = testing::catalogue(4);
    std::vector<CoeffRecord> records(cat.views.size());
    for (int id : k44_support_views(cat))
        records[id] = coefficient_vectors(cat.views[id], spec, id);
    return records;
}

MagicFactor unit_magic()
{
    return {CaseKind::MinQ5, "1", BiPoly(1)};
}

std::vector<Rational> row(std::initializer_list<long> values)
{
    std::vector<Rational> out;
    for (long v : values)
        out.emplace_back(v);
    return out;
}

}  // namespace

TEST_CASE("reference models against direct summation")
{
    for (auto graph : {ReferenceGraph::K5, ReferenceGraph::K44})
        for (Rational t0 : {Rational(1, 2), Rational(2)}) {
            auto ref = reference_model(graph, CaseSpec::min_q5());
            CHECK(ref.u.eval(t0, 0) == oracle::direct_internal_energy(reference_graph(graph), 5, t0));
        }
    auto k5 = reference_model(ReferenceGraph::K5, CaseSpec::max_qge5());
    CHECK(k5.u.eval(Rational(1, 3), 1) == oracle::direct_internal_energy(reference_graph(ReferenceGraph::K5), 6, Rational(1, 3)));
    auto k44 = reference_model(ReferenceGraph::K44, CaseSpec::min_qge6());
    CHECK(k44.u.eval(0, 0) == Rational(1, 3));
    CHECK(k44.ztilde.eval(0, 1) == 7L * 7 * 7 * 7 * 7 * 7 * 7 * 7);
    RatFn total;
    for (const auto& [p, prob] : k44.pstar_by_partition)
        total += prob;
    CHECK(k44.pstar_by_partition.size() == 3);
    CHECK(ratfn_eq(total, RatFn(1)));
}

TEST_CASE("support views of the reference graphs")
{
    const auto& cat = testing::catalogue(4);
    auto support = k44_support_views(cat);
    REQUIRE(support.size() == 3);
    CHECK(cat.views[support[0]] == bipartite_view(4, Partition{3}));
    CHECK(cat.views[support[1]] == bipartite_view(4, Partition{2, 1}));
    CHECK(cat.views[support[2]] == bipartite_view(4, Partition{1, 1, 1}));
    for (int id : support) {
        CHECK(cat.views[id].inner_edges.empty());
        for (const auto& m : cat.views[id].mults)
            CHECK(m == cat.views[id].mults.front());
    }
    int k5 = k5_view(cat);
    CHECK(cat.views[k5] == complete_view(4));
    CHECK(cat.views[k5].inner_edges.size() == 6);
    CHECK(k44_support_views(testing::catalogue(3)).size() == 2);
    Catalogue partial = testing::catalogue(4);
    partial.views.erase(partial.views.begin() + support[1]);
    CHECK_THROWS_AS(k44_support_views(partial), SupportNotFound);

    auto dist = k44_distribution(cat, reference_model(ReferenceGraph::K44, CaseSpec::min_q5()));
    CHECK(dist.size() == 3);
}

TEST_CASE("exact simplex on small programs")
{
    auto opt = solve_lp({row({1, 2})}, row({4}), row({1, 1}), LpSense::Minimise);
    REQUIRE(opt.status == LpStatus::Optimal);
    CHECK(opt.value == 2);
    CHECK(opt.x == row({0, 2}));

    auto mx = solve_lp({row({1, 1, 1}), row({1, -1, 0})}, row({6, 0}), row({0, 0, 1}), LpSense::Maximise);
    REQUIRE(mx.status == LpStatus::Optimal);
    CHECK(mx.value == 6);

    auto unbounded = solve_lp({row({1, -1})}, row({1}), row({1, 0}), LpSense::Maximise);
    CHECK(unbounded.status == LpStatus::Unbounded);

    auto infeasible = solve_lp({row({1, 1}), row({1, 1})}, row({1, 2}), row({1, 0}), LpSense::Minimise);
    CHECK(infeasible.status == LpStatus::Infeasible);

    auto negative_rhs = solve_lp({row({1, 1})}, row({-1}), row({1, 1}), LpSense::Minimise);
    CHECK(negative_rhs.status == LpStatus::Infeasible);

    auto redundant = solve_lp({row({1, 1}), row({2, 2}), row({1, -1})}, row({1, 2, 0}), row({-1, 0}), LpSense::Minimise);
    REQUIRE(redundant.status == LpStatus::Optimal);
    CHECK(redundant.value == Rational(-1, 2));
    CHECK(redundant.x == std::vector<Rational>{Rational(1, 2), Rational(1, 2)});

    std::vector<std::vector<Rational>> degenerate{row({1, 1, 1, 0}), row({1, 0, 0, 1})};
    auto deg = solve_lp(degenerate, row({1, 0}), row({-1, -1, 0, 0}), LpSense::Minimise);
    REQUIRE(deg.status == LpStatus::Optimal);
    CHECK(deg.value == -1);
}

TEST_CASE("magic factors")
{
    for (auto kind : {CaseKind::MinQ5, CaseKind::MinQGe6, CaseKind::MaxQGe5}) {
        auto m = magic_factor(kind);
        CHECK_FALSE(m.m.is_zero());
        CHECK(coeff_sign_report(m.m).all_nonnegative);
    }
    auto q5 = magic_factor(CaseKind::MinQ5);
    CHECK(q5.m.t_degree() == 45);
    CHECK(q5.m.eval(1, 0) == Rational(BigInt("5203503202959360")));

    std::string flipped(magic_factor_text(CaseKind::MinQ5));
    auto at = flipped.find("+660 t");
    REQUIRE(at != std::string::npos);
    flipped.replace(at, 6, "-660 t");
    CHECK_THROWS_AS(load_magic_factor(CaseKind::MinQ5, flipped), MagicFactorError);
    CHECK_THROWS_AS(load_magic_factor(CaseKind::MinQ5, "0"), MagicFactorError);
    CHECK_THROWS_AS(load_magic_factor(CaseKind::MinQ5, "(1 - t)"), MagicFactorError);
    CHECK_THROWS_AS(load_magic_factor(CaseKind::MinQ5, "(1 + t"), MagicFactorError);
    CHECK_THROWS_AS(load_magic_factor(CaseKind::MinQ5, "(t + 1)^4 (t^2 - t + 1)"), MagicFactorError);
    CHECK_NOTHROW(load_magic_factor(CaseKind::MinQ5, "2 * (t + 1) ^ 3 (r + 1)"));
}

TEST_CASE("acceptance ladder on synthetic slacks")
{
    const BiPoly t = BiPoly::t(), r = BiPoly::r();
    auto zero = classify_slack(0, {BiPoly(), BiPoly(1)}, unit_magic(), true);
    CHECK(zero.status == VerdictStatus::ZeroOnSupport);

    auto nonzero_support = classify_slack(1, {t, BiPoly(1)}, unit_magic(), true);
    CHECK(nonzero_support.status == VerdictStatus::Fail);
    REQUIRE(nonzero_support.witness);
    CHECK(nonzero_support.witness->t_deg == 1);

    auto vanishing = classify_slack(2, {BiPoly(), BiPoly(1)}, unit_magic(), false);
    CHECK(vanishing.status == VerdictStatus::Fail);

    auto raw = classify_slack(3, {t * t + r, BiPoly(2)}, unit_magic(), false);
    CHECK(raw.status == VerdictStatus::StrictlyPositive);
    CHECK(raw.method == "raw");

    auto only_r = classify_slack(4, {t * r, BiPoly(1)}, unit_magic(), false);
    CHECK(only_r.status == VerdictStatus::Fail);
    CHECK_FALSE(only_r.witness);

    MagicFactor one_plus_t{CaseKind::MinQ5, "(1 + t)", t + BiPoly(1)};
    auto magic = classify_slack(5, {BiPoly(1) - t + t * t, BiPoly(1)}, one_plus_t, false);
    CHECK(magic.status == VerdictStatus::StrictlyPositive);
    CHECK(magic.method == "magic");

    auto negative = classify_slack(6, {BiPoly(1) - t, BiPoly(1)}, one_plus_t, false);
    CHECK(negative.status == VerdictStatus::Fail);
    REQUIRE(negative.witness);
    CHECK(to_string(*negative.witness) == "t^1 r^0");
}

TEST_CASE("dual solutions and support slacks")
{
    const auto& cat = testing::catalogue(4);
    for (auto spec : {CaseSpec::min_q5(), CaseSpec::min_qge6()}) {
        auto records = support_records(spec);
        auto ref = reference_model(ReferenceGraph::K44, spec);
        auto dual = solve_dual(spec, cat, records, ref);
        REQUIRE(dual.ok());
        CHECK(ratfn_eq(dual.u_star, ref.u));
        CHECK_FALSE(dual.delta1.is_zero());
        MinSlack slack(dual);
        for (int id : dual.support)
            CHECK(slack(records[id]).num.is_zero());
        auto feas = check_k44_feasibility(cat, records, ref);
        CHECK(feas.ok);
        CHECK(feas.rows.size() == 7);
    }
    CHECK(dual_constraints(CaseKind::MinQ5) == std::array<Partition, 2>{Partition{4}, Partition{2, 1, 1}});
    CHECK(dual_constraints(CaseKind::MinQGe6) == std::array<Partition, 2>{Partition{2, 1, 1}, Partition{1, 1, 1, 1}});
}

TEST_CASE("feasibility check names the violated row")
{
    const auto& cat = testing::catalogue(4);
    auto spec = CaseSpec::min_q5();
    auto records = support_records(spec);
    auto ref = reference_model(ReferenceGraph::K44, spec);
    records[k44_support_views(cat)[1]].n_c += BiPoly(1);
    auto feas = check_k44_feasibility(cat, records, ref);
    CHECK_FALSE(feas.ok);
    for (const auto& r : feas.rows)
        CHECK(r.holds == (r.name != "objective"));
}

TEST_CASE("max slack of the complete view")
{
    const auto& cat = testing::catalogue(4);
    auto spec = CaseSpec::max_qge5();
    int k5 = k5_view(cat);
    auto k5_rec = coefficient_vectors(cat.views[k5], spec, k5);
    CHECK(max_slack(k5_rec, k5_rec).num.is_zero());
    auto other = coefficient_vectors(cat.views[0], spec, 0);
    auto s = max_slack(k5_rec, other);
    auto expected = k5_rec.c() - other.c();
    CHECK(ratfn_eq(RatFn(s.num, s.den), expected));
    CHECK(classify_slack(0, s, magic_factor(CaseKind::MaxQGe5), false).status == VerdictStatus::StrictlyPositive);
}

TEST_CASE("LP cross-check at q = 5")
{
    const auto& cat = testing::catalogue(4);
    const auto& records = q5_records();
    auto spec = CaseSpec::min_q5();
    for (auto sense : {LpSense::Minimise, LpSense::Maximise}) {
        auto at_zero = crosscheck_lp(cat, records, spec, 0, 0, sense);
        REQUIRE(at_zero.status == LpStatus::Optimal);
        CHECK(at_zero.optimum == Rational(2, 5));
    }
    auto half = crosscheck_lp(cat, records, spec, Rational(1, 2), 0, LpSense::Minimise);
    CHECK(half.agrees());
    CHECK(half.reference == reference_model(ReferenceGraph::K44, spec).u.eval(Rational(1, 2), 0));
    CHECK_THROWS(crosscheck_lp(cat, records, spec, -1, 0, LpSense::Minimise));
}
