#include <doctest.h>

#include "test_support.hpp"

#include <lvcert/oracle/oracles.hpp>
#include <lvcert/potts/coeff_io.hpp>

#include <sstream>

using namespace lvcert;

namespace {

const std::vector<CaseSpec> all_cases{CaseSpec::min_q5(), CaseSpec::min_qge6(), CaseSpec::max_qge5()};

LocalView k5_view()
{
    return make_local_view(4, std::vector<VertexPair>{{1, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}, {3, 4}},
                           std::vector<std::vector<int>>(4));
}

LocalView empty_view(const std::vector<std::vector<int>>& colours)
{
    return make_local_view(static_cast<int>(colours.size()), std::vector<VertexPair>{}, colours);
}

/// Ztilde straight from the colouring enumeration, weighting each colouring
/// by the binomial multiplicity of its extra colours.
RatFn ztilde_by_enumeration(const LocalView& view, const CaseSpec& spec)
{
    int m_max = max_monochromatic(view);
    RatFn sum;
    enumerate_local_colourings(view, [&](const LocalColouring& w) {
        sum += multiplicity(view, w.ell, spec) * RatFn(pow(BiPoly::t() + BiPoly(1), m_max - w.m));
    });
    return sum;
}

}  // namespace

TEST_CASE("partitions")
{
    auto p4 = partitions_of(4);
    REQUIRE(p4.size() == 5);
    CHECK(p4[0] == Partition{4});
    CHECK(p4[1] == Partition{3, 1});
    CHECK(p4[2] == Partition{2, 2});
    CHECK(p4[3] == Partition{2, 1, 1});
    CHECK(p4[4] == Partition{1, 1, 1, 1});
    CHECK(partitions_of(3).size() == 3);
    CHECK(partitions_of(5).size() == 7);

    std::vector<int> m{1, 1, 2, 3};
    CHECK(partition_of_multiset(m) == Partition{2, 1, 1});
    std::vector<int> same{4, 4, 4, 4};
    CHECK(partition_of_multiset(same) == Partition{4});
    CHECK(partition_label(Partition{2, 1, 1}) == "2+1+1");
    CHECK(parse_partition("2+1+1") == Partition{2, 1, 1});
    CHECK_THROWS(parse_partition("1+2"));
    CHECK(partition_index(p4, Partition{2, 2}) == 2);
}

TEST_CASE("multiplicities of extra colours")
{
    auto view = empty_view({{1}, {2}});
    REQUIRE(view.colour_count == 2);
    CHECK(multiplicity(view, 2, CaseSpec::min_q5()).eval(0, 0) == 1);
    CHECK(multiplicity(view, 3, CaseSpec::min_q5()).eval(0, 0) == 3);
    CHECK(multiplicity(view, 4, CaseSpec::min_q5()).eval(0, 0) == 3);
    CHECK(multiplicity(view, 5, CaseSpec::min_q5()).eval(0, 0) == 1);
    CHECK(multiplicity(view, 4, CaseSpec::min_qge6()).eval(0, 1) == 10);
    CHECK(multiplicity(view, 4, CaseSpec::max_qge5()).eval(0, 0) == 3);
    CHECK_THROWS(multiplicity(view, 1, CaseSpec::min_q5()));
}

TEST_CASE("colouring enumeration versus colour classes")
{
    SmallGraph edge(2);
    edge.add_edge(0, 1);
    auto bare = local_view_from_representation(build_simple_representation(2, edge));
    REQUIRE(bare.boundary_size() == 0);
    int count = 0;
    enumerate_local_colourings(bare, [&](const LocalColouring&) { ++count; });
    CHECK(count == 13);
    CHECK(tally_colour_classes(bare).classes == 5);
}

TEST_CASE("monochromatic edge counts")
{
    auto view = empty_view({{1, 1, 1}, {1, 1, 1}, {1, 1, 1}, {1, 1, 1}});
    REQUIRE(view.colour_count == 1);
    auto mono = describe_colouring(view, {1, 1, 1, 1, 1});
    CHECK(mono.m == 16);
    CHECK(mono.m_v == 4);
    CHECK(mono.h_v == Partition{4});
    for (const auto& h : mono.h_u)
        CHECK(h == Partition{4});
    auto distinct = describe_colouring(view, {2, 3, 4, 5, 6});
    CHECK(distinct.m == 0);
    CHECK(distinct.ell == 6);
    CHECK(distinct.h_v == Partition{1, 1, 1, 1});
    for (const auto& h : distinct.h_u)
        CHECK(h == Partition{3, 1});
    CHECK(max_monochromatic(k5_view()) == 10);
}

TEST_CASE("Ztilde at t = 0 counts all colourings")
{
    for (int d : {2, 3}) {
        for (const auto& view : testing::catalogue(d).views)
            for (const auto& spec : all_cases) {
                auto z = local_partition_function(view, spec);
                for (long r0 : {0L, 1L, 4L}) {
                    BigInt q = spec.q_at(r0);
                    BigInt expected;
                    mpz_pow_ui(expected.get_mpz_t(), q.get_mpz_t(), d + 1);
                    CHECK(z.eval(0, r0) == Rational(expected));
                }
            }
    }
    const auto& c4 = testing::catalogue(4);
    for (std::size_t i = 0; i < c4.views.size(); i += 97)
        CHECK(local_partition_function(c4.views[i], CaseSpec::min_qge6()).eval(0, 3) == 9 * 9 * 9 * 9 * 9);
}

TEST_CASE("K5 view")
{
    auto view = k5_view();
    auto q5 = coefficient_vectors(view, CaseSpec::min_q5());
    CHECK(q5.ztilde.coeff(10, 0) == 120);
    CHECK(q5.ztilde.t_degree() == 10);
    CHECK(coefficient_vectors(view, CaseSpec::min_qge6()).ztilde.coeff(10, 0) == 720);
    for (const auto& spec : all_cases) {
        auto rec = coefficient_vectors(view, spec);
        for (long r0 : {0L, 2L})
            CHECK(rec.c().eval(0, r0) == Rational(2) / spec.q_at(r0));
        for (const auto& g : rec.n_gamma)
            CHECK(g.is_zero());
    }
}

TEST_CASE("gamma numerators sum to zero and c stays in range")
{
    const Rational t0(1, 3);
    for (const auto& view : testing::catalogue(3).views)
        for (const auto& spec : all_cases) {
            auto rec = coefficient_vectors(view, spec);
            BiPoly sum;
            for (const auto& g : rec.n_gamma)
                sum += g;
            CHECK(sum.is_zero());
            CHECK(coeff_sign_report(rec.ztilde).all_nonnegative);
            auto c = rec.c().eval(t0, 1);
            CHECK(c >= 0);
            CHECK(c <= Rational(3, 2));
        }
}

TEST_CASE("class tally agrees with the full colouring enumeration")
{
    for (const auto& view : testing::catalogue(3).views)
        for (const auto& spec : all_cases)
            CHECK(ratfn_eq(ztilde_by_enumeration(view, spec), RatFn(local_partition_function(view, spec))));
    const auto& c4 = testing::catalogue(4);
    for (std::size_t i = 0; i < c4.views.size(); i += 211)
        CHECK(ratfn_eq(ztilde_by_enumeration(c4.views[i], CaseSpec::min_q5()),
                       RatFn(local_partition_function(c4.views[i], CaseSpec::min_q5()))));
}

TEST_CASE("symbolic coefficients match direct summation")
{
    const Rational t0(1, 2);
    auto check_view = [&](const LocalView& view, int q) {
        auto direct = oracle::direct_coefficients(view, q, t0);
        for (const auto& spec : all_cases) {
            if ((spec.kind == CaseKind::MinQ5) != (q == 5))
                continue;
            auto rec = coefficient_vectors(view, spec);
            Rational r0 = spec.r_for_q(q);
            CHECK(rec.ztilde.eval(t0, r0) == direct.ztilde);
            CHECK(rec.c().eval(t0, r0) == direct.c);
            for (std::size_t s = 0; s < direct.gamma.size(); ++s)
                CHECK(rec.gamma(s).eval(t0, r0) == direct.gamma[s]);
        }
    };
    for (const auto& view : testing::catalogue(3).views) {
        check_view(view, 7);
        if (view.colour_count <= 5)
            check_view(view, 5);
    }
    const auto& c4 = testing::catalogue(4);
    int sampled = 0;
    for (std::size_t i = 0; i < c4.views.size(); i += 131)
        if (c4.views[i].colour_count <= 5) {
            check_view(c4.views[i], 5);
            check_view(c4.views[i], 7);
            ++sampled;
        }
    CHECK(sampled >= 8);
}

TEST_CASE("coefficient file round trip")
{
    const auto& cat = testing::catalogue(2);
    CoeffFile file;
    file.spec = CaseSpec::min_qge6();
    file.d = 2;
    file.catalogue_hash = cat.hash;
    for (std::size_t i = 0; i < cat.views.size(); ++i)
        file.records.push_back(coefficient_vectors(cat.views[i], file.spec, static_cast<int>(i)));
    std::ostringstream out;
    write_coefficients(out, file);
    std::istringstream in(out.str());
    auto back = read_coefficients(in);
    CHECK(back.spec.kind == file.spec.kind);
    CHECK(back.d == 2);
    CHECK(back.catalogue_hash == cat.hash);
    REQUIRE(back.records.size() == file.records.size());
    for (std::size_t i = 0; i < file.records.size(); ++i) {
        CHECK(back.records[i].view_id == file.records[i].view_id);
        CHECK(back.records[i].ztilde == file.records[i].ztilde);
        CHECK(back.records[i].n_c == file.records[i].n_c);
        CHECK(back.records[i].n_gamma == file.records[i].n_gamma);
    }
    std::istringstream junk("LVCOEF1 case=q7 d=2 count=0 catalogue=x\n");
    CHECK_THROWS(read_coefficients(junk));
}
