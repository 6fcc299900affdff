#include <lvcert/certify/verify.hpp>

#include <lvcert/potts/partition.hpp>
#include <lvcert/util/parallel.hpp>

#include <algorithm>
#include <stdexcept>

namespace lvcert {

std::string status_name(VerdictStatus status)
{
    switch (status) {
    case VerdictStatus::ZeroOnSupport:
        return "zero";
    case VerdictStatus::StrictlyPositive:
        return "positive";
    case VerdictStatus::Fail:
        return "fail";
    }
    return "fail";
}

MinSlack::MinSlack(const DualSolution& dual, int d)
    : s1_(dual.constraint_index[0]), s2_(dual.constraint_index[1])
{
    if (!dual.ok())
        throw std::invalid_argument("MinSlack needs a solved dual system");
    const BiPoly& nu = dual.u_star.num();
    const BiPoly& du = dual.u_star.den();
    const BiPoly& p1 = dual.delta1.num();
    const BiPoly& q1 = dual.delta1.den();
    const BiPoly& p2 = dual.delta2.num();
    const BiPoly& q2 = dual.delta2.den();
    // Multiply through by 2 d Ztilde DU Q, where Q = Q1 Q2 unless the two
    // dual values already share a denominator.
    bool shared = q1 == q2;
    BiPoly q = shared ? q1 : q1 * q2;
    BiPoly q1_cofactor = shared ? BiPoly(1) : q2;
    BiPoly q2_cofactor = shared ? BiPoly(1) : q1;
    BiPoly du_q = du * q;
    f_c_ = du_q * BiPoly(d);
    f_z_ = nu * q * BiPoly(-2L * d);
    f_g1_ = p1 * du * q1_cofactor * BiPoly(-2);
    f_g2_ = p2 * du * q2_cofactor * BiPoly(-2);
    f_den_ = du_q * BiPoly(2L * d);
}

Slack MinSlack::operator()(const CoeffRecord& rec) const
{
    Slack s;
    s.num = linear_combination({&f_c_, &f_z_, &f_g1_, &f_g2_},
                               {&rec.n_c, &rec.ztilde, &rec.n_gamma.at(s1_), &rec.n_gamma.at(s2_)});
    s.den = f_den_ * rec.ztilde;
    return s;
}

Slack max_slack(const CoeffRecord& k5, const CoeffRecord& rec)
{
    Slack s;
    BiPoly minus_z5 = -k5.ztilde;
    s.num = linear_combination({&k5.n_c, &minus_z5}, {&rec.ztilde, &rec.n_c});
    s.den = k5.ztilde * rec.ztilde * BiPoly(2);
    return s;
}

namespace {

bool certifies(const SignReport& report, const BiPoly& p)
{
    return !p.is_zero() && report.all_nonnegative && report.strictly_positive_at_r0;
}

}  // namespace

ViewVerdict classify_slack(int view_id, const Slack& slack, const MagicFactor& magic, bool on_support)
{
    ViewVerdict v;
    v.view_id = view_id;
    if (on_support) {
        if (slack.num.is_zero()) {
            v.status = VerdictStatus::ZeroOnSupport;
            v.method = "exact";
        }
        else {
            v.status = VerdictStatus::Fail;
            v.witness = slack.num.terms().front().mono;
            v.detail = "slack is not identically zero on a support view";
        }
        return v;
    }
    if (slack.num.is_zero()) {
        v.status = VerdictStatus::Fail;
        v.detail = "slack vanishes identically off the support";
        return v;
    }
    auto raw = coeff_sign_report(slack.num);
    if (certifies(raw, slack.num)) {
        v.status = VerdictStatus::StrictlyPositive;
        v.method = "raw";
        return v;
    }
    if (auto quotient = exact_divide(magic.m * slack.num, slack.den)) {
        auto scaled = coeff_sign_report(*quotient);
        if (certifies(scaled, *quotient)) {
            v.status = VerdictStatus::StrictlyPositive;
            v.method = "magic";
            return v;
        }
    }
    v.status = VerdictStatus::Fail;
    if (!raw.all_nonnegative) {
        v.witness = raw.witness;
        v.detail = "negative coefficient in slack numerator";
    }
    else {
        v.detail = "slack numerator vanishes at r = 0";
    }
    return v;
}

namespace {

void tally(Certificate& cert)
{
    cert.zeros = cert.positives = cert.failures = 0;
    for (const auto& v : cert.verdicts) {
        if (v.status == VerdictStatus::ZeroOnSupport)
            ++cert.zeros;
        else if (v.status == VerdictStatus::StrictlyPositive)
            ++cert.positives;
        else
            ++cert.failures;
    }
    cert.pass = cert.dual_consistent && cert.failures == 0 &&
                cert.zeros == static_cast<int>(cert.support.size()) &&
                cert.zeros + cert.positives == static_cast<int>(cert.verdicts.size());
}

}  // namespace

Certificate verify_min(const Catalogue& catalogue, const std::vector<CoeffRecord>& records, const DualSolution& dual,
                       const MagicFactor& magic, int jobs)
{
    if (dual.spec.kind == CaseKind::MaxQGe5 || magic.kind != dual.spec.kind)
        throw std::invalid_argument("verify_min: case and magic factor disagree");
    Certificate cert;
    cert.spec = dual.spec;
    cert.catalogue_hash = catalogue.hash;
    cert.constraints = {"1", partition_label(dual.constraints[0]), partition_label(dual.constraints[1])};
    cert.support = dual.support;
    cert.magic_expression = magic.expression;
    cert.dual_consistent = dual.ok();
    cert.dual.emplace_back("Delta_1", dual.u_star);
    if (!dual.ok()) {
        tally(cert);
        return cert;
    }
    cert.dual.emplace_back("Delta_" + partition_label(dual.constraints[0]), dual.delta1);
    cert.dual.emplace_back("Delta_" + partition_label(dual.constraints[1]), dual.delta2);

    MinSlack slack(dual, catalogue.d);
    cert.verdicts.resize(records.size());
    parallel_for(records.size(), jobs, [&](std::size_t i) {
        bool on_support = std::find(dual.support.begin(), dual.support.end(), static_cast<int>(i)) != dual.support.end();
        cert.verdicts[i] = classify_slack(static_cast<int>(i), slack(records[i]), magic, on_support);
    });
    tally(cert);
    return cert;
}

Certificate verify_max(const Catalogue& catalogue, const std::vector<CoeffRecord>& records, const MagicFactor& magic,
                       int jobs)
{
    if (magic.kind != CaseKind::MaxQGe5)
        throw std::invalid_argument("verify_max needs the maximisation magic factor");
    Certificate cert;
    cert.spec = CaseSpec::max_qge5();
    cert.catalogue_hash = catalogue.hash;
    cert.constraints = {"1"};
    int k5 = k5_view(catalogue);
    cert.support = {k5};
    cert.magic_expression = magic.expression;
    cert.dual_consistent = true;
    cert.dual.emplace_back("Delta_1", records.at(k5).c());

    cert.verdicts.resize(records.size());
    parallel_for(records.size(), jobs, [&](std::size_t i) {
        cert.verdicts[i] = classify_slack(static_cast<int>(i), max_slack(records[k5], records[i]), magic,
                                          static_cast<int>(i) == k5);
    });
    tally(cert);
    return cert;
}

FeasibilityReport check_k44_feasibility(const Catalogue& catalogue, const std::vector<CoeffRecord>& records,
                                        const ReferenceModel& ref)
{
    auto pstar = k44_distribution(catalogue, ref);
    FeasibilityReport report;
    RatFn total(0);
    for (const auto& [id, p] : pstar)
        total += p;
    report.rows.push_back({"probability", ratfn_eq(total, RatFn(1))});

    auto parts = partitions_of(catalogue.d);
    for (std::size_t s = 0; s < parts.size(); ++s) {
        RatFn row(0);
        for (const auto& [id, p] : pstar)
            row += p * records.at(id).gamma(s);
        report.rows.push_back({"gamma " + partition_label(parts[s]), row.is_zero()});
    }

    RatFn objective(0);
    for (const auto& [id, p] : pstar)
        objective += p * records.at(id).c();
    report.rows.push_back({"objective", ratfn_eq(objective, ref.u)});

    report.ok = std::all_of(report.rows.begin(), report.rows.end(), [](const auto& r) { return r.holds; });
    return report;
}

}  // namespace lvcert
