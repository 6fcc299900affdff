#pragma once

#include <lvcert/certify/dual.hpp>
#include <lvcert/certify/magic.hpp>

#include <optional>
#include <string>
#include <vector>

namespace lvcert {

enum class VerdictStatus { ZeroOnSupport, StrictlyPositive, Fail };

std::string status_name(VerdictStatus status);

struct ViewVerdict {
    int view_id = -1;
    VerdictStatus status = VerdictStatus::Fail;
    /// "raw" when the slack numerator itself has non-negative coefficients,
    /// "magic" when the quotient M * numerator / denominator does.
    std::string method;
    std::optional<Monomial> witness;
    std::string detail;
};

/// Slack of one view as numerator / denominator; the denominator is a
/// product of polynomials with non-negative coefficients.
struct Slack {
    BiPoly num;
    BiPoly den;
};

/// c_L - U* - delta1 gamma^S1_L - delta2 gamma^S2_L over a common denominator.
class MinSlack {
public:
    explicit MinSlack(const DualSolution& dual, int d = 4);
    Slack operator()(const CoeffRecord& rec) const;

private:
    std::size_t s1_, s2_;
    BiPoly f_c_, f_z_, f_g1_, f_g2_, f_den_;
};

/// c_{K5} - c_L over a common denominator.
Slack max_slack(const CoeffRecord& k5, const CoeffRecord& rec);

/// The acceptance ladder: raw numerator signs first, then the exact
/// quotient M * num / den. Non-support views need a nonzero certificate that
/// does not vanish at r = 0; support views need num == 0.
ViewVerdict classify_slack(int view_id, const Slack& slack, const MagicFactor& magic, bool on_support);

struct Certificate {
    CaseSpec spec;
    std::string catalogue_hash;
    std::vector<std::string> constraints;
    std::vector<int> support;
    std::string magic_expression;
    /// Named dual values in report order.
    std::vector<std::pair<std::string, RatFn>> dual;
    bool dual_consistent = false;
    std::vector<ViewVerdict> verdicts;

    int zeros = 0;
    int positives = 0;
    int failures = 0;
    bool pass = false;
};

Certificate verify_min(const Catalogue& catalogue, const std::vector<CoeffRecord>& records, const DualSolution& dual,
                       const MagicFactor& magic, int jobs = 1);

Certificate verify_max(const Catalogue& catalogue, const std::vector<CoeffRecord>& records, const MagicFactor& magic,
                       int jobs = 1);

struct FeasibilityRow {
    std::string name;
    bool holds = false;
};

struct FeasibilityReport {
    bool ok = false;
    std::vector<FeasibilityRow> rows;
};

/// Checks sum p* = 1, sum p* gamma^S = 0 for every S and sum p* c = U* as
/// identities of rational functions.
FeasibilityReport check_k44_feasibility(const Catalogue& catalogue, const std::vector<CoeffRecord>& records,
                                        const ReferenceModel& ref);

}  // namespace lvcert
