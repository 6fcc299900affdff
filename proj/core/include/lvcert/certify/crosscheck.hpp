#pragma once

#include <lvcert/certify/reference.hpp>
#include <lvcert/certify/simplex.hpp>

#include <vector>

namespace lvcert {

struct CrosscheckResult {
    CaseSpec spec;
    LpSense sense = LpSense::Minimise;
    Rational t0;
    Rational r0;
    LpStatus status = LpStatus::Infeasible;
    Rational optimum;
    /// U*_{K44} for minimisation, c_{K5} for maximisation, evaluated exactly.
    Rational reference;
    /// Views with positive weight in the optimal basic solution.
    std::vector<int> support;
    int pivots = 0;

    bool agrees() const { return status == LpStatus::Optimal && optimum == reference; }
};

/// Evaluates the LP data at (t0, r0) and solves the primal program over all
/// catalogue views: one probability row and one consistency row per
/// partition of d.
CrosscheckResult crosscheck_lp(const Catalogue& catalogue, const std::vector<CoeffRecord>& records,
                               const CaseSpec& spec, const Rational& t0, const Rational& r0, LpSense sense);

}  // namespace lvcert
