#pragma once

#include <lvcert/algebra/bipoly.hpp>

#include <vector>

namespace lvcert {

enum class LpStatus { Optimal, Infeasible, Unbounded };
enum class LpSense { Minimise, Maximise };

struct LpResult {
    LpStatus status = LpStatus::Infeasible;
    Rational value;
    std::vector<Rational> x;
    int pivots = 0;
};

/// Optimises c.x subject to A x = b, x >= 0 over exact rationals with the
/// two-phase tableau method and Bland's rule. Redundant rows are detected
/// after phase one and dropped.
LpResult solve_lp(const std::vector<std::vector<Rational>>& a, const std::vector<Rational>& b,
                  const std::vector<Rational>& c, LpSense sense);

}  // namespace lvcert
