#pragma once

#include <lvcert/algebra/ratfn.hpp>

#include <array>

namespace lvcert {

/// One equation delta1 * g1 + delta2 * g2 = rhs.
struct LinearRow {
    RatFn g1;
    RatFn g2;
    RatFn rhs;
};

enum class SolveStatus { Solved, Inconsistent, Singular };

struct Solve2x2Result {
    SolveStatus status = SolveStatus::Singular;
    RatFn delta1;
    RatFn delta2;
    /// Rows used for Cramer's rule; the remaining row was checked.
    std::array<int, 2> pivot_rows{0, 1};
};

/// Solves an overdetermined 3x2 system: Cramer's rule on the first
/// nonsingular pair of rows, then an exact identity check on the third.
Solve2x2Result solve_2x2(const std::array<LinearRow, 3>& rows);

}  // namespace lvcert
