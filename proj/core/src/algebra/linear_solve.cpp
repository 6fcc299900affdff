#include <lvcert/algebra/linear_solve.hpp>

namespace lvcert {

Solve2x2Result solve_2x2(const std::array<LinearRow, 3>& rows)
{
    static constexpr std::array<std::array<int, 3>, 3> orders{{{0, 1, 2}, {0, 2, 1}, {1, 2, 0}}};

    Solve2x2Result result;
    for (const auto& [i, j, k] : orders) {
        const auto& a = rows[i];
        const auto& b = rows[j];
        RatFn det = a.g1 * b.g2 - b.g1 * a.g2;
        if (det.is_zero())
            continue;
        result.delta1 = (a.rhs * b.g2 - b.rhs * a.g2) / det;
        result.delta2 = (a.g1 * b.rhs - b.g1 * a.rhs) / det;
        result.pivot_rows = {i, j};
        const auto& c = rows[k];
        bool consistent = ratfn_eq(result.delta1 * c.g1 + result.delta2 * c.g2, c.rhs);
        result.status = consistent ? SolveStatus::Solved : SolveStatus::Inconsistent;
        return result;
    }
    result.status = SolveStatus::Singular;
    return result;
}

}  // namespace lvcert
