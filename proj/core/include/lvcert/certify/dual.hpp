#pragma once

#include <lvcert/algebra/linear_solve.hpp>
#include <lvcert/certify/reference.hpp>

#include <array>
#include <vector>

namespace lvcert {

/// The two partitions whose consistency rows carry nonzero dual variables:
/// 4 and 2+1+1 for q = 5, 2+1+1 and 1+1+1+1 for q >= 6.
std::array<Partition, 2> dual_constraints(CaseKind kind);

struct DualSolution {
    CaseSpec spec;
    std::array<Partition, 2> constraints;
    /// Positions of the constraints in partitions_of(d).
    std::array<std::size_t, 2> constraint_index{};
    std::vector<int> support;
    RatFn u_star;
    SolveStatus status = SolveStatus::Singular;
    RatFn delta1;
    RatFn delta2;
    std::array<int, 2> pivot_rows{};

    bool ok() const { return status == SolveStatus::Solved; }
};

/// records[i] must belong to catalogue view i.
DualSolution solve_dual(const CaseSpec& spec, const Catalogue& catalogue, const std::vector<CoeffRecord>& records,
                        const ReferenceModel& ref);

}  // namespace lvcert
