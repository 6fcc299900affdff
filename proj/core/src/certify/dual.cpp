#include <lvcert/certify/dual.hpp>

#include <lvcert/potts/partition.hpp>

#include <stdexcept>

namespace lvcert {

std::array<Partition, 2> dual_constraints(CaseKind kind)
{
    switch (kind) {
    case CaseKind::MinQ5:
        return {Partition{4}, Partition{2, 1, 1}};
    case CaseKind::MinQGe6:
        return {Partition{2, 1, 1}, Partition{1, 1, 1, 1}};
    case CaseKind::MaxQGe5:
        break;
    }
    throw std::invalid_argument("the maximisation case has no consistency constraints");
}

DualSolution solve_dual(const CaseSpec& spec, const Catalogue& catalogue, const std::vector<CoeffRecord>& records,
                        const ReferenceModel& ref)
{
    if (catalogue.d != 4)
        throw std::invalid_argument("solve_dual requires the d = 4 catalogue");
    if (records.size() != catalogue.views.size())
        throw std::invalid_argument("solve_dual: one coefficient record per view required");
    DualSolution sol;
    sol.spec = spec;
    sol.constraints = dual_constraints(spec.kind);
    auto parts = partitions_of(catalogue.d);
    for (int i = 0; i < 2; ++i) {
        int s = partition_index(parts, sol.constraints[i]);
        if (s < 0)
            throw std::logic_error("constraint partition not found");
        sol.constraint_index[i] = static_cast<std::size_t>(s);
    }
    sol.support = k44_support_views(catalogue);
    sol.u_star = ref.u;

    std::array<LinearRow, 3> rows;
    for (int i = 0; i < 3; ++i) {
        const auto& rec = records[sol.support[i]];
        rows[i] = {rec.gamma(sol.constraint_index[0]), rec.gamma(sol.constraint_index[1]), rec.c() - ref.u};
    }
    auto result = solve_2x2(rows);
    sol.status = result.status;
    sol.delta1 = result.delta1;
    sol.delta2 = result.delta2;
    sol.pivot_rows = result.pivot_rows;
    return sol;
}

}  // namespace lvcert
