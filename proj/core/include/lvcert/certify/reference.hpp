#pragma once

#include <lvcert/algebra/ratfn.hpp>
#include <lvcert/localview/generate.hpp>
#include <lvcert/potts/coefficients.hpp>

#include <map>
#include <stdexcept>
#include <vector>

namespace lvcert {

enum class ReferenceGraph { K44, K5 };

class SupportNotFound : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ReferenceModel {
    ReferenceGraph graph = ReferenceGraph::K44;
    CaseSpec spec;
    /// (1 + t)^|E| Z_G.
    BiPoly ztilde;
    /// Internal energy per vertex.
    RatFn u;
    /// K44 only: probability that the three vertices at distance two from a
    /// fixed vertex carry colour pattern S, keyed by partition of 3.
    std::map<Partition, RatFn> pstar_by_partition;
};

SmallGraph reference_graph(ReferenceGraph graph);

/// Exact Potts quantities of K_{4,4} or K_5 by summing over colour classes
/// of the whole graph weighted by falling factorials of q.
ReferenceModel reference_model(ReferenceGraph graph, const CaseSpec& spec);

/// The view with empty inner graph whose every neighbour sees the colour
/// pattern S (a partition of d - 1).
LocalView bipartite_view(int d, const Partition& pattern);
/// The boundaryless view whose inner graph is complete.
LocalView complete_view(int d);

/// Catalogue indices of the three K_{4,4} views, ordered as partitions_of(3)
/// (3, 2+1, 1+1+1). Throws SupportNotFound if one is missing.
std::vector<int> k44_support_views(const Catalogue& catalogue);
int k5_view(const Catalogue& catalogue);

/// p* as a map view id -> probability.
std::map<int, RatFn> k44_distribution(const Catalogue& catalogue, const ReferenceModel& ref);

}  // namespace lvcert
