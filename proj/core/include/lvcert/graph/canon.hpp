#pragma once

#include <lvcert/graph/small_graph.hpp>

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <vector>

namespace lvcert {

/// Role-preserving automorphism group, held as a generating set.
class AutGroup {
public:
    AutGroup() = default;
    AutGroup(int n, std::vector<Permutation> generators, mpz_class order);

    int degree() const { return n_; }
    const std::vector<Permutation>& generators() const { return generators_; }
    const mpz_class& order() const { return order_; }

    /// orbit_id[v] is the least vertex in the orbit of v.
    std::vector<int> vertex_orbits() const;

    /// Orbit of an unordered pair, sorted.
    std::vector<VertexPair> pair_orbit(VertexPair e) const;

    /// Explicit element list (identity first). Throws GraphError if the group
    /// order exceeds `limit`.
    std::vector<Permutation> elements(std::size_t limit = 100000) const;

private:
    int n_ = 0;
    std::vector<Permutation> generators_;
    mpz_class order_ = 1;
};

struct CanonicalLabelling {
    /// order[i] is the input vertex placed at canonical position i.
    std::vector<int> order;
    SmallGraph canonical;
    AutGroup automorphisms;
};

/// Individualisation-refinement search with the role classes as the initial
/// ordered partition. The canonical form is the leaf whose adjacency sequence
/// is lexicographically greatest; automorphisms discovered along the way
/// prune the search and generate the full role-preserving group.
CanonicalLabelling canonical_labelling(const SmallGraph& g);

SmallGraph canonical_form(const SmallGraph& g);
AutGroup aut_group(const SmallGraph& g);

/// Coarsest equitable refinement of `cells` (ordered vertex sets), exposed
/// for tests.
std::vector<VertexSet> equitable_refinement(const SmallGraph& g, std::vector<VertexSet> cells);

/// One item per orbit of `items` under the group, each the lexicographic
/// minimum of its orbit, in increasing order.
std::vector<VertexPair> orbit_representatives(const AutGroup& group, std::span<const VertexPair> items);
std::vector<VertexPair> orbit_representatives(const SmallGraph& g, std::span<const VertexPair> items);

/// Lexicographically last edge of the canonical form, mapped back into the
/// labelling of the input graph.
VertexPair canonical_last_edge(const CanonicalLabelling& labelling);

/// True iff `e` lies in the automorphism orbit of the canonical last edge of y.
bool is_canonical_augmentation(const SmallGraph& y, VertexPair e);
bool is_canonical_augmentation(const CanonicalLabelling& labelling, VertexPair e);

}  // namespace lvcert
