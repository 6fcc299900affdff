#pragma once

#include <lvcert/algebra/bipoly.hpp>
#include <lvcert/localview/local_view.hpp>

#include <functional>
#include <vector>

namespace lvcert::oracle {

// Brute-force references used by tests and selfcheck. None of these call the
// canonical labeller, the colour-class tally or the generator.

/// Read-Faradzev canonical form: the role-preserving relabelling whose
/// adjacency sequence over lexicographically ordered pairs is greatest.
/// Exhaustive over role-preserving permutations, so only for small graphs.
SmallGraph rf_canonical_form(const SmallGraph& g);

/// Every role-preserving permutation of the vertex set.
std::vector<Permutation> role_preserving_permutations(const SmallGraph& g);

/// Number of role-preserving automorphisms, by exhaustion.
long brute_aut_order(const SmallGraph& g);

/// Orbits of the given pairs under all automorphisms found by exhaustion.
std::vector<std::vector<VertexPair>> brute_pair_orbits(const SmallGraph& g, const std::vector<VertexPair>& items);

/// True iff some automorphism maps e onto `last`.
bool brute_in_same_orbit(const SmallGraph& g, VertexPair e, VertexPair last);

using CanonFn = std::function<SmallGraph(const SmallGraph&)>;

/// Canonical forms of all graphs on d vertices, deduplicated with `canon`,
/// found by running over all 2^(d choose 2) labelled graphs.
std::vector<SmallGraph> brute_inner_graphs(int d, const CanonFn& canon);

/// Canonical representations of every inner graph on d vertices with every
/// colouring of its boundary, deduplicated with `canon` and sorted.
std::vector<SmallGraph> brute_catalogue_forms(int d, const CanonFn& canon);

/// Sums over all q^(d+1) colourings of V_L with boundary colour c read as
/// colour c of [q] (requires q >= q_L), at e^beta = 1 + t0.
struct DirectCoefficients {
    /// (1 + t0)^(d^2 - e_inner) Z_L.
    Rational ztilde;
    Rational c;
    /// Indexed like partitions_of(d).
    std::vector<Rational> gamma;
};

DirectCoefficients direct_coefficients(const LocalView& view, int q, const Rational& t0);

/// Internal energy per vertex of a graph by summing over all q^n colourings.
Rational direct_internal_energy(const SmallGraph& g, int q, const Rational& t0);

}  // namespace lvcert::oracle
