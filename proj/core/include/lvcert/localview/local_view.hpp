#pragma once

#include <lvcert/graph/small_graph.hpp>

#include <span>
#include <string>
#include <vector>

namespace lvcert {

class InvalidInner : public GraphError {
public:
    using GraphError::GraphError;
};

class NotRegular : public GraphError {
public:
    using GraphError::GraphError;
};

/// Canonical representative of a local view: the graph induced on the centre
/// (vertex 0) and its neighbours (1..d), plus for each neighbour the multiset
/// of colours seen on its external neighbours. Colours form the initial
/// segment 1..colour_count, numbered by first appearance.
struct LocalView {
    int d = 0;
    std::vector<VertexPair> inner_edges;
    /// mults[i] belongs to neighbour i + 1; sorted ascending.
    std::vector<std::vector<int>> mults;
    int colour_count = 0;
    /// Canonical simple-graph representation (centre, neighbours, pendant
    /// boundary vertices, auxiliary colour vertices).
    SmallGraph rep;

    int inner_degree(int u) const;
    bool inner_adjacent(int a, int b) const;
    int boundary_size() const;

    /// "1-2 3-4" (empty for no inner edges).
    std::string inner_text() const;
    /// "[1,1,2|1,3|...]".
    std::string mults_text() const;

    friend bool operator==(const LocalView& a, const LocalView& b) { return a.rep == b.rep; }
};

/// Skeleton of the representation: centre 0 joined to neighbours 1..d, the
/// inner edges installed (inner vertex i is neighbour i + 1), pendant
/// boundary vertices topping every neighbour up to degree d, and |B|
/// isolated colour vertices. Throws InvalidInner if an inner degree exceeds
/// d - 1.
SmallGraph build_simple_representation(int d, const SmallGraph& inner);

/// Representation with boundary colours given per neighbour (colours are
/// arbitrary positive integers; only equality matters). Not canonicalised.
SmallGraph representation_with_colours(int d, std::span<const VertexPair> inner_edges,
                                       const std::vector<std::vector<int>>& colours);

/// Canonicalises a fully coloured representation and reads off the view.
LocalView local_view_from_representation(const SmallGraph& rep);

/// Builds the canonical view from inner edges and per-neighbour colour lists.
LocalView make_local_view(int d, std::span<const VertexPair> inner_edges,
                          const std::vector<std::vector<int>>& colours);

/// The local view observed at `v` in a d-regular graph `g`, where
/// colouring[w] gives the colour of every vertex w at distance two from v.
/// Throws NotRegular when g is not regular.
LocalView local_view_of(const SmallGraph& g, int v, std::span<const int> colouring);

}  // namespace lvcert
