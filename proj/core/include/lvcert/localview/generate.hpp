#pragma once

#include <lvcert/localview/local_view.hpp>

#include <functional>
#include <string>
#include <vector>

namespace lvcert {

/// One labelled representative per isomorphism class of graphs on d
/// vertices, produced by canonical augmentation from the empty graph.
std::vector<SmallGraph> generate_inner_graphs(int d);

/// One representative per equivalence class of total boundary colourings of
/// `skeleton` (as built by build_simple_representation). Colourings are
/// grown one boundary-to-colour edge at a time.
std::vector<SmallGraph> generate_colourings(const SmallGraph& skeleton);

struct Catalogue {
    int d = 0;
    /// Sorted by (inner edge count, canonical representation text).
    std::vector<LocalView> views;
    /// sha256 of the serialised record body.
    std::string hash;

    /// Index of the view whose canonical representation equals view.rep, or -1.
    int find(const LocalView& view) const;
};

/// Sorts views into catalogue order and computes the hash.
Catalogue assemble_catalogue(int d, std::vector<LocalView> views);

/// Full catalogue for 2 <= d <= 5. Inner graphs are processed on up to
/// `jobs` threads; the result does not depend on scheduling.
Catalogue generate_catalogue(int d, int jobs = 1,
                             const std::function<void(const std::string&)>& progress = {});

}  // namespace lvcert
