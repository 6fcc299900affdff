#pragma once

#include <lvcert/localview/local_view.hpp>
#include <lvcert/potts/partition.hpp>

#include <cstdint>
#include <functional>
#include <vector>

namespace lvcert {

/// A colouring of the uncoloured vertices V_L = {0 (centre), 1..d} of a
/// local view. Colours 1..q_L are boundary colours, larger ones are extras.
struct LocalColouring {
    std::vector<int> colours;
    /// Monochromatic edges: centre, inner and neighbour-to-boundary.
    int m = 0;
    /// Monochromatic edges at the centre.
    int m_v = 0;
    /// Largest colour used, at least q_L.
    int ell = 0;
    Partition h_v;
    /// h_u[i] belongs to neighbour i + 1.
    std::vector<Partition> h_u;
};

/// Every map V_L -> [q_L + d + 1] whose extra colours form an initial
/// segment of q_L + 1, q_L + 2, ..., in lexicographic order of the colour
/// vector (centre first).
void enumerate_local_colourings(const LocalView& view, const std::function<void(const LocalColouring&)>& visit);

/// Evaluates m, m_v, ell and the H-partitions for a given colour vector.
LocalColouring describe_colouring(const LocalView& view, std::vector<int> colours);

/// Case-independent sums over colour classes. A class fixes which vertices
/// take which boundary colour and how the rest are grouped into extras, so
/// it stands for (q - q_L)_k colourings when it uses k extra colours.
/// Entries are indexed [m][k].
struct ColourTally {
    int d = 0;
    int m_max = 0;
    int q_l = 0;
    int max_extras = 0;
    std::vector<std::vector<std::int64_t>> count;
    /// Sum of m_v.
    std::vector<std::vector<std::int64_t>> centre;
    /// gamma[s][m][k]: sum of d*[H(v)=S_s] - #{u : H(u)=S_s}.
    std::vector<std::vector<std::vector<std::int64_t>>> gamma;
    std::uint64_t classes = 0;
};

ColourTally tally_colour_classes(const LocalView& view);

/// Size of the edge set of the local view: d^2 - e_inner.
int max_monochromatic(const LocalView& view);

}  // namespace lvcert
