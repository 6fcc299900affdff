#pragma once

#include <lvcert/graph/small_graph.hpp>

#include <string>
#include <string_view>

namespace lvcert {

// Text form:
//   n <count>
//   <role string, one of V N B C P per vertex>
//   u v            (one line per edge, u < v, sorted)
std::string graph_to_text(const SmallGraph& g);
SmallGraph parse_graph(std::string_view text);

}  // namespace lvcert
