#pragma once

#include <string>

#include "hhfree/graph.hpp"

namespace hhfree {

// McKay's graph6 encoding: size header (63+n for n<63, '~'-prefixed 18-bit
// size otherwise), then the upper adjacency triangle column by column, six
// bits per printable byte offset by 63.
std::string to_graph6(const Graph& g);
Graph from_graph6(const std::string& s);

// Plain text: first line "n m", then one "u v" line per edge.
std::string to_edge_list(const Graph& g);
Graph from_edge_list(const std::string& text);

}  // namespace hhfree
