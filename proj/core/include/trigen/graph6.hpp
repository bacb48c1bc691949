#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "trigen/graph.hpp"

namespace trigen {

/// graph6 short form: byte n+63, then the upper-triangle adjacency bits in
/// column order (x01, x02, x12, x03, ...), zero-padded to a multiple of 6,
/// each 6-bit group offset by 63. K4 encodes to "C~".
std::string graph6_encode(const Graph& g);
Graph graph6_decode(std::string_view line);

std::vector<Graph> read_graph6(std::istream& in);
void write_graph6(std::ostream& out, const std::vector<Graph>& graphs);

} // namespace trigen
