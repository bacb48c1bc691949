#pragma once

#include <vector>

#include "trigen/graph.hpp"

namespace trigen {

/// True iff n >= 4 and no removal of at most two vertices disconnects the
/// graph (complete graphs on >= 4 vertices count). Exhaustive over all
/// single vertices and vertex pairs; trivial at enumeration sizes.
bool is_three_connected(const Graph& g);

/// Edges e with g\e still 3-connected. Throws NotThreeConnectedError when g
/// itself is not 3-connected.
std::vector<Edge> deletable_edges(const Graph& g);

bool is_minimally_three_connected(const Graph& g);

} // namespace trigen
