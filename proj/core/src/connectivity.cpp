#include "trigen/connectivity.hpp"

#include "trigen/errors.hpp"

namespace trigen {

bool is_three_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n < 4) return false;
    VertexSet all = g.vertex_mask();
    if (!g.connected_within(all)) return false;
    for (int a = 0; a < n; ++a)
        if (!g.connected_within(all & ~vbit(a))) return false;
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (!g.connected_within(all & ~vbit(a) & ~vbit(b))) return false;
    return true;
}

std::vector<Edge> deletable_edges(const Graph& g) {
    if (!is_three_connected(g))
        throw NotThreeConnectedError("deletable_edges: input is not 3-connected");
    std::vector<Edge> out;
    for (const Edge& e : g.edges())
        if (is_three_connected(delete_edge(g, e))) out.push_back(e);
    return out;
}

bool is_minimally_three_connected(const Graph& g) {
    if (!is_three_connected(g))
        throw NotThreeConnectedError("is_minimally_three_connected: input is not 3-connected");
    for (const Edge& e : g.edges())
        if (is_three_connected(delete_edge(g, e))) return false;
    return true;
}

} // namespace trigen
