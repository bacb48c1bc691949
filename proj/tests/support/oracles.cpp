#include "support/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "trigen/families.hpp"

namespace trigen::testing {

namespace {

// Max-flow (augmenting BFS) on the vertex-split network, capped at 3 units.
int vertex_disjoint_paths(const Graph& g, int s, int t) {
    int n = g.vertex_count();
    int nodes = 2 * n; // v_in = 2v, v_out = 2v+1
    std::vector<std::vector<int>> cap(nodes, std::vector<int>(nodes, 0));
    for (int v = 0; v < n; ++v) cap[2 * v][2 * v + 1] = (v == s || v == t) ? 3 : 1;
    for (const Edge& e : g.edges()) {
        cap[2 * e.first + 1][2 * e.second] = 1;
        cap[2 * e.second + 1][2 * e.first] = 1;
    }
    int source = 2 * s + 1, sink = 2 * t;
    int flow = 0;
    while (flow < 3) {
        std::vector<int> prev(nodes, -1);
        std::vector<int> queue{source};
        prev[source] = source;
        for (std::size_t head = 0; head < queue.size() && prev[sink] == -1; ++head) {
            int x = queue[head];
            for (int y = 0; y < nodes; ++y)
                if (prev[y] == -1 && cap[x][y] > 0) {
                    prev[y] = x;
                    queue.push_back(y);
                }
        }
        if (prev[sink] == -1) break;
        for (int y = sink; y != source; y = prev[y]) {
            cap[prev[y]][y] -= 1;
            cap[y][prev[y]] += 1;
        }
        ++flow;
    }
    return flow;
}

} // namespace

bool flow_three_connected(const Graph& g) {
    int n = g.vertex_count();
    if (n < 4) return false;
    if (!g.is_connected()) return false;
    if (g.min_degree() < 3) return false;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) {
            if (g.has_edge(u, v)) continue;
            if (vertex_disjoint_paths(g, u, v) < 3) return false;
        }
    return true;
}

bool brute_force_isomorphic(const Graph& a, const Graph& b) {
    int n = a.vertex_count();
    if (n != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    do {
        bool ok = true;
        for (int u = 0; u < n && ok; ++u)
            for (int v = u + 1; v < n && ok; ++v)
                if (a.has_edge(u, v) != b.has_edge(perm[u], perm[v])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::string reference_graph6(const Graph& g) {
    int n = g.vertex_count();
    std::string bits;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits.push_back(g.has_edge(i, j) ? '1' : '0');
    while (bits.size() % 6 != 0) bits.push_back('0');
    std::string out(1, static_cast<char>(63 + n));
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int value = 0;
        for (int b = 0; b < 6; ++b) value = value * 2 + (bits[k + b] == '1' ? 1 : 0);
        out.push_back(static_cast<char>(63 + value));
    }
    return out;
}

int brute_count_splits(const Graph& g) {
    int count = 0;
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> nbrs = set_members(g.neighbors(v));
        int d = static_cast<int>(nbrs.size());
        if (d < 4) continue;
        // ordered subsets halved, both sides of size >= 2
        int ordered = 0;
        for (int pick = 0; pick < (1 << d); ++pick) {
            int size = 0;
            for (int i = 0; i < d; ++i)
                if (pick & (1 << i)) ++size;
            if (size >= 2 && d - size >= 2) ++ordered;
        }
        count += ordered / 2;
    }
    return count;
}

Graph permuted(const Graph& g, const std::vector<int>& new_label_of) {
    Graph out(g.vertex_count());
    for (const Edge& e : g.edges()) {
        int a = new_label_of[e.first], b = new_label_of[e.second];
        out.link(std::min(a, b), std::max(a, b));
    }
    return out;
}

Graph random_permutation(const Graph& g, std::mt19937& rng) {
    std::vector<int> perm(static_cast<std::size_t>(g.vertex_count()));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return permuted(g, perm);
}

Graph cycle(int n) {
    Graph g(n);
    for (int i = 0; i < n; ++i) g.link(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return g;
}

std::vector<NamedGraph> corpus() {
    std::vector<NamedGraph> out = three_connected_corpus();
    out.push_back({"C5", cycle(5)});
    out.push_back({"C6", cycle(6)});
    out.push_back({"K4_minus_e", delete_edge(complete(4), {0, 1})});
    Graph two_triangles(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    out.push_back({"two_triangles", two_triangles});
    return out;
}

std::vector<NamedGraph> three_connected_corpus() {
    Graph octahedron = complete(6);
    octahedron.unlink(0, 3);
    octahedron.unlink(1, 4);
    octahedron.unlink(2, 5);
    return {
        {"K4", complete(4)},
        {"K5", complete(5)},
        {"K5_minus_e", k5_minus_e()},
        {"K6", complete(6)},
        {"W4", wheel(4)},
        {"W5", wheel(5)},
        {"W6", wheel(6)},
        {"prism", prism()},
        {"octahedron", octahedron},
        {"K33", k3p_variant(3, 0)},
        {"K33_1", k3p_variant(3, 1)},
        {"K33_2", k3p_variant(3, 2)},
        {"K33_3", k3p_variant(3, 3)},
        {"K34", k3p_variant(4, 0)},
        {"petersen", petersen()},
    };
}

} // namespace trigen::testing
