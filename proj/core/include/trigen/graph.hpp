#pragma once

#include <array>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace trigen {

/// Simple undirected graph on dense vertex ids 0..n-1, n <= 62 (graph6 short
/// form). Adjacency is kept as one bitmask per vertex. Graphs are treated as
/// immutable values once built: all operations return new graphs, so sharing
/// across threads is safe.
using VertexSet = std::uint64_t;
using Edge = std::pair<int, int>; // normalized: first < second

constexpr int kMaxVertices = 62;

Edge make_edge(int u, int v);
VertexSet make_set(std::initializer_list<int> vs);
std::vector<int> set_members(VertexSet s);

constexpr VertexSet vbit(int v) { return VertexSet{1} << v; }

class Graph {
  public:
    Graph() = default;
    explicit Graph(int n);
    Graph(int n, std::span<const Edge> edges);
    Graph(int n, std::initializer_list<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return m_; }
    bool has_edge(int u, int v) const;
    int degree(int v) const;
    VertexSet neighbors(int v) const;
    VertexSet vertex_mask() const;
    std::vector<Edge> edges() const;

    int min_degree() const;
    int max_degree() const;
    bool is_connected() const;
    /// True iff the subgraph induced by `keep` is connected (vacuously true
    /// for the empty set and singletons).
    bool connected_within(VertexSet keep) const;
    /// Vertices reachable from `start` without leaving `keep`.
    VertexSet reach(int start, VertexSet keep) const;

    // Construction-time mutators. Treat the graph as frozen once it is
    // handed out; the operation layer below always copies first.
    void link(int u, int v);
    void unlink(int u, int v);

    friend bool operator==(const Graph&, const Graph&) = default;

  private:
    int n_ = 0;
    int m_ = 0;
    std::vector<std::uint64_t> adj_;
};

/// A vertex split: `target` is replaced by two adjacent vertices, one taking
/// the neighbors in side_one, the other those in side_two. Both sides need
/// at least two neighbors so the new vertices end with degree >= 3.
struct SplitSpec {
    int target = 0;
    VertexSet side_one = 0;
    VertexSet side_two = 0;

    friend bool operator==(const SplitSpec&, const SplitSpec&) = default;
};

using Triad = std::array<Edge, 3>;

Graph add_edge(const Graph& g, int u, int w);
Graph delete_edge(const Graph& g, Edge e);
Graph contract_edge(const Graph& g, Edge e);
Graph vertex_split(const Graph& g, const SplitSpec& spec);
std::vector<SplitSpec> enumerate_splits(const Graph& g);
std::vector<Triad> triads(const Graph& g);
int rank(const Graph& g);

} // namespace trigen
