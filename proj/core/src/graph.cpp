#include "trigen/graph.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

#include "trigen/errors.hpp"

namespace trigen {

Edge make_edge(int u, int v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

VertexSet make_set(std::initializer_list<int> vs) {
    VertexSet s = 0;
    for (int v : vs) s |= vbit(v);
    return s;
}

std::vector<int> set_members(VertexSet s) {
    std::vector<int> out;
    while (s) {
        int v = std::countr_zero(s);
        out.push_back(v);
        s &= s - 1;
    }
    return out;
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n), 0) {
    if (n < 0 || n > kMaxVertices)
        throw BadParameterError("vertex count out of range: " + std::to_string(n));
}

Graph::Graph(int n, std::span<const Edge> edges) : Graph(n) {
    for (const Edge& e : edges) link(e.first, e.second);
}

Graph::Graph(int n, std::initializer_list<Edge> edges)
    : Graph(n, std::span<const Edge>(edges.begin(), edges.size())) {}

bool Graph::has_edge(int u, int v) const {
    return u >= 0 && u < n_ && v >= 0 && v < n_ && (adj_[u] & vbit(v)) != 0;
}

int Graph::degree(int v) const {
    return std::popcount(adj_[v]);
}

VertexSet Graph::neighbors(int v) const {
    return adj_[v];
}

VertexSet Graph::vertex_mask() const {
    return n_ == 0 ? 0 : (~VertexSet{0} >> (64 - n_));
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (int u = 0; u < n_; ++u) {
        VertexSet higher = adj_[u] >> (u + 1) << (u + 1);
        while (higher) {
            int v = std::countr_zero(higher);
            out.emplace_back(u, v);
            higher &= higher - 1;
        }
    }
    return out;
}

int Graph::min_degree() const {
    int d = kMaxVertices + 1;
    for (int v = 0; v < n_; ++v) d = std::min(d, degree(v));
    return n_ == 0 ? 0 : d;
}

int Graph::max_degree() const {
    int d = 0;
    for (int v = 0; v < n_; ++v) d = std::max(d, degree(v));
    return d;
}

VertexSet Graph::reach(int start, VertexSet keep) const {
    VertexSet seen = vbit(start) & keep;
    VertexSet frontier = seen;
    while (frontier) {
        VertexSet next = 0;
        while (frontier) {
            int v = std::countr_zero(frontier);
            frontier &= frontier - 1;
            next |= adj_[v] & keep & ~seen;
        }
        seen |= next;
        frontier = next;
    }
    return seen;
}

bool Graph::connected_within(VertexSet keep) const {
    if (keep == 0) return true;
    int start = std::countr_zero(keep);
    return reach(start, keep) == keep;
}

bool Graph::is_connected() const {
    return connected_within(vertex_mask());
}

void Graph::link(int u, int v) {
    assert(u >= 0 && u < n_ && v >= 0 && v < n_ && u != v);
    assert(!has_edge(u, v));
    adj_[u] |= vbit(v);
    adj_[v] |= vbit(u);
    ++m_;
}

void Graph::unlink(int u, int v) {
    assert(has_edge(u, v));
    adj_[u] &= ~vbit(v);
    adj_[v] &= ~vbit(u);
    --m_;
}

Graph add_edge(const Graph& g, int u, int w) {
    if (u < 0 || u >= g.vertex_count() || w < 0 || w >= g.vertex_count())
        throw BadParameterError("add_edge: vertex out of range");
    if (u == w) throw SelfLoopError("add_edge: endpoints coincide");
    if (g.has_edge(u, w)) throw AdjacentPairError("add_edge: vertices already adjacent");
    Graph out = g;
    out.link(u, w);
    return out;
}

namespace {

// Keep only the vertices in `keep`, renumbered densely in increasing order.
Graph induced(const Graph& g, VertexSet keep) {
    std::vector<int> newid(static_cast<std::size_t>(g.vertex_count()), -1);
    int next = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (keep & vbit(v)) newid[v] = next++;
    Graph out(next);
    for (const Edge& e : g.edges())
        if ((keep & vbit(e.first)) && (keep & vbit(e.second)))
            out.link(newid[e.first], newid[e.second]);
    return out;
}

} // namespace

Graph delete_edge(const Graph& g, Edge e) {
    e = make_edge(e.first, e.second);
    if (!g.has_edge(e.first, e.second)) throw MissingEdgeError("delete_edge: no such edge");
    Graph out = g;
    out.unlink(e.first, e.second);
    VertexSet keep = out.vertex_mask();
    for (int v = 0; v < out.vertex_count(); ++v)
        if (out.degree(v) == 0) keep &= ~vbit(v);
    if (keep != out.vertex_mask()) out = induced(out, keep);
    return out;
}

Graph contract_edge(const Graph& g, Edge e) {
    e = make_edge(e.first, e.second);
    if (!g.has_edge(e.first, e.second)) throw MissingEdgeError("contract_edge: no such edge");
    int u = e.first, v = e.second;
    // Merge v into u, drop the loop, merge parallels; renumber densely.
    int n = g.vertex_count();
    std::vector<int> newid(static_cast<std::size_t>(n));
    int next = 0;
    for (int w = 0; w < n; ++w) newid[w] = (w == v) ? -1 : next++;
    Graph out(n - 1);
    for (const Edge& ed : g.edges()) {
        int a = ed.first == v ? u : ed.first;
        int b = ed.second == v ? u : ed.second;
        if (a == b) continue;
        int na = newid[a], nb = newid[b];
        if (na > nb) std::swap(na, nb);
        if (!out.has_edge(na, nb)) out.link(na, nb);
    }
    return out;
}

Graph vertex_split(const Graph& g, const SplitSpec& spec) {
    int v = spec.target;
    if (v < 0 || v >= g.vertex_count())
        throw BadParameterError("vertex_split: target out of range");
    VertexSet nb = g.neighbors(v);
    if (std::popcount(nb) < 4)
        throw DegreeTooLowError("vertex_split: target degree below 4");
    if ((spec.side_one | spec.side_two) != nb || (spec.side_one & spec.side_two) != 0)
        throw BadPartitionError("vertex_split: sides do not partition the neighborhood");
    if (std::popcount(spec.side_one) < 2 || std::popcount(spec.side_two) < 2)
        throw BadPartitionError("vertex_split: each side needs at least two neighbors");

    int n = g.vertex_count();
    Graph out(n + 1);
    for (const Edge& e : g.edges()) {
        if (e.first == v || e.second == v) continue;
        out.link(e.first, e.second);
    }
    for (int x : set_members(spec.side_one)) out.link(std::min(v, x), std::max(v, x));
    for (int x : set_members(spec.side_two)) out.link(x, n);
    out.link(v, n); // the new edge f
    return out;
}

std::vector<SplitSpec> enumerate_splits(const Graph& g) {
    std::vector<SplitSpec> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        VertexSet nb = g.neighbors(v);
        int d = std::popcount(nb);
        if (d < 4) continue;
        std::vector<int> nbrs = set_members(nb);
        int anchor = nbrs[0]; // pin the lowest neighbor to one side: unordered partitions once
        // enumerate subsets of the remaining d-1 neighbors joining the anchor
        int rest = d - 1;
        for (std::uint32_t pick = 0; pick < (1u << rest); ++pick) {
            VertexSet one = vbit(anchor);
            for (int i = 0; i < rest; ++i)
                if (pick & (1u << i)) one |= vbit(nbrs[static_cast<std::size_t>(i) + 1]);
            VertexSet two = nb & ~one;
            if (std::popcount(one) < 2 || std::popcount(two) < 2) continue;
            out.push_back(SplitSpec{v, one, two});
        }
    }
    return out;
}

std::vector<Triad> triads(const Graph& g) {
    std::vector<Triad> out;
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (g.degree(v) != 3) continue;
        std::vector<int> nbrs = set_members(g.neighbors(v));
        out.push_back(Triad{make_edge(v, nbrs[0]), make_edge(v, nbrs[1]), make_edge(v, nbrs[2])});
    }
    return out;
}

int rank(const Graph& g) {
    if (!g.is_connected()) throw DisconnectedError("rank: graph is not connected");
    return g.vertex_count() - 1;
}

} // namespace trigen
