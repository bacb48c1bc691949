#include "trigen/canonical.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>

#include "trigen/graph6.hpp"

namespace trigen {

namespace {

// Iterated degree/neighborhood refinement. Returns a color per vertex;
// color ids are ranks of invariant keys, so they are stable under
// relabeling.
std::vector<int> refine_colors(const Graph& g) {
    int n = g.vertex_count();
    std::vector<int> color(static_cast<std::size_t>(n), 0);
    {
        std::vector<int> degs, sorted;
        for (int v = 0; v < n; ++v) degs.push_back(g.degree(v));
        sorted = degs;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), degs[v]) -
                                        sorted.begin());
    }
    int ncolors = 0;
    for (;;) {
        std::vector<std::vector<int>> keys(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            std::vector<int>& key = keys[v];
            key.push_back(color[v]);
            for (int u : set_members(g.neighbors(v))) key.push_back(color[u]);
            std::sort(key.begin() + 1, key.end());
        }
        std::vector<std::vector<int>> sorted = keys;
        std::sort(sorted.begin(), sorted.end());
        sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(sorted.begin(), sorted.end(), keys[v]) -
                                        sorted.begin());
        int count = static_cast<int>(sorted.size());
        if (count == ncolors) break;
        ncolors = count;
    }
    return color;
}

// Vertices u, v are twins when swapping them is an automorphism:
// N(u)\{v} == N(v)\{u}. Grouped with union-find; any two members of a group
// are exchangeable by an automorphism fixing everything else.
struct TwinClasses {
    std::vector<int> parent;

    explicit TwinClasses(const Graph& g) : parent(static_cast<std::size_t>(g.vertex_count())) {
        std::iota(parent.begin(), parent.end(), 0);
        int n = g.vertex_count();
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                VertexSet nu = g.neighbors(u) & ~vbit(v);
                VertexSet nv = g.neighbors(v) & ~vbit(u);
                if (nu == nv) unite(u, v);
            }
    }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a != b) parent[std::max(a, b)] = std::min(a, b);
    }
};

// Backtracking over cell-respecting labelings for the lexicographically
// minimal adjacency bit string, read column by column in graph6 order.
// Column bits are packed MSB-first into a word so columns compare as
// integers.
struct Canonizer {
    const Graph& g;
    int n;
    std::vector<std::vector<int>> cells; // vertices per cell, sorted; cells in color order
    std::vector<int> cell_of_pos;
    std::vector<int> twin; // twin class representative per vertex

    std::vector<std::uint64_t> champ_cols;
    std::vector<int> champ_perm;
    bool have_champ = false;

    std::vector<std::uint64_t> cols;
    std::vector<int> perm;
    std::vector<char> used;       // by vertex
    std::vector<int> used_in_cell; // count per cell
    int tight = 0;                 // common prefix length of cols vs champ_cols

    explicit Canonizer(const Graph& graph) : g(graph), n(graph.vertex_count()) {
        std::vector<int> color = refine_colors(g);
        int ncolors = color.empty() ? 0 : *std::max_element(color.begin(), color.end()) + 1;
        cells.resize(static_cast<std::size_t>(ncolors));
        for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
        cell_of_pos.reserve(static_cast<std::size_t>(n));
        for (int c = 0; c < ncolors; ++c)
            for (std::size_t k = 0; k < cells[c].size(); ++k) cell_of_pos.push_back(c);
        TwinClasses tc(g);
        twin.resize(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) twin[v] = tc.find(v);

        cols.assign(static_cast<std::size_t>(n), 0);
        perm.assign(static_cast<std::size_t>(n), -1);
        used.assign(static_cast<std::size_t>(n), 0);
        used_in_cell.assign(static_cast<std::size_t>(ncolors), 0);
    }

    void run() {
        if (n == 0) {
            have_champ = true;
            return;
        }
        dfs(0);
    }

    void dfs(int pos) {
        if (pos == n) {
            champ_cols = cols;
            champ_perm = perm;
            have_champ = true;
            tight = n;
            return;
        }
        int cell = cell_of_pos[pos];
        std::uint64_t tried_twins = 0;
        for (int cand : cells[cell]) {
            if (used[cand]) continue;
            std::uint64_t tbit = VertexSet{1} << twin[cand];
            if (tried_twins & tbit) continue;
            tried_twins |= tbit;

            std::uint64_t col = 0;
            VertexSet nb = g.neighbors(cand);
            for (int i = 0; i < pos; ++i)
                col |= static_cast<std::uint64_t>((nb >> perm[i]) & 1) << (63 - i);

            if (have_champ && tight >= pos) {
                if (col > champ_cols[pos]) continue;
                tight = (col == champ_cols[pos]) ? pos + 1 : pos;
            }
            cols[pos] = col;
            perm[pos] = cand;
            used[cand] = 1;
            dfs(pos + 1);
            used[cand] = 0;
            if (tight > pos) tight = pos;
        }
    }
};

Graph relabel(const Graph& g, const std::vector<int>& perm_pos_to_vertex) {
    int n = g.vertex_count();
    std::vector<int> newlabel(static_cast<std::size_t>(n));
    for (int pos = 0; pos < n; ++pos) newlabel[perm_pos_to_vertex[pos]] = pos;
    Graph out(n);
    for (const Edge& e : g.edges()) {
        int a = newlabel[e.first], b = newlabel[e.second];
        out.link(std::min(a, b), std::max(a, b));
    }
    return out;
}

} // namespace

Graph canonical_form(const Graph& g) {
    if (g.vertex_count() <= 1) return g;
    Canonizer c(g);
    c.run();
    return relabel(g, c.champ_perm);
}

CanonicalCode canonical_code(const Graph& g) {
    return CanonicalCode{graph6_encode(canonical_form(g))};
}

bool are_isomorphic(const Graph& a, const Graph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_code(a) == canonical_code(b);
}

bool DedupStore::insert(const Graph& g) {
    Graph canon = canonical_form(g);
    CanonicalCode code{graph6_encode(canon)};
    return insert_canonical(std::move(code), std::move(canon));
}

bool DedupStore::insert_canonical(CanonicalCode code, Graph canon) {
    return classes_.emplace(std::move(code), std::move(canon)).second;
}

bool DedupStore::contains(const CanonicalCode& code) const {
    return classes_.count(code) != 0;
}

const Graph* DedupStore::find(const CanonicalCode& code) const {
    auto it = classes_.find(code);
    return it == classes_.end() ? nullptr : &it->second;
}

void DedupStore::merge(DedupStore&& other) {
    for (auto& [code, graph] : other.classes_) classes_.emplace(code, std::move(graph));
    other.classes_.clear();
}

std::vector<CanonicalCode> DedupStore::sorted_codes() const {
    std::vector<CanonicalCode> codes;
    codes.reserve(classes_.size());
    for (const auto& [code, graph] : classes_) codes.push_back(code);
    std::sort(codes.begin(), codes.end());
    return codes;
}

} // namespace trigen
