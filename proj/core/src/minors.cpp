#include "trigen/minors.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <shared_mutex>
#include <string>
#include <unordered_map>

#include "trigen/canonical.hpp"
#include "trigen/connectivity.hpp"
#include "trigen/errors.hpp"
#include "trigen/graph6.hpp"

namespace trigen {

namespace {

VertexSet neighborhood_of(const Graph& g, VertexSet s) {
    VertexSet nb = 0;
    VertexSet rest = s;
    while (rest) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        nb |= g.neighbors(v);
    }
    return nb & ~s;
}

// Branch-set backtracking: H-vertices are embedded one at a time in a
// connected order, each as a connected subset of unused G-vertices with an
// edge to every earlier neighbor's set. Pruned on remaining-vertex counts
// and on the attachment capacity left for future H-neighbors.
struct BranchSearch {
    const Graph& g;
    const Graph& h;
    int n, hn;
    VertexSet all;
    std::vector<int> order;            // H vertices, each with an earlier neighbor
    std::vector<VertexSet> earlier;    // positions j < i adjacent to position i in H
    std::vector<VertexSet> later;      // positions j > i adjacent to position i
    std::vector<VertexSet> sets;       // chosen branch sets by position
    std::vector<VertexSet> set_nbrs;   // neighborhood masks of chosen sets

    BranchSearch(const Graph& gg, const Graph& hh) : g(gg), h(hh), n(g.vertex_count()),
                                                     hn(h.vertex_count()), all(g.vertex_mask()) {
        // max-degree start, then BFS so every later vertex attaches to an
        // earlier one (H is connected in every intended use)
        std::vector<char> placed(static_cast<std::size_t>(hn), 0);
        int start = 0;
        for (int v = 1; v < hn; ++v)
            if (h.degree(v) > h.degree(start)) start = v;
        order.push_back(start);
        placed[start] = 1;
        for (std::size_t head = 0; head < order.size(); ++head) {
            for (int u : set_members(h.neighbors(order[head])))
                if (!placed[u]) {
                    placed[u] = 1;
                    order.push_back(u);
                }
        }
        for (int v = 0; v < hn; ++v)
            if (!placed[v]) order.push_back(v); // unreachable only if H is disconnected

        std::vector<int> pos_of(static_cast<std::size_t>(hn));
        for (int i = 0; i < hn; ++i) pos_of[order[i]] = i;
        earlier.assign(static_cast<std::size_t>(hn), 0);
        later.assign(static_cast<std::size_t>(hn), 0);
        for (int i = 0; i < hn; ++i)
            for (int u : set_members(h.neighbors(order[i]))) {
                int j = pos_of[u];
                if (j < i) earlier[i] |= vbit(j);
                else later[i] |= vbit(j);
            }
        sets.assign(static_cast<std::size_t>(hn), 0);
        set_nbrs.assign(static_cast<std::size_t>(hn), 0);
    }

    bool feasible_future(int placed_count, VertexSet avail) const {
        for (int j = 0; j < placed_count; ++j) {
            int future = std::popcount(later[j] >> placed_count << placed_count);
            if (future == 0) continue;
            if (std::popcount(set_nbrs[j] & avail) < future) return false;
        }
        return true;
    }

    bool dfs(int i, VertexSet used) {
        if (i == hn) return true;
        VertexSet avail = all & ~used;
        int slack = std::popcount(avail) - (hn - i);
        if (slack < 0) return false;
        int max_size = slack + 1;

        // every candidate must touch each earlier neighbor's set
        std::vector<VertexSet> need;
        VertexSet e = earlier[i];
        while (e) {
            int j = std::countr_zero(e);
            e &= e - 1;
            VertexSet reachable = set_nbrs[j] & avail;
            if (reachable == 0) return false;
            need.push_back(reachable);
        }

        std::vector<VertexSet> cands;
        VertexSet sub = avail;
        for (;;) {
            if (sub != 0 && std::popcount(sub) <= max_size) {
                bool ok = true;
                for (VertexSet req : need)
                    if ((sub & req) == 0) {
                        ok = false;
                        break;
                    }
                if (ok && g.connected_within(sub)) cands.push_back(sub);
            }
            if (sub == 0) break;
            sub = (sub - 1) & avail;
        }
        std::sort(cands.begin(), cands.end(), [](VertexSet a, VertexSet b) {
            int pa = std::popcount(a), pb = std::popcount(b);
            return pa != pb ? pa < pb : a < b;
        });

        for (VertexSet b : cands) {
            sets[i] = b;
            set_nbrs[i] = neighborhood_of(g, b);
            VertexSet next_used = used | b;
            if (feasible_future(i + 1, all & ~next_used) && dfs(i + 1, next_used)) return true;
        }
        return false;
    }
};

struct MinorCache {
    std::shared_mutex mutex;
    std::unordered_map<std::string, bool> map;
    static constexpr std::size_t kMaxEntries = 1u << 22;

    bool lookup(const std::string& key, bool& out) {
        std::shared_lock lock(mutex);
        auto it = map.find(key);
        if (it == map.end()) return false;
        out = it->second;
        return true;
    }
    void store(const std::string& key, bool value) {
        std::unique_lock lock(mutex);
        if (map.size() >= kMaxEntries) map.clear();
        map.emplace(key, value);
    }
    void clear() {
        std::unique_lock lock(mutex);
        map.clear();
    }
};

MinorCache& witness_cache() {
    static MinorCache cache;
    return cache;
}

MinorCache& oracle_cache() {
    static MinorCache cache;
    return cache;
}

bool quick_reject(const Graph& g, const Graph& h) {
    if (g.vertex_count() < h.vertex_count()) return true;
    if (g.edge_count() < h.edge_count()) return true;
    // every branch set of a minor model must hold a vertex of degree
    // >= min(3, delta(H)) in G
    int want = std::min(3, h.min_degree());
    int have = 0;
    for (int v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) >= want) ++have;
    return have < h.vertex_count();
}

bool oracle_rec(const Graph& g, const Graph& h, const std::string& h_code, int hn, int hm) {
    int n = g.vertex_count(), m = g.edge_count();
    if (n < hn || m < hm) return false;
    std::string code = graph6_encode(canonical_form(g));
    if (n == hn && m == hm) return code == h_code;
    std::string key = code + '/' + h_code;
    bool cached;
    if (oracle_cache().lookup(key, cached)) return cached;
    bool result = false;
    for (const Edge& e : g.edges()) {
        if (oracle_rec(delete_edge(g, e), h, h_code, hn, hm)) {
            result = true;
            break;
        }
    }
    if (!result) {
        for (const Edge& e : g.edges()) {
            if (oracle_rec(contract_edge(g, e), h, h_code, hn, hm)) {
                result = true;
                break;
            }
        }
    }
    oracle_cache().store(key, result);
    return result;
}

} // namespace

bool MinorWitness::valid(const Graph& g, const Graph& h) const {
    if (static_cast<int>(branch_sets.size()) != h.vertex_count()) return false;
    VertexSet seen = 0;
    for (VertexSet s : branch_sets) {
        if (s == 0) return false;
        if (s & ~g.vertex_mask()) return false;
        if (s & seen) return false;
        seen |= s;
        if (!g.connected_within(s)) return false;
    }
    for (const Edge& e : h.edges()) {
        VertexSet a = branch_sets[e.first], b = branch_sets[e.second];
        bool touched = false;
        VertexSet rest = a;
        while (rest && !touched) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            if (g.neighbors(v) & b) touched = true;
        }
        if (!touched) return false;
    }
    return true;
}

std::vector<Edge> MinorWitness::contracted_edges(const Graph& g) const {
    std::vector<Edge> out;
    for (VertexSet s : branch_sets) {
        // BFS spanning tree of the set
        if (s == 0) continue;
        int root = std::countr_zero(s);
        VertexSet seen = vbit(root);
        std::vector<int> queue{root};
        for (std::size_t head = 0; head < queue.size(); ++head) {
            int v = queue[head];
            VertexSet fresh = g.neighbors(v) & s & ~seen;
            while (fresh) {
                int u = std::countr_zero(fresh);
                fresh &= fresh - 1;
                seen |= vbit(u);
                queue.push_back(u);
                out.push_back(make_edge(v, u));
            }
        }
    }
    return out;
}

std::vector<Edge> MinorWitness::deleted_edges(const Graph& g, const Graph& h) const {
    std::vector<int> owner(static_cast<std::size_t>(g.vertex_count()), -1);
    for (int a = 0; a < static_cast<int>(branch_sets.size()); ++a)
        for (int v : set_members(branch_sets[a])) owner[v] = a;
    std::vector<Edge> contracted = contracted_edges(g);
    auto is_contracted = [&](const Edge& e) {
        return std::find(contracted.begin(), contracted.end(), e) != contracted.end();
    };
    std::vector<Edge> out;
    std::vector<char> kept(static_cast<std::size_t>(h.vertex_count() * h.vertex_count()), 0);
    for (const Edge& e : g.edges()) {
        int a = owner[e.first], b = owner[e.second];
        if (a == b && a != -1) {
            if (!is_contracted(e)) out.push_back(e); // surplus inside a set
            continue;
        }
        if (a == -1 || b == -1 || !h.has_edge(a, b)) {
            out.push_back(e);
            continue;
        }
        std::size_t slot = static_cast<std::size_t>(std::min(a, b) * h.vertex_count() + std::max(a, b));
        if (kept[slot]) out.push_back(e); // parallel connection beyond the first
        else kept[slot] = 1;
    }
    return out;
}

std::optional<MinorWitness> find_minor_witness(const Graph& g, const Graph& h) {
    if (h.vertex_count() == 0) return MinorWitness{};
    if (quick_reject(g, h)) return std::nullopt;
    BranchSearch search(g, h);
    if (!search.dfs(0, 0)) return std::nullopt;
    MinorWitness w;
    w.branch_sets.assign(static_cast<std::size_t>(h.vertex_count()), 0);
    for (int i = 0; i < h.vertex_count(); ++i) w.branch_sets[search.order[i]] = search.sets[i];
    return w;
}

bool has_minor(const Graph& g, const Graph& h) {
    if (h.vertex_count() == 0) return true;
    if (quick_reject(g, h)) return false;
    std::string key = graph6_encode(canonical_form(g)) + '/' + graph6_encode(canonical_form(h));
    bool cached;
    if (witness_cache().lookup(key, cached)) return cached;
    bool result = find_minor_witness(g, h).has_value();
    witness_cache().store(key, result);
    return result;
}

bool oracle_has_minor(const Graph& g, const Graph& h) {
    if (h.vertex_count() == 0) return true;
    std::string h_code = graph6_encode(canonical_form(h));
    return oracle_rec(g, h, h_code, h.vertex_count(), h.edge_count());
}

std::vector<Edge> preserving_deletable_edges(const Graph& g, const Graph& h) {
    if (!is_three_connected(g))
        throw NotThreeConnectedError("preserving_deletable_edges: input is not 3-connected");
    if (!has_minor(g, h))
        throw NoMinorError("preserving_deletable_edges: input has no such minor");
    std::vector<Edge> out;
    for (const Edge& e : g.edges()) {
        Graph del = delete_edge(g, e);
        if (is_three_connected(del) && has_minor(del, h)) out.push_back(e);
    }
    return out;
}

bool has_no_preserving_deletable_edge(const Graph& g, const Graph& h) {
    if (!is_three_connected(g))
        throw NotThreeConnectedError("has_no_preserving_deletable_edge: input is not 3-connected");
    if (!has_minor(g, h))
        throw NoMinorError("has_no_preserving_deletable_edge: input has no such minor");
    for (const Edge& e : g.edges()) {
        Graph del = delete_edge(g, e);
        if (is_three_connected(del) && has_minor(del, h)) return false;
    }
    return true;
}

void clear_minor_caches() {
    witness_cache().clear();
    oracle_cache().clear();
}

} // namespace trigen
