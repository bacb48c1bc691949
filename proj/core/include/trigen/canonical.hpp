#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <unordered_map>
#include <vector>

#include "trigen/graph.hpp"

namespace trigen {

/// Relabeling-invariant identifier of an isomorphism class. The bytes are the
/// graph6 encoding of the canonically relabeled graph, so a code doubles as a
/// persistence format and sorts with plain byte order.
struct CanonicalCode {
    std::string bytes;

    friend bool operator==(const CanonicalCode&, const CanonicalCode&) = default;
    friend auto operator<=>(const CanonicalCode&, const CanonicalCode&) = default;
};

struct CanonicalCodeHash {
    std::size_t operator()(const CanonicalCode& c) const {
        return std::hash<std::string>{}(c.bytes);
    }
};

/// Canonical form search: iterated degree/neighborhood refinement fixes an
/// ordered cell partition, then a backtracking pass over cell-respecting
/// labelings picks the lexicographically minimal adjacency bit string.
/// Interchangeable (twin) vertices are collapsed during the search, which
/// keeps complete graphs and K_{3,p}-like families cheap. Exact and entirely
/// adequate at enumeration sizes (<= ~12 vertices).
CanonicalCode canonical_code(const Graph& g);

/// The canonically relabeled copy itself (decoding canonical_code gives the
/// same graph).
Graph canonical_form(const Graph& g);

bool are_isomorphic(const Graph& a, const Graph& b);

/// One canonical representative per isomorphism class. Insertion is
/// idempotent; merging per-worker stores is associative and lands on the
/// same contents as sequential insertion.
class DedupStore {
  public:
    /// True iff g's class was not present yet.
    bool insert(const Graph& g);
    bool insert_canonical(CanonicalCode code, Graph canon);

    bool contains(const CanonicalCode& code) const;
    const Graph* find(const CanonicalCode& code) const;
    std::size_t size() const { return classes_.size(); }

    void merge(DedupStore&& other);
    std::vector<CanonicalCode> sorted_codes() const;

    auto begin() const { return classes_.begin(); }
    auto end() const { return classes_.end(); }

  private:
    std::unordered_map<CanonicalCode, Graph, CanonicalCodeHash> classes_;
};

inline bool dedup_insert(DedupStore& store, const Graph& g) { return store.insert(g); }

} // namespace trigen
