#pragma once

#include <optional>
#include <vector>

#include "trigen/graph.hpp"

namespace trigen {

/// Branch-set certificate that H is a minor of G: branch_sets[a] is the set
/// of G-vertices contracted into the H-vertex a. Sets are nonempty, pairwise
/// disjoint, each induces a connected subgraph, and every H-edge has a
/// G-edge between the two corresponding sets. The deleted edge set X and the
/// contracted edge set Y of H = G\X/Y are recoverable from the certificate.
struct MinorWitness {
    std::vector<VertexSet> branch_sets; // indexed by H vertex

    bool valid(const Graph& g, const Graph& h) const;

    /// Spanning-forest edges inside each branch set (the contracted set Y).
    std::vector<Edge> contracted_edges(const Graph& g) const;
    /// Everything else that has to go: edges at unused vertices, edges
    /// between sets without an H-edge, and surplus parallel connections.
    std::vector<Edge> deleted_edges(const Graph& g, const Graph& h) const;
};

/// Branch-set backtracking search. Returns a valid witness or nullopt.
std::optional<MinorWitness> find_minor_witness(const Graph& g, const Graph& h);

/// Memoized on canonical codes; equivalent to find_minor_witness != nullopt.
bool has_minor(const Graph& g, const Graph& h);

/// Independent test oracle: recursive closure under single-edge deletions
/// and contractions, checking isomorphism with H once the sizes match.
/// Memoized on canonical codes. Exponential; meant for graphs up to ~9
/// vertices.
bool oracle_has_minor(const Graph& g, const Graph& h);

/// Edges e with g\e 3-connected and still containing an H-minor (up to
/// isomorphism). Preconditions: g 3-connected with an H-minor; throws
/// NotThreeConnectedError / NoMinorError otherwise.
std::vector<Edge> preserving_deletable_edges(const Graph& g, const Graph& h);
bool has_no_preserving_deletable_edge(const Graph& g, const Graph& h);

/// Drops the global memo tables (test hygiene / memory cap escape hatch).
void clear_minor_caches();

} // namespace trigen
