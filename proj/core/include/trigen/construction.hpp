#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trigen/graph.hpp"

namespace trigen {

/// One growth step. AddOnly covers the plain edge-additions of the splitter
/// sequence; the other three variants are the rank-raising operations:
///   SplitOnly        G = G' o f
///   AddThenSplit     G = G' + e o f, e and f in a common triad of G
///   AddTwoThenSplit  G = G' + {e1,e2} o f, {e1,e2,f} a triad of G
enum class StepKind { AddOnly, SplitOnly, AddThenSplit, AddTwoThenSplit };

struct ConstructionStep {
    StepKind kind = StepKind::AddOnly;
    std::vector<Edge> added_edges;  // 0, 1, or 2 pairs
    std::optional<SplitSpec> split; // absent for AddOnly; applied after the additions

    std::string to_line() const;
    static ConstructionStep from_line(const std::string& line);

    friend bool operator==(const ConstructionStep&, const ConstructionStep&) = default;
};

Graph apply_step(const Graph& g, const ConstructionStep& step);

/// Steps from a seed to a graph. Steps are recorded against canonical
/// representatives: replaying applies each step and then relabels to
/// canonical form before the next one.
struct ProvenanceChain {
    std::vector<ConstructionStep> steps;
};

Graph replay(const Graph& seed, const ProvenanceChain& chain);

struct Candidate {
    Graph graph;
    ConstructionStep step;
};

/// All edge-additions (same rank) and all vertex splits (rank + 1) of a
/// simple 3-connected graph. Every child is again simple and 3-connected.
std::vector<Candidate> splitter_children(const Graph& g);

/// Operation (i): every vertex split.
std::vector<Candidate> candidates_op_i(const Graph& g);

/// Operation (ii): add e between non-adjacent vertices, then split one of
/// its endpoints so that the new vertex has degree exactly 3 and is incident
/// to e, the split edge f, and one further edge.
std::vector<Candidate> candidates_op_ii(const Graph& g);

/// Operation (iii): add e1=(v,a), e2=(v,b) for a pair {a,b} non-adjacent to
/// v, then split v so the new vertex is adjacent to exactly {a, b, v}.
std::vector<Candidate> candidates_op_iii(const Graph& g);

} // namespace trigen
