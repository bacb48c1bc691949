#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trigen/graph.hpp"

namespace trigen {

/// |E(H)| + 3(r - r(H)): the size bound for rank-r graphs with an H-minor
/// and no H-preserving deletable edge.
int minor_growth_bound(const Graph& h, int r);

struct BoundRecord {
    std::string code;
    int rank = 0;
    int edges = 0;
    int bound_general = 0; // |E(H)| + 3(r - r(H))
    int slack_general = 0;
    std::optional<int> bound_prism; // 3r - 7; prism seeds at rank >= 6 only
    std::optional<int> slack_prism;
};

struct BoundReport {
    int seed_rank = 0;
    int seed_edges = 0;
    bool prism_seed = false;
    std::vector<BoundRecord> records;
    std::vector<BoundRecord> violations;
    std::map<int, int> max_edges_by_rank;

    int bound_at(int r) const { return seed_edges + 3 * (r - seed_rank); }
    bool ok() const { return violations.empty(); }
    std::string to_tsv() const;
    std::string to_json() const;
};

struct MaderRecord {
    std::string code;
    int rank = 0;
    int edges = 0;
    int limit = 0; // 3r - 6
    bool equality = false;
    bool is_k3p = false;
};

/// Size audit of the minimally 3-connected members of full levels at
/// rank >= 6: edge count against 3r - 6, with the equality set compared to
/// the K_{3,p} family.
struct MaderReport {
    std::vector<MaderRecord> records;
    std::vector<MaderRecord> bound_violations;     // edges > 3r - 6
    std::vector<MaderRecord> equality_exceptions;  // equality without K_{3,p}
    std::vector<std::string> equality_codes;

    bool ok() const { return bound_violations.empty() && equality_exceptions.empty(); }
    std::string to_tsv() const;
    std::string to_json() const;
};

struct DiracReport {
    int rank = 0;
    int count_all = 0;
    std::vector<std::string> catalog_codes;
    std::vector<std::string> prism_free_codes;
    std::vector<std::string> missing;    // catalog classes not found prism-free
    std::vector<std::string> unexpected; // prism-free classes outside the catalog

    bool matched() const { return missing.empty() && unexpected.empty(); }
    std::string to_tsv() const;
    std::string to_json() const;
};

} // namespace trigen
