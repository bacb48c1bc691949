#pragma once

#include <filesystem>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "trigen/canonical.hpp"
#include "trigen/construction.hpp"
#include "trigen/graph.hpp"
#include "trigen/reports.hpp"

namespace trigen {

struct OpsMask {
    bool i = true;
    bool ii = true;
    bool iii = true;

    bool any() const { return i || ii || iii; }
    std::string to_string() const;
    static OpsMask parse(const std::string& text); // "i,ii,iii"

    friend bool operator==(const OpsMask&, const OpsMask&) = default;
};

struct EnumOptions {
    int workers = 0; // 0 = hardware concurrency
    OpsMask ops{};
    std::string seed_label;                       // file stem for persisted levels
    std::optional<std::filesystem::path> out_dir; // persist levels when set
    bool resume = false;                          // reuse cached levels from out_dir
    bool allow_deep = false; // opt-in for rank >= 9 full-column runs
    std::function<void(const std::string&)> log;  // progress/warning sink
};

struct LevelMember {
    Graph graph;                    // canonical representative
    std::vector<std::string> chain; // "seed <code>" followed by one line per step
};

/// Deduplicated rank-r collection with provenance per representative.
/// Iteration order is ascending canonical code, which is also the order of
/// the persisted files.
struct LevelSet {
    int rank = 0;
    std::string seed_name;
    std::map<CanonicalCode, LevelMember> members;

    std::size_t size() const { return members.size(); }
    bool contains(const CanonicalCode& code) const { return members.count(code) != 0; }
};

/// Levels r(H)..r_max of all 3-connected graphs with an H-minor: the seed
/// level is the edge-addition closure of {H}; each next level is the closure
/// of all vertex splits of the previous one. Warns through opt.log when the
/// seed is a wheel.
std::vector<LevelSet> enumerate_with_minor(const Graph& h, int r_max,
                                           const EnumOptions& opt = {});

/// Levels 3..r_max of all 3-connected graphs (wheel-seeded: level r is the
/// addition closure of splits(level r-1) together with W_r).
std::vector<LevelSet> enumerate_all_3connected(int r_max, const EnumOptions& opt = {});

/// One construction step of the no-preserving pipeline: candidates from
/// operations (i)-(iii) over prev, deduplicated, then filtered by
/// has_no_preserving_deletable_edge against H. The filter is mandatory: the
/// operations also produce graphs that do have preserving-deletable edges.
/// Throws SeedMismatchError when a prev member fails the level invariant.
LevelSet next_level_no_preserving(const LevelSet& prev, const Graph& h,
                                  const EnumOptions& opt = {});

/// Full pipeline from {H} up to r_max.
std::vector<LevelSet> enumerate_no_preserving(const Graph& h, int r_max,
                                              const EnumOptions& opt = {});

/// Members that are minimally 3-connected.
LevelSet extract_minimal(const LevelSet& level);

/// Evaluates |E| <= |E(H)| + 3(r - r(H)) for every member, plus |E| <= 3r-7
/// at rank >= 6 when H is the prism.
BoundReport verify_bounds(const std::vector<LevelSet>& levels, const Graph& h);

/// Needs levels from enumerate_all_3connected covering rank >= 6.
MaderReport verify_mader(const std::vector<LevelSet>& levels_all);

/// Compares the prism-free members of the full rank-r level against
/// dirac_catalog(r).
DiracReport verify_dirac(const LevelSet& all_level);
DiracReport verify_dirac(int r, const EnumOptions& opt = {});

// --- persistence ------------------------------------------------------
// Layout under a run directory: <dir>/<pipeline>/<seed>-r<rank>.g6 holds the
// sorted canonical graph6 lines, <seed>-r<rank>.prov the matching provenance
// records, manifest.json the run configuration and per-rank counts.

void save_level(const std::filesystem::path& dir, const std::string& pipeline,
                const LevelSet& level, const OpsMask& ops,
                const std::string& seed_code);
std::optional<LevelSet> load_level(const std::filesystem::path& dir,
                                   const std::string& pipeline,
                                   const std::string& seed_name, int rank,
                                   const OpsMask& ops, const std::string& seed_code);

} // namespace trigen
