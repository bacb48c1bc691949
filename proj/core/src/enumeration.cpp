#include "trigen/enumeration.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <fstream>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "trigen/connectivity.hpp"
#include "trigen/errors.hpp"
#include "trigen/families.hpp"
#include "trigen/graph6.hpp"
#include "trigen/minors.hpp"

namespace trigen {

namespace {

int resolve_workers(const EnumOptions& opt) {
    if (opt.workers > 0) return opt.workers;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

template <typename Fn>
void parallel_for(std::size_t count, int workers, Fn&& fn) {
    if (count == 0) return;
    if (workers <= 1 || count == 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex err_mutex;
    std::exception_ptr err;
    auto body = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            try {
                fn(i);
            } catch (...) {
                std::lock_guard lock(err_mutex);
                if (!err) err = std::current_exception();
                return;
            }
        }
    };
    std::vector<std::thread> pool;
    int k = static_cast<int>(std::min<std::size_t>(static_cast<std::size_t>(workers), count));
    pool.reserve(static_cast<std::size_t>(k));
    for (int t = 0; t < k; ++t) pool.emplace_back(body);
    for (auto& th : pool) th.join();
    if (err) std::rethrow_exception(err);
}

void log_line(const EnumOptions& opt, const std::string& line) {
    if (opt.log) opt.log(line);
}

// Provenance link of a discovered class. When several (parent, step) pairs
// produce the same class the smallest link wins, which makes the emitted
// chains independent of worker scheduling.
struct PendLink {
    int parent_rank = 0;
    std::string parent_code;
    std::string step_line;

    friend bool operator<(const PendLink& a, const PendLink& b) {
        return std::tie(a.parent_rank, a.parent_code, a.step_line) <
               std::tie(b.parent_rank, b.parent_code, b.step_line);
    }
};

struct Pending {
    Graph graph;
    bool seed = false;
    std::optional<PendLink> link;
};

using PendingMap = std::map<std::string, Pending>;

struct CandidateOut {
    std::string code;
    Graph canon;
    PendLink link;
};

// Inserts a batch; returns the codes that were new.
std::vector<std::string> merge_candidates(PendingMap& members,
                                          std::vector<std::vector<CandidateOut>>& batches) {
    std::vector<std::string> fresh;
    for (auto& batch : batches) {
        for (auto& out : batch) {
            auto [it, inserted] =
                members.try_emplace(out.code, Pending{std::move(out.canon), false, out.link});
            if (inserted) {
                fresh.push_back(out.code);
            } else if (!it->second.seed &&
                       (!it->second.link || out.link < *it->second.link)) {
                it->second.link = out.link;
            }
        }
        batch.clear();
    }
    std::sort(fresh.begin(), fresh.end());
    fresh.erase(std::unique(fresh.begin(), fresh.end()), fresh.end());
    return fresh;
}

constexpr std::size_t kChunk = 2048;

// Fixpoint of single edge-additions within a rank. Every member is expanded
// exactly once, so the discovered set and all links are schedule-independent.
void close_under_additions(PendingMap& members, int rank, int workers,
                           const EnumOptions& opt) {
    std::vector<std::string> frontier;
    frontier.reserve(members.size());
    for (const auto& [code, p] : members) frontier.push_back(code);
    while (!frontier.empty()) {
        std::vector<std::string> next_frontier;
        for (std::size_t off = 0; off < frontier.size(); off += kChunk) {
            std::size_t len = std::min(kChunk, frontier.size() - off);
            std::vector<std::vector<CandidateOut>> batches(len);
            parallel_for(len, workers, [&](std::size_t i) {
                const std::string& code = frontier[off + i];
                const Graph& parent = members.at(code).graph;
                int n = parent.vertex_count();
                for (int u = 0; u < n; ++u)
                    for (int w = u + 1; w < n; ++w) {
                        if (parent.has_edge(u, w)) continue;
                        Graph child = add_edge(parent, u, w);
                        Graph canon = canonical_form(child);
                        ConstructionStep step{StepKind::AddOnly, {make_edge(u, w)}, std::nullopt};
                        batches[i].push_back(CandidateOut{graph6_encode(canon), std::move(canon),
                                                          PendLink{rank, code, step.to_line()}});
                    }
            });
            auto fresh = merge_candidates(members, batches);
            next_frontier.insert(next_frontier.end(), fresh.begin(), fresh.end());
        }
        std::sort(next_frontier.begin(), next_frontier.end());
        next_frontier.erase(std::unique(next_frontier.begin(), next_frontier.end()),
                            next_frontier.end());
        frontier = std::move(next_frontier);
        if (!frontier.empty())
            log_line(opt, "  addition wave: +" + std::to_string(frontier.size()) + " classes");
    }
}

// Vertex splits of every member of `parents`, merged into `members`.
void expand_splits(const LevelSet& parents, PendingMap& members, int workers) {
    std::vector<const LevelMember*> src;
    std::vector<const std::string*> src_codes;
    for (const auto& [code, m] : parents.members) {
        src.push_back(&m);
        src_codes.push_back(&code.bytes);
    }
    for (std::size_t off = 0; off < src.size(); off += kChunk) {
        std::size_t len = std::min(kChunk, src.size() - off);
        std::vector<std::vector<CandidateOut>> batches(len);
        parallel_for(len, workers, [&](std::size_t i) {
            const Graph& parent = src[off + i]->graph;
            for (const SplitSpec& spec : enumerate_splits(parent)) {
                Graph child = vertex_split(parent, spec);
                Graph canon = canonical_form(child);
                ConstructionStep step{StepKind::SplitOnly, {}, spec};
                batches[i].push_back(CandidateOut{graph6_encode(canon), std::move(canon),
                                                  PendLink{parents.rank, *src_codes[off + i],
                                                           step.to_line()}});
            }
        });
        merge_candidates(members, batches);
    }
}

// Chains: seed members carry just their seed line; everything else is the
// parent chain plus one step. Addition links stay within the level (the
// recursion is finite because additions strictly grow the edge count).
LevelSet finalize_level(int rank, const std::string& seed_name, PendingMap&& pending,
                        const LevelSet* prev) {
    std::map<std::string, std::vector<std::string>> chains;
    auto chain_of = [&](auto&& self, const std::string& code) -> const std::vector<std::string>& {
        auto done = chains.find(code);
        if (done != chains.end()) return done->second;
        const Pending& p = pending.at(code);
        std::vector<std::string> chain;
        if (p.seed || !p.link) {
            chain.push_back("seed " + code);
        } else if (p.link->parent_rank == rank) {
            chain = self(self, p.link->parent_code);
            chain.push_back(p.link->step_line);
        } else {
            chain = prev->members.at(CanonicalCode{p.link->parent_code}).chain;
            chain.push_back(p.link->step_line);
        }
        return chains.emplace(code, std::move(chain)).first->second;
    };

    LevelSet level;
    level.rank = rank;
    level.seed_name = seed_name;
    for (auto& [code, p] : pending) {
        std::vector<std::string> chain = chain_of(chain_of, code);
        level.members.emplace(CanonicalCode{code}, LevelMember{std::move(p.graph), std::move(chain)});
    }
    return level;
}

std::string seed_label_or(const EnumOptions& opt, const std::string& fallback) {
    return opt.seed_label.empty() ? fallback : opt.seed_label;
}

// Persistence paths and manifest bookkeeping.

std::filesystem::path pipeline_dir(const std::filesystem::path& dir, const std::string& pipeline) {
    return dir / pipeline;
}

std::filesystem::path level_path(const std::filesystem::path& dir, const std::string& pipeline,
                                 const std::string& seed_name, int rank, const char* ext) {
    return pipeline_dir(dir, pipeline) / (seed_name + "-r" + std::to_string(rank) + ext);
}

nlohmann::json read_manifest(const std::filesystem::path& dir, const std::string& pipeline) {
    std::filesystem::path path = pipeline_dir(dir, pipeline) / "manifest.json";
    if (!std::filesystem::exists(path)) return nlohmann::json();
    std::ifstream in(path);
    nlohmann::json j;
    in >> j;
    return j;
}

bool manifest_matches(const nlohmann::json& j, const std::string& pipeline,
                      const std::string& seed_name, const OpsMask& ops,
                      const std::string& seed_code) {
    return j.value("pipeline", "") == pipeline && j.value("seed_name", "") == seed_name &&
           j.value("ops", "") == ops.to_string() && j.value("seed_code", "") == seed_code;
}

} // namespace

std::string OpsMask::to_string() const {
    std::string out;
    if (i) out += "i";
    if (ii) out += out.empty() ? "ii" : ",ii";
    if (iii) out += out.empty() ? "iii" : ",iii";
    return out;
}

OpsMask OpsMask::parse(const std::string& text) {
    OpsMask mask{false, false, false};
    std::stringstream ss(text);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok == "i") mask.i = true;
        else if (tok == "ii") mask.ii = true;
        else if (tok == "iii") mask.iii = true;
        else if (!tok.empty()) throw BadParameterError("ops: unknown operation " + tok);
    }
    if (!mask.any()) throw BadParameterError("ops: at least one operation required");
    return mask;
}

void save_level(const std::filesystem::path& dir, const std::string& pipeline,
                const LevelSet& level, const OpsMask& ops, const std::string& seed_code) {
    std::filesystem::create_directories(pipeline_dir(dir, pipeline));
    {
        std::ofstream g6(level_path(dir, pipeline, level.seed_name, level.rank, ".g6"));
        for (const auto& [code, m] : level.members) g6 << code.bytes << '\n';
    }
    {
        std::ofstream prov(level_path(dir, pipeline, level.seed_name, level.rank, ".prov"));
        for (const auto& [code, m] : level.members) {
            prov << '>' << code.bytes << '\n';
            for (const std::string& line : m.chain) prov << line << '\n';
            prov << '\n';
        }
    }
    nlohmann::json j = read_manifest(dir, pipeline);
    if (j.is_null() || !manifest_matches(j, pipeline, level.seed_name, ops, seed_code)) {
        j = nlohmann::json{{"pipeline", pipeline},
                           {"seed_name", level.seed_name},
                           {"seed_code", seed_code},
                           {"ops", ops.to_string()},
                           {"levels", nlohmann::json::object()}};
    }
    j["levels"][std::to_string(level.rank)] = level.members.size();
    std::ofstream out(pipeline_dir(dir, pipeline) / "manifest.json");
    out << j.dump(2) << '\n';
}

std::optional<LevelSet> load_level(const std::filesystem::path& dir, const std::string& pipeline,
                                   const std::string& seed_name, int rank, const OpsMask& ops,
                                   const std::string& seed_code) {
    nlohmann::json j = read_manifest(dir, pipeline);
    if (j.is_null()) return std::nullopt;
    if (!manifest_matches(j, pipeline, seed_name, ops, seed_code))
        throw ResumeMismatchError("cached run in " + pipeline_dir(dir, pipeline).string() +
                                  " was produced with a different configuration");
    std::string key = std::to_string(rank);
    if (!j["levels"].contains(key)) return std::nullopt;
    std::size_t expect = j["levels"][key].get<std::size_t>();

    std::ifstream g6(level_path(dir, pipeline, seed_name, rank, ".g6"));
    std::ifstream prov(level_path(dir, pipeline, seed_name, rank, ".prov"));
    if (!g6 || !prov)
        throw ResumeMismatchError("cached level files missing for rank " + key);

    LevelSet level;
    level.rank = rank;
    level.seed_name = seed_name;
    std::string line;
    std::vector<std::string> codes;
    while (std::getline(g6, line)) {
        if (!line.empty()) codes.push_back(line);
    }
    std::size_t at = 0;
    while (std::getline(prov, line)) {
        if (line.empty()) continue;
        if (line[0] != '>') throw ResumeMismatchError("malformed provenance record");
        std::string code = line.substr(1);
        if (at >= codes.size() || code != codes[at])
            throw ResumeMismatchError("provenance does not match level file");
        std::vector<std::string> chain;
        while (std::getline(prov, line) && !line.empty()) chain.push_back(line);
        level.members.emplace(CanonicalCode{code},
                              LevelMember{graph6_decode(code), std::move(chain)});
        ++at;
    }
    if (at != codes.size() || level.members.size() != expect)
        throw ResumeMismatchError("cached level truncated for rank " + key);
    return level;
}

std::vector<LevelSet> enumerate_with_minor(const Graph& h, int r_max, const EnumOptions& opt) {
    if (!is_three_connected(h))
        throw NotThreeConnectedError("enumerate_with_minor: seed is not 3-connected");
    int base = rank(h);
    if (r_max < base) throw BadParameterError("enumerate_with_minor: max rank below seed rank");
    if (r_max >= 9 && !opt.allow_deep)
        throw BadParameterError(
            "enumerate_with_minor: full-column runs past rank 8 exceed desk scale; "
            "set allow_deep to force");
    if (is_wheel(h))
        log_line(opt, "warning: seed is a wheel; the construction sequence theorem assumes a "
                      "non-wheel seed");
    int workers = resolve_workers(opt);
    std::string label = seed_label_or(opt, "seed");
    std::string seed_code = graph6_encode(canonical_form(h));

    auto try_load = [&](int r) -> std::optional<LevelSet> {
        if (!opt.out_dir || !opt.resume) return std::nullopt;
        return load_level(*opt.out_dir, "with-minor", label, r, opt.ops, seed_code);
    };
    auto persist = [&](const LevelSet& lv) {
        if (opt.out_dir) save_level(*opt.out_dir, "with-minor", lv, opt.ops, seed_code);
    };

    std::vector<LevelSet> levels;
    for (int r = base; r <= r_max; ++r) {
        if (auto cached = try_load(r)) {
            log_line(opt, "rank " + std::to_string(r) + ": " + std::to_string(cached->size()) +
                              " classes (cached)");
            levels.push_back(std::move(*cached));
            continue;
        }
        PendingMap pending;
        if (r == base) {
            pending.emplace(seed_code, Pending{canonical_form(h), true, std::nullopt});
        } else {
            expand_splits(levels.back(), pending, workers);
        }
        close_under_additions(pending, r, workers, opt);
        LevelSet level = finalize_level(r, label, std::move(pending),
                                        levels.empty() ? nullptr : &levels.back());
        log_line(opt, "rank " + std::to_string(r) + ": " + std::to_string(level.size()) +
                          " classes with the seed minor");
        persist(level);
        levels.push_back(std::move(level));
    }
    return levels;
}

std::vector<LevelSet> enumerate_all_3connected(int r_max, const EnumOptions& opt) {
    if (r_max < 3) throw BadParameterError("enumerate_all_3connected: need rank >= 3");
    if (r_max >= 9 && !opt.allow_deep)
        throw BadParameterError(
            "enumerate_all_3connected: full-column runs past rank 8 exceed desk scale; "
            "set allow_deep to force");
    int workers = resolve_workers(opt);
    const std::string label = "all";

    auto try_load = [&](int r) -> std::optional<LevelSet> {
        if (!opt.out_dir || !opt.resume) return std::nullopt;
        return load_level(*opt.out_dir, "all", label, r, opt.ops, "");
    };
    auto persist = [&](const LevelSet& lv) {
        if (opt.out_dir) save_level(*opt.out_dir, "all", lv, opt.ops, "");
    };

    std::vector<LevelSet> levels;
    for (int r = 3; r <= r_max; ++r) {
        if (auto cached = try_load(r)) {
            log_line(opt, "rank " + std::to_string(r) + ": " + std::to_string(cached->size()) +
                              " classes (cached)");
            levels.push_back(std::move(*cached));
            continue;
        }
        PendingMap pending;
        Graph w = canonical_form(wheel(r));
        std::string w_code = graph6_encode(w);
        pending.emplace(std::move(w_code), Pending{std::move(w), true, std::nullopt});
        if (r > 3) expand_splits(levels.back(), pending, workers);
        close_under_additions(pending, r, workers, opt);
        LevelSet level = finalize_level(r, label, std::move(pending),
                                        levels.empty() ? nullptr : &levels.back());
        log_line(opt, "rank " + std::to_string(r) + ": " + std::to_string(level.size()) +
                          " 3-connected classes");
        persist(level);
        levels.push_back(std::move(level));
    }
    return levels;
}

LevelSet next_level_no_preserving(const LevelSet& prev, const Graph& h, const EnumOptions& opt) {
    int workers = resolve_workers(opt);
    if (!opt.ops.any()) throw BadParameterError("next_level_no_preserving: empty operation mask");

    // level invariant of the previous rank
    {
        std::vector<const Graph*> graphs;
        for (const auto& [code, m] : prev.members) graphs.push_back(&m.graph);
        std::atomic<bool> bad{false};
        parallel_for(graphs.size(), workers, [&](std::size_t i) {
            if (!has_minor(*graphs[i], h) || !has_no_preserving_deletable_edge(*graphs[i], h))
                bad.store(true);
        });
        if (bad.load())
            throw SeedMismatchError(
                "next_level_no_preserving: a previous-level member has a preserving-deletable "
                "edge or lacks the seed minor");
    }

    PendingMap pending;
    {
        std::vector<const LevelMember*> src;
        std::vector<const std::string*> src_codes;
        for (const auto& [code, m] : prev.members) {
            src.push_back(&m);
            src_codes.push_back(&code.bytes);
        }
        for (std::size_t off = 0; off < src.size(); off += kChunk) {
            std::size_t len = std::min(kChunk, src.size() - off);
            std::vector<std::vector<CandidateOut>> batches(len);
            parallel_for(len, workers, [&](std::size_t i) {
                const Graph& parent = src[off + i]->graph;
                std::vector<Candidate> cands;
                if (opt.ops.i) {
                    auto v = candidates_op_i(parent);
                    cands.insert(cands.end(), v.begin(), v.end());
                }
                if (opt.ops.ii) {
                    auto v = candidates_op_ii(parent);
                    cands.insert(cands.end(), v.begin(), v.end());
                }
                if (opt.ops.iii) {
                    auto v = candidates_op_iii(parent);
                    cands.insert(cands.end(), v.begin(), v.end());
                }
                for (Candidate& c : cands) {
                    Graph canon = canonical_form(c.graph);
                    batches[i].push_back(CandidateOut{graph6_encode(canon), std::move(canon),
                                                      PendLink{prev.rank, *src_codes[off + i],
                                                               c.step.to_line()}});
                }
            });
            merge_candidates(pending, batches);
        }
    }
    std::size_t raw = pending.size();

    // Mandatory filter: the constrained operations also emit graphs that do
    // have preserving-deletable edges.
    std::vector<const std::string*> codes;
    std::vector<const Graph*> graphs;
    for (const auto& [code, p] : pending) {
        codes.push_back(&code);
        graphs.push_back(&p.graph);
    }
    std::vector<char> keep(codes.size(), 0);
    parallel_for(codes.size(), workers, [&](std::size_t i) {
        keep[i] = has_no_preserving_deletable_edge(*graphs[i], h) ? 1 : 0;
    });
    for (std::size_t i = 0; i < codes.size(); ++i)
        if (!keep[i]) pending.erase(*codes[i]);

    LevelSet level = finalize_level(prev.rank + 1, prev.seed_name, std::move(pending), &prev);
    log_line(opt, "rank " + std::to_string(level.rank) + ": " + std::to_string(level.size()) +
                      " classes without preserving-deletable edges (from " + std::to_string(raw) +
                      " candidate classes)");
    return level;
}

std::vector<LevelSet> enumerate_no_preserving(const Graph& h, int r_max, const EnumOptions& opt) {
    if (!is_three_connected(h))
        throw NotThreeConnectedError("enumerate_no_preserving: seed is not 3-connected");
    int base = rank(h);
    if (r_max < base) throw BadParameterError("enumerate_no_preserving: max rank below seed rank");
    if (is_wheel(h))
        log_line(opt, "warning: seed is a wheel; the construction sequence theorem assumes a "
                      "non-wheel seed");
    std::string label = seed_label_or(opt, "seed");
    std::string seed_code = graph6_encode(canonical_form(h));

    auto try_load = [&](int r) -> std::optional<LevelSet> {
        if (!opt.out_dir || !opt.resume) return std::nullopt;
        return load_level(*opt.out_dir, "no-preserving", label, r, opt.ops, seed_code);
    };
    auto persist = [&](const LevelSet& lv) {
        if (opt.out_dir) save_level(*opt.out_dir, "no-preserving", lv, opt.ops, seed_code);
    };

    std::vector<LevelSet> levels;
    for (int r = base; r <= r_max; ++r) {
        if (auto cached = try_load(r)) {
            log_line(opt, "rank " + std::to_string(r) + ": " + std::to_string(cached->size()) +
                              " classes (cached)");
            levels.push_back(std::move(*cached));
            continue;
        }
        if (r == base) {
            // the only rank-r(H) graph with an H-minor and no H-preserving
            // deletable edge is H itself: any added edge is deletable
            LevelSet level;
            level.rank = base;
            level.seed_name = label;
            level.members.emplace(CanonicalCode{seed_code},
                                  LevelMember{canonical_form(h), {"seed " + seed_code}});
            persist(level);
            levels.push_back(std::move(level));
            continue;
        }
        LevelSet level = next_level_no_preserving(levels.back(), h, opt);
        persist(level);
        levels.push_back(std::move(level));
    }
    return levels;
}

LevelSet extract_minimal(const LevelSet& level) {
    LevelSet out;
    out.rank = level.rank;
    out.seed_name = level.seed_name;
    for (const auto& [code, m] : level.members)
        if (is_minimally_three_connected(m.graph)) out.members.emplace(code, m);
    return out;
}

BoundReport verify_bounds(const std::vector<LevelSet>& levels, const Graph& h) {
    BoundReport rep;
    rep.seed_rank = rank(h);
    rep.seed_edges = h.edge_count();
    rep.prism_seed = are_isomorphic(h, prism());
    for (const LevelSet& level : levels) {
        for (const auto& [code, m] : level.members) {
            BoundRecord rec;
            rec.code = code.bytes;
            rec.rank = level.rank;
            rec.edges = m.graph.edge_count();
            rec.bound_general = rep.bound_at(level.rank);
            rec.slack_general = rec.bound_general - rec.edges;
            if (rep.prism_seed && level.rank >= 6) {
                rec.bound_prism = 3 * level.rank - 7;
                rec.slack_prism = *rec.bound_prism - rec.edges;
            }
            auto& best = rep.max_edges_by_rank[level.rank];
            best = std::max(best, rec.edges);
            bool violated = rec.slack_general < 0 || (rec.slack_prism && *rec.slack_prism < 0);
            if (violated) rep.violations.push_back(rec);
            rep.records.push_back(std::move(rec));
        }
    }
    return rep;
}

MaderReport verify_mader(const std::vector<LevelSet>& levels_all) {
    MaderReport rep;
    Graph reference_k3p = k3p_variant(3, 0);
    for (const LevelSet& level : levels_all) {
        if (level.rank < 6) continue;
        for (const auto& [code, m] : level.members) {
            if (!is_minimally_three_connected(m.graph)) continue;
            MaderRecord rec;
            rec.code = code.bytes;
            rec.rank = level.rank;
            rec.edges = m.graph.edge_count();
            rec.limit = 3 * level.rank - 6;
            rec.equality = rec.edges == rec.limit;
            rec.is_k3p = level.rank >= 5 && are_isomorphic(m.graph, k3p_variant(level.rank - 2, 0));
            if (rec.edges > rec.limit) rep.bound_violations.push_back(rec);
            if (rec.equality) {
                rep.equality_codes.push_back(rec.code);
                if (!rec.is_k3p) rep.equality_exceptions.push_back(rec);
            }
            rep.records.push_back(std::move(rec));
        }
    }
    return rep;
}

DiracReport verify_dirac(const LevelSet& all_level) {
    DiracReport rep;
    rep.rank = all_level.rank;
    rep.count_all = static_cast<int>(all_level.size());
    Graph h = prism();
    for (const Graph& g : dirac_catalog(all_level.rank))
        rep.catalog_codes.push_back(graph6_encode(canonical_form(g)));
    std::sort(rep.catalog_codes.begin(), rep.catalog_codes.end());
    for (const auto& [code, m] : all_level.members)
        if (!has_minor(m.graph, h)) rep.prism_free_codes.push_back(code.bytes);
    std::set_difference(rep.catalog_codes.begin(), rep.catalog_codes.end(),
                        rep.prism_free_codes.begin(), rep.prism_free_codes.end(),
                        std::back_inserter(rep.missing));
    std::set_difference(rep.prism_free_codes.begin(), rep.prism_free_codes.end(),
                        rep.catalog_codes.begin(), rep.catalog_codes.end(),
                        std::back_inserter(rep.unexpected));
    return rep;
}

DiracReport verify_dirac(int r, const EnumOptions& opt) {
    std::vector<LevelSet> levels = enumerate_all_3connected(r, opt);
    return verify_dirac(levels.back());
}

} // namespace trigen
