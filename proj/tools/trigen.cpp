// trigen: construct, enumerate, and audit 3-connected graphs around a fixed
// minor. Subcommands: family, check, enumerate, verify.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "trigen/canonical.hpp"
#include "trigen/connectivity.hpp"
#include "trigen/enumeration.hpp"
#include "trigen/errors.hpp"
#include "trigen/families.hpp"
#include "trigen/graph6.hpp"
#include "trigen/minors.hpp"

namespace fs = std::filesystem;
using namespace trigen;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct Seed {
    std::string label;
    Graph graph;
};

// --seed accepts a family ("prism", "petersen", "wheel:5", "k3p:4:2",
// "complete:6", "k5me") or a path to a graph6 file holding one graph.
Seed resolve_seed(const std::string& text) {
    std::vector<std::string> parts;
    std::string item;
    std::stringstream ss(text);
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (!parts.empty()) {
        if (auto kind = family_from_name(parts[0])) {
            FamilySpec spec{*kind};
            if (parts.size() > 1) spec.size_param = std::stoi(parts[1]);
            if (parts.size() > 2) spec.extra_edges = std::stoi(parts[2]);
            std::string label = parts[0];
            for (std::size_t i = 1; i < parts.size(); ++i) label += parts[i];
            return {label, build(spec)};
        }
    }
    std::ifstream in(text);
    if (!in) throw ParseError("seed: no such family or file: " + text);
    std::vector<Graph> graphs = read_graph6(in);
    if (graphs.size() != 1) throw ParseError("seed file must hold exactly one graph6 line");
    return {fs::path(text).stem().string(), graphs[0]};
}

fs::path output_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("TRIGEN_OUT")) return env;
    return "out";
}

EnumOptions make_options(const Seed& seed, const std::string& ops, int workers,
                         const std::string& out_flag, bool resume, bool deep, bool persist) {
    EnumOptions opt;
    opt.workers = workers;
    opt.ops = OpsMask::parse(ops);
    opt.seed_label = seed.label;
    opt.resume = resume;
    opt.allow_deep = deep;
    if (persist) opt.out_dir = output_dir(out_flag);
    opt.log = [](const std::string& line) { std::fprintf(stderr, "%s\n", line.c_str()); };
    return opt;
}

std::string edge_list_text(const std::vector<Edge>& edges) {
    if (edges.empty()) return "none";
    std::string out;
    for (const Edge& e : edges) {
        if (!out.empty()) out += ',';
        out += std::to_string(e.first) + "-" + std::to_string(e.second);
    }
    return out;
}

int cmd_check(const std::string& input, const Seed& seed) {
    std::vector<Graph> graphs;
    if (input == "-") {
        graphs = read_graph6(std::cin);
    } else {
        std::ifstream in(input);
        if (!in) throw ParseError("check: cannot open " + input);
        graphs = read_graph6(in);
    }
    std::printf("graph\tvertices\trank\tedges\t3conn\tminimal\thas_minor\tpreserving_deletable\t"
                "bound\tslack\n");
    for (const Graph& g : graphs) {
        std::string line = graph6_encode(g);
        bool conn3 = is_three_connected(g);
        std::string minimal = "-", minor = "-", preserving = "-", bound = "-", slack = "-";
        std::string rank_text = g.is_connected() ? std::to_string(rank(g)) : "-";
        if (conn3) {
            minimal = is_minimally_three_connected(g) ? "yes" : "no";
            bool hm = has_minor(g, seed.graph);
            minor = hm ? "yes" : "no";
            if (hm) {
                preserving = edge_list_text(preserving_deletable_edges(g, seed.graph));
                int b = minor_growth_bound(seed.graph, rank(g));
                bound = std::to_string(b);
                slack = std::to_string(b - g.edge_count());
            }
        }
        std::printf("%s\t%d\t%s\t%d\t%s\t%s\t%s\t%s\t%s\t%s\n", line.c_str(), g.vertex_count(),
                    rank_text.c_str(), g.edge_count(), conn3 ? "yes" : "no", minimal.c_str(),
                    minor.c_str(), preserving.c_str(), bound.c_str(), slack.c_str());
    }
    return kExitOk;
}

void write_counts(const fs::path& dir, const std::string& pipeline,
                  const std::vector<LevelSet>& levels) {
    fs::create_directories(dir / pipeline);
    std::ofstream tsv(dir / pipeline / "counts.tsv");
    tsv << "rank\tclasses\n";
    std::string json = "{\n";
    for (std::size_t i = 0; i < levels.size(); ++i) {
        tsv << levels[i].rank << '\t' << levels[i].size() << '\n';
        json += "  \"" + std::to_string(levels[i].rank) + "\": " + std::to_string(levels[i].size());
        json += (i + 1 < levels.size()) ? ",\n" : "\n";
    }
    json += "}\n";
    std::ofstream(dir / pipeline / "counts.json") << json;
}

int cmd_enumerate(const Seed& seed, const std::string& pipeline, int max_rank,
                  const EnumOptions& opt) {
    std::vector<LevelSet> levels;
    if (pipeline == "with-minor") {
        levels = enumerate_with_minor(seed.graph, max_rank, opt);
    } else if (pipeline == "no-preserving") {
        levels = enumerate_no_preserving(seed.graph, max_rank, opt);
    } else if (pipeline == "all") {
        levels = enumerate_all_3connected(max_rank, opt);
    } else if (pipeline == "minimal") {
        std::vector<LevelSet> base = enumerate_no_preserving(seed.graph, max_rank, opt);
        for (const LevelSet& level : base) {
            levels.push_back(extract_minimal(level));
            if (opt.out_dir)
                save_level(*opt.out_dir, "minimal", levels.back(), opt.ops,
                           graph6_encode(canonical_form(seed.graph)));
        }
    } else {
        throw BadParameterError("unknown pipeline: " + pipeline);
    }
    std::printf("rank\tclasses\n");
    for (const LevelSet& level : levels)
        std::printf("%d\t%zu\n", level.rank, level.size());
    if (opt.out_dir) write_counts(*opt.out_dir, pipeline, levels);
    return kExitOk;
}

int cmd_verify_bounds(const Seed& seed, int max_rank, const EnumOptions& opt) {
    std::vector<LevelSet> levels = enumerate_no_preserving(seed.graph, max_rank, opt);
    BoundReport rep = verify_bounds(levels, seed.graph);
    std::printf("members\t%zu\nviolations\t%zu\n", rep.records.size(), rep.violations.size());
    for (const auto& [r, m] : rep.max_edges_by_rank)
        std::printf("max_edges\tr%d\t%d\t(bound %d%s)\n", r, m, rep.bound_at(r),
                    rep.prism_seed && r >= 6 ? (", prism " + std::to_string(3 * r - 7)).c_str()
                                             : "");
    for (const BoundRecord& rec : rep.violations)
        std::printf("violation\t%s\trank %d\tedges %d\n", rec.code.c_str(), rec.rank, rec.edges);
    if (opt.out_dir) {
        fs::create_directories(*opt.out_dir);
        std::ofstream(*opt.out_dir / "bounds.tsv") << rep.to_tsv();
        std::ofstream(*opt.out_dir / "bounds.json") << rep.to_json();
    }
    return rep.ok() ? kExitOk : kExitViolation;
}

int cmd_verify_dirac(int r, const EnumOptions& opt) {
    DiracReport rep = verify_dirac(r, opt);
    std::printf("rank\t%d\nall_classes\t%d\nprism_free\t%zu\ncatalog\t%zu\nmatched\t%s\n", rep.rank,
                rep.count_all, rep.prism_free_codes.size(), rep.catalog_codes.size(),
                rep.matched() ? "yes" : "no");
    for (const std::string& c : rep.missing) std::printf("missing\t%s\n", c.c_str());
    for (const std::string& c : rep.unexpected) std::printf("unexpected\t%s\n", c.c_str());
    if (opt.out_dir) {
        fs::create_directories(*opt.out_dir);
        std::ofstream(*opt.out_dir / "dirac.tsv") << rep.to_tsv();
        std::ofstream(*opt.out_dir / "dirac.json") << rep.to_json();
    }
    return rep.matched() ? kExitOk : kExitViolation;
}

int cmd_verify_mader(int max_rank, const EnumOptions& opt) {
    std::vector<LevelSet> levels = enumerate_all_3connected(max_rank, opt);
    MaderReport rep = verify_mader(levels);
    std::printf("minimal_members\t%zu\nbound_violations\t%zu\nequality_exceptions\t%zu\n",
                rep.records.size(), rep.bound_violations.size(), rep.equality_exceptions.size());
    for (const std::string& c : rep.equality_codes) std::printf("equality\t%s\n", c.c_str());
    for (const MaderRecord& rec : rep.bound_violations)
        std::printf("violation\t%s\trank %d\tedges %d > %d\n", rec.code.c_str(), rec.rank,
                    rec.edges, rec.limit);
    for (const MaderRecord& rec : rep.equality_exceptions)
        std::printf("exception\t%s\trank %d\tattains %d without being K_{3,p}\n", rec.code.c_str(),
                    rec.rank, rec.limit);
    if (opt.out_dir) {
        fs::create_directories(*opt.out_dir);
        std::ofstream(*opt.out_dir / "mader.tsv") << rep.to_tsv();
        std::ofstream(*opt.out_dir / "mader.json") << rep.to_json();
    }
    return rep.ok() ? kExitOk : kExitViolation;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"3-connected graph construction and verification toolkit"};
    app.require_subcommand(1);

    int workers = 0;
    app.add_option("--workers", workers, "worker threads (0 = hardware)");

    // family
    auto* family = app.add_subcommand("family", "emit a named family member as graph6");
    std::string family_kind;
    int family_size = 0, family_extra = 0;
    family->add_option("kind", family_kind, "prism|wheel|k3p|complete|k5me|petersen|dirac")
        ->required();
    family->add_option("size", family_size, "r for wheel/dirac, p for k3p, n for complete");
    family->add_option("--extra", family_extra, "extra edges in the 3-class (k3p only)");

    // check
    auto* check = app.add_subcommand("check", "report per-graph predicates against a seed minor");
    std::string check_input = "-", check_seed = "prism";
    check->add_option("input", check_input, "graph6 file, or - for stdin");
    check->add_option("--seed", check_seed, "seed minor (family or graph6 file)");

    // enumerate
    auto* enumerate = app.add_subcommand("enumerate", "run an isomorph-free level enumeration");
    std::string enum_seed = "prism", enum_pipeline = "no-preserving", enum_ops = "i,ii,iii";
    std::string enum_out;
    int enum_max_rank = 0;
    bool enum_resume = false, enum_deep = false;
    enumerate->add_option("--seed", enum_seed, "seed minor (family or graph6 file)");
    enumerate
        ->add_option("--pipeline", enum_pipeline, "with-minor|no-preserving|all|minimal")
        ->check(CLI::IsMember({"with-minor", "no-preserving", "all", "minimal"}));
    enumerate->add_option("--max-rank", enum_max_rank, "last rank to build")->required();
    enumerate->add_option("--ops", enum_ops, "construction operations to use, e.g. i,ii");
    enumerate->add_option("--out", enum_out, "output directory (default $TRIGEN_OUT or ./out)");
    enumerate->add_flag("--resume", enum_resume, "reuse cached levels from the output directory");
    enumerate->add_flag("--deep", enum_deep, "allow full-column runs past rank 8");

    // verify
    auto* verify = app.add_subcommand("verify", "machine-check the size bounds and catalogs");
    verify->require_subcommand(1);
    auto* vbounds = verify->add_subcommand("bounds", "per-member size bounds on the "
                                                     "no-preserving levels");
    std::string vb_seed = "prism", vb_ops = "i,ii,iii", vb_out;
    int vb_max_rank = 0;
    bool vb_resume = false;
    vbounds->add_option("--seed", vb_seed, "seed minor");
    vbounds->add_option("--max-rank", vb_max_rank, "last rank to build")->required();
    vbounds->add_option("--ops", vb_ops, "construction operations");
    vbounds->add_option("--out", vb_out, "write bounds.tsv/bounds.json here");
    vbounds->add_flag("--resume", vb_resume, "reuse cached levels");

    auto* vdirac = verify->add_subcommand("dirac", "prism-free classes vs the known catalog");
    int vd_rank = 0;
    std::string vd_out;
    vdirac->add_option("--rank", vd_rank, "rank to audit")->required();
    vdirac->add_option("--out", vd_out, "write dirac.tsv/dirac.json here");

    auto* vmader = verify->add_subcommand("mader", "size audit of minimally 3-connected levels");
    int vm_max_rank = 0;
    std::string vm_out;
    vmader->add_option("--max-rank", vm_max_rank, "last rank to audit")->required();
    vmader->add_option("--out", vm_out, "write mader.tsv/mader.json here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (family->parsed()) {
            if (family_kind == "dirac") {
                for (const Graph& g : dirac_catalog(family_size))
                    std::printf("%s\n", graph6_encode(g).c_str());
                return kExitOk;
            }
            auto kind = family_from_name(family_kind);
            if (!kind) throw BadParameterError("unknown family: " + family_kind);
            std::printf("%s\n",
                        graph6_encode(build({*kind, family_size, family_extra})).c_str());
            return kExitOk;
        }
        if (check->parsed()) return cmd_check(check_input, resolve_seed(check_seed));
        if (enumerate->parsed()) {
            Seed seed = resolve_seed(enum_seed);
            EnumOptions opt = make_options(seed, enum_ops, workers, enum_out, enum_resume,
                                           enum_deep, true);
            return cmd_enumerate(seed, enum_pipeline, enum_max_rank, opt);
        }
        if (vbounds->parsed()) {
            Seed seed = resolve_seed(vb_seed);
            EnumOptions opt = make_options(seed, vb_ops, workers, vb_out, vb_resume, false,
                                           !vb_out.empty());
            return cmd_verify_bounds(seed, vb_max_rank, opt);
        }
        if (vdirac->parsed()) {
            Seed none{"all", Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})};
            EnumOptions opt = make_options(none, "i,ii,iii", workers, vd_out, false, false,
                                           !vd_out.empty());
            return cmd_verify_dirac(vd_rank, opt);
        }
        if (vmader->parsed()) {
            Seed none{"all", Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})};
            EnumOptions opt = make_options(none, "i,ii,iii", workers, vm_out, false, false,
                                           !vm_out.empty());
            return cmd_verify_mader(vm_max_rank, opt);
        }
    } catch (const Error& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return kExitUsage;
    }
    return kExitUsage;
}
