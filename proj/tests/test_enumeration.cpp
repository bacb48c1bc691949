#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <set>
#include <utility>

#include "support/oracles.hpp"
#include "trigen/canonical.hpp"
#include "trigen/connectivity.hpp"
#include "trigen/enumeration.hpp"
#include "trigen/errors.hpp"
#include "trigen/families.hpp"
#include "trigen/graph6.hpp"
#include "trigen/minors.hpp"

using namespace trigen;
using namespace trigen::testing;

namespace {

EnumOptions quiet(int workers = 2) {
    EnumOptions opt;
    opt.workers = workers;
    opt.seed_label = "prism";
    return opt;
}

Graph replay_chain(const std::vector<std::string>& chain) {
    REQUIRE(!chain.empty());
    REQUIRE(chain[0].rfind("seed ", 0) == 0);
    Graph g = graph6_decode(chain[0].substr(5));
    for (std::size_t i = 1; i < chain.size(); ++i)
        g = canonical_form(apply_step(g, ConstructionStep::from_line(chain[i])));
    return g;
}

} // namespace

TEST_CASE("ops mask parsing") {
    CHECK(OpsMask::parse("i,ii,iii") == OpsMask{true, true, true});
    CHECK(OpsMask::parse("i,ii") == OpsMask{true, true, false});
    CHECK(OpsMask{true, false, true}.to_string() == "i,iii");
    CHECK_THROWS_AS(OpsMask::parse("iv"), BadParameterError);
    CHECK_THROWS_AS(OpsMask::parse(""), BadParameterError);
}

namespace {

// Exhaustive sweep over all labeled graphs on n vertices: the canonical
// codes of every 3-connected class, split by prism-minor containment.
std::pair<std::set<std::string>, std::set<std::string>> brute_force_classes(int n) {
    std::set<std::string> with_prism, without;
    int pairs = n * (n - 1) / 2;
    for (long long mask = 0; mask < (1LL << pairs); ++mask) {
        Graph g(n);
        int bit = 0;
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v, ++bit)
                if (mask >> bit & 1) g.link(u, v);
        if (g.min_degree() < 3 || !is_three_connected(g)) continue;
        std::string code = canonical_code(g).bytes;
        if (with_prism.count(code) || without.count(code)) continue;
        (has_minor(g, prism()) ? with_prism : without).insert(code);
    }
    return {with_prism, without};
}

} // namespace

TEST_CASE("with-minor levels for the prism match the exhaustive sweep") {
    auto levels = enumerate_with_minor(prism(), 6, quiet());
    REQUIRE(levels.size() == 2);
    CHECK(levels[0].rank == 5);
    // 12 rank-5 classes carry a prism minor; together with the 5 prism-free
    // ones that makes the 17 3-connected graphs of rank 5
    CHECK(levels[0].size() == 12);
    CHECK(levels[1].rank == 6);
    CHECK(levels[1].size() == 131);

    CHECK(levels[0].contains(canonical_code(complete(6)))); // K6 = prism + additions
    CHECK(levels[0].contains(canonical_code(prism())));

    auto [with_prism, without] = brute_force_classes(6);
    CHECK(with_prism.size() == 12);
    CHECK(without.size() == 5);
    std::set<std::string> level_codes;
    for (const auto& [code, m] : levels[0].members) level_codes.insert(code.bytes);
    CHECK(level_codes == with_prism);

    for (const auto& [code, m] : levels[0].members) {
        CHECK(is_three_connected(m.graph));
        CHECK(has_minor(m.graph, prism()));
    }
}

TEST_CASE("minimal extraction matches the known counts") {
    auto levels = enumerate_with_minor(prism(), 6, quiet());
    CHECK(extract_minimal(levels[0]).size() == 1);
    CHECK(extract_minimal(levels[1]).size() == 3);
}

TEST_CASE("no-preserving pipeline through rank 6") {
    auto levels = enumerate_no_preserving(prism(), 6, quiet());
    REQUIRE(levels.size() == 2);
    CHECK(levels[0].size() == 1); // only the prism itself at its own rank
    CHECK(levels[1].size() == 3);
    for (const auto& [code, m] : levels[1].members) {
        CHECK(m.graph.edge_count() == 11);
        CHECK(has_no_preserving_deletable_edge(m.graph, prism()));
    }
}

TEST_CASE("rank-6 level is unchanged without operation (iii)") {
    EnumOptions opt = quiet();
    opt.ops = OpsMask::parse("i,ii");
    auto levels = enumerate_no_preserving(prism(), 6, opt);
    CHECK(levels[1].size() == 3);
}

TEST_CASE("next_level_no_preserving rejects bad previous levels") {
    LevelSet fake;
    fake.rank = 5;
    fake.seed_name = "prism";
    Graph grown = canonical_form(add_edge(prism(), 0, 4)); // has a preserving-deletable edge
    fake.members.emplace(CanonicalCode{graph6_encode(grown)},
                         LevelMember{grown, {"seed " + graph6_encode(grown)}});
    CHECK_THROWS_AS(next_level_no_preserving(fake, prism(), quiet()), SeedMismatchError);
}

TEST_CASE("all-3-connected levels") {
    auto levels = enumerate_all_3connected(6, quiet());
    REQUIRE(levels.size() == 4);
    CHECK(levels[0].size() == 1); // K4 alone
    CHECK(levels[0].contains(canonical_code(complete(4))));
    CHECK(levels[1].size() == 3); // K5, K5\e, W4
    CHECK(levels[2].size() == 17);
    CHECK(levels[3].size() == 136);
    for (const auto& [code, m] : levels[1].members) CHECK(is_three_connected(m.graph));

    // the wheel-seeded route agrees with the exhaustive sweep at rank 5
    auto [with_prism, without] = brute_force_classes(6);
    std::set<std::string> level_codes;
    for (const auto& [code, m] : levels[2].members) level_codes.insert(code.bytes);
    std::set<std::string> expect = with_prism;
    expect.insert(without.begin(), without.end());
    CHECK(level_codes == expect);
}

TEST_CASE("labeled census referee at n=7") {
    // sum of 7!/|Aut| over the enumerated rank-6 classes must equal the
    // labeled 3-connected count; a missed class or a code collision breaks it
    long long labeled = 0;
    for (long long mask = 0; mask < (1LL << 21); ++mask) {
        Graph g(7);
        int bit = 0;
        for (int u = 0; u < 7; ++u)
            for (int v = u + 1; v < 7; ++v, ++bit)
                if (mask >> bit & 1) g.link(u, v);
        if (g.min_degree() >= 3 && is_three_connected(g)) ++labeled;
    }
    auto levels = enumerate_all_3connected(6, quiet());
    long long orbit_sum = 0;
    for (const auto& [code, m] : levels.back().members) {
        std::vector<int> perm(7);
        std::iota(perm.begin(), perm.end(), 0);
        long long aut = 0;
        do {
            bool ok = true;
            for (int u = 0; u < 7 && ok; ++u)
                for (int v = u + 1; v < 7 && ok; ++v)
                    if (m.graph.has_edge(u, v) != m.graph.has_edge(perm[u], perm[v])) ok = false;
            if (ok) ++aut;
        } while (std::next_permutation(perm.begin(), perm.end()));
        orbit_sum += 5040 / aut;
    }
    CHECK(labeled == orbit_sum);
    CHECK(labeled == 225096);
}

TEST_CASE("dirac verification at ranks 4 and 5") {
    DiracReport r4 = verify_dirac(4, quiet());
    CHECK(r4.matched());
    CHECK(r4.count_all == 3);
    CHECK(r4.prism_free_codes.size() == 3);

    DiracReport r5 = verify_dirac(5, quiet());
    CHECK(r5.matched());
    CHECK(r5.count_all == 17);
    CHECK(r5.prism_free_codes.size() == 5);
}

TEST_CASE("mader audit over the full rank-6 level") {
    auto levels = enumerate_all_3connected(6, quiet());
    MaderReport rep = verify_mader(levels);
    CHECK(rep.bound_violations.empty());
    // the 3r-6 = 12 equality class at rank 6: K_{3,4} and the wheel W6,
    // which is minimally 3-connected with 2r = 12 edges
    REQUIRE(rep.equality_codes.size() == 2);
    std::vector<std::string> expect{canonical_code(k3p_variant(4, 0)).bytes,
                                    canonical_code(wheel(6)).bytes};
    std::sort(expect.begin(), expect.end());
    std::vector<std::string> got = rep.equality_codes;
    std::sort(got.begin(), got.end());
    CHECK(got == expect);
    REQUIRE(rep.equality_exceptions.size() == 1);
    CHECK(rep.equality_exceptions[0].code == canonical_code(wheel(6)).bytes);

    // every minimally 3-connected rank-6 graph with a prism minor stays at
    // most one edge below the Mader limit
    for (const MaderRecord& rec : rep.records)
        if (rec.rank == 6 && has_minor(graph6_decode(rec.code), prism()))
            CHECK(rec.edges <= 11);
}

TEST_CASE("bound verification on no-preserving levels") {
    auto levels = enumerate_no_preserving(prism(), 7, quiet());
    BoundReport rep = verify_bounds(levels, prism());
    CHECK(rep.ok());
    CHECK(rep.prism_seed);
    CHECK(rep.seed_rank == 5);
    CHECK(rep.seed_edges == 9);
    CHECK(rep.max_edges_by_rank.at(6) == 11);
    for (const BoundRecord& rec : rep.records) {
        if (rec.rank == 5) CHECK(rec.slack_general == 0);
        if (rec.rank == 6) {
            CHECK(rec.edges == 11);
            REQUIRE(rec.slack_prism.has_value());
            CHECK(*rec.slack_prism == 0);
        }
    }
    CHECK_FALSE(rep.to_tsv().empty());
    CHECK_FALSE(rep.to_json().empty());
}

TEST_CASE("petersen bound smoke test") {
    Graph p = petersen();
    CHECK(p.edge_count() == 15);
    CHECK(rank(p) == 9);
    auto levels = enumerate_no_preserving(p, 9, quiet(2));
    REQUIRE(levels.size() == 1);
    BoundReport rep = verify_bounds(levels, p);
    CHECK(rep.ok());
    REQUIRE(rep.records.size() == 1);
    CHECK(rep.records[0].slack_general == 0);
    CHECK(minor_growth_bound(p, 10) == 18);
    CHECK(rep.bound_at(10) == 18);
}

TEST_CASE("wheel seeds trigger a warning") {
    EnumOptions opt = quiet();
    opt.seed_label = "w4";
    std::vector<std::string> log;
    opt.log = [&](const std::string& line) { log.push_back(line); };
    auto levels = enumerate_with_minor(wheel(4), 4, opt);
    CHECK(levels[0].size() == 3); // W4, K5\e, K5
    bool warned = false;
    for (const std::string& line : log)
        if (line.find("wheel") != std::string::npos) warned = true;
    CHECK(warned);
}

TEST_CASE("provenance chains replay to their member codes") {
    auto levels = enumerate_no_preserving(prism(), 7, quiet());
    for (const LevelSet& level : levels)
        for (const auto& [code, m] : level.members) {
            Graph again = replay_chain(m.chain);
            CHECK(graph6_encode(again) == code.bytes);
        }
    auto with_minor = enumerate_with_minor(prism(), 6, quiet());
    int checked = 0;
    for (const auto& [code, m] : with_minor[1].members) {
        if (++checked > 25) break;
        CHECK(graph6_encode(replay_chain(m.chain)) == code.bytes);
    }
}

TEST_CASE("worker counts do not change results") {
    auto one = enumerate_with_minor(prism(), 6, quiet(1));
    auto four = enumerate_with_minor(prism(), 6, quiet(4));
    REQUIRE(one.size() == four.size());
    for (std::size_t i = 0; i < one.size(); ++i) {
        REQUIRE(one[i].size() == four[i].size());
        auto ia = one[i].members.begin();
        auto ib = four[i].members.begin();
        for (; ia != one[i].members.end(); ++ia, ++ib) {
            CHECK(ia->first == ib->first);
            CHECK(ia->second.chain == ib->second.chain);
        }
    }
}

TEST_CASE("persistence round trip and resume") {
    namespace fs = std::filesystem;
    fs::path dir = fs::temp_directory_path() / "trigen-test-levels";
    fs::remove_all(dir);

    EnumOptions opt = quiet();
    opt.out_dir = dir;
    auto fresh = enumerate_no_preserving(prism(), 6, opt);

    CHECK(fs::exists(dir / "no-preserving" / "prism-r5.g6"));
    CHECK(fs::exists(dir / "no-preserving" / "prism-r6.prov"));
    CHECK(fs::exists(dir / "no-preserving" / "manifest.json"));

    // sorted file contents match the in-memory level
    {
        std::ifstream g6(dir / "no-preserving" / "prism-r6.g6");
        std::vector<std::string> lines;
        std::string line;
        while (std::getline(g6, line)) lines.push_back(line);
        REQUIRE(lines.size() == fresh[1].size());
        CHECK(std::is_sorted(lines.begin(), lines.end()));
        auto it = fresh[1].members.begin();
        for (const std::string& l : lines) CHECK(l == (it++)->first.bytes);
    }

    opt.resume = true;
    auto resumed = enumerate_no_preserving(prism(), 7, opt);
    REQUIRE(resumed.size() == 3);
    CHECK(resumed[0].size() == fresh[0].size());
    CHECK(resumed[1].size() == fresh[1].size());
    for (auto ia = resumed[1].members.begin(), ib = fresh[1].members.begin();
         ia != resumed[1].members.end(); ++ia, ++ib) {
        CHECK(ia->first == ib->first);
        CHECK(ia->second.chain == ib->second.chain);
    }

    // resume with a different configuration is refused
    EnumOptions other = opt;
    other.ops = OpsMask::parse("i,ii");
    CHECK_THROWS_AS(enumerate_no_preserving(prism(), 6, other), ResumeMismatchError);

    fs::remove_all(dir);
}

TEST_CASE("deep full-column runs need the explicit opt-in") {
    EnumOptions opt = quiet();
    CHECK_THROWS_AS(enumerate_with_minor(prism(), 9, opt), BadParameterError);
    CHECK_THROWS_AS(enumerate_all_3connected(9, opt), BadParameterError);
}
