#include <benchmark/benchmark.h>

#include "trigen/canonical.hpp"
#include "trigen/connectivity.hpp"
#include "trigen/enumeration.hpp"
#include "trigen/families.hpp"
#include "trigen/minors.hpp"

using namespace trigen;

namespace {

// a dense rank-7 member: prism plus a split and several additions
Graph dense_rank7() {
    Graph g = vertex_split(complete(6), SplitSpec{0, make_set({1, 2}), make_set({3, 4, 5})});
    g = add_edge(g, 0, 3);
    g = add_edge(g, 0, 4);
    return g;
}

void BM_CanonicalCode_Prism(benchmark::State& state) {
    Graph g = prism();
    for (auto _ : state) benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(BM_CanonicalCode_Prism);

void BM_CanonicalCode_Wheel8(benchmark::State& state) {
    Graph g = wheel(8);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(BM_CanonicalCode_Wheel8);

void BM_CanonicalCode_K36(benchmark::State& state) {
    Graph g = k3p_variant(6, 0);
    for (auto _ : state) benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(BM_CanonicalCode_K36);

void BM_CanonicalCode_DenseRank7(benchmark::State& state) {
    Graph g = dense_rank7();
    for (auto _ : state) benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(BM_CanonicalCode_DenseRank7);

void BM_CanonicalCode_Petersen(benchmark::State& state) {
    Graph g = petersen();
    for (auto _ : state) benchmark::DoNotOptimize(canonical_code(g));
}
BENCHMARK(BM_CanonicalCode_Petersen);

void BM_IsThreeConnected_Rank8(benchmark::State& state) {
    Graph g = vertex_split(dense_rank7(), SplitSpec{1, make_set({2, 3}), make_set({0, 4, 5})});
    for (auto _ : state) benchmark::DoNotOptimize(is_three_connected(g));
}
BENCHMARK(BM_IsThreeConnected_Rank8);

void BM_MinorWitness_Positive(benchmark::State& state) {
    Graph g = dense_rank7();
    Graph h = prism();
    for (auto _ : state) benchmark::DoNotOptimize(find_minor_witness(g, h));
}
BENCHMARK(BM_MinorWitness_Positive);

void BM_MinorWitness_Negative(benchmark::State& state) {
    Graph g = k3p_variant(6, 3);
    Graph h = prism();
    for (auto _ : state) benchmark::DoNotOptimize(find_minor_witness(g, h));
}
BENCHMARK(BM_MinorWitness_Negative);

void BM_EnumerateWithMinor_Rank6(benchmark::State& state) {
    EnumOptions opt;
    opt.workers = 1;
    for (auto _ : state) benchmark::DoNotOptimize(enumerate_with_minor(prism(), 6, opt));
}
BENCHMARK(BM_EnumerateWithMinor_Rank6);

void BM_NextLevelNoPreserving(benchmark::State& state) {
    EnumOptions opt;
    opt.workers = 1;
    auto levels = enumerate_no_preserving(prism(), 6, opt);
    for (auto _ : state) {
        clear_minor_caches();
        benchmark::DoNotOptimize(next_level_no_preserving(levels[1], prism(), opt));
    }
}
BENCHMARK(BM_NextLevelNoPreserving);

} // namespace

BENCHMARK_MAIN();
