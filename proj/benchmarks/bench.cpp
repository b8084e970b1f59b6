#include <benchmark/benchmark.h>

#include <random>

#include "minrank/bounds.hpp"
#include "minrank/experiments.hpp"
#include "minrank/graph.hpp"
#include "minrank/matrix.hpp"

using namespace minrank;

static void BM_RankF2(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    const Matrix m = random_matrix(n, n, Field(2), rng);
    for (auto _ : state) benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(BM_RankF2)->Arg(16)->Arg(32)->Arg(64);

static void BM_RankGeneric(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::mt19937_64 rng(1);
    const Matrix m = random_matrix(n, n, Field(5), rng);
    for (auto _ : state) benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(BM_RankGeneric)->Arg(16)->Arg(32)->Arg(64);

static void BM_SampleGnp(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    std::uint64_t seed = 0;
    for (auto _ : state) benchmark::DoNotOptimize(DiGraph::sample_gnp(n, 0.5, seed++));
}
BENCHMARK(BM_SampleGnp)->Arg(128)->Arg(512)->Arg(2048);

static void BM_CliqueCover(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const DiGraph g = DiGraph::sample_gnp(n, 0.5, 7);
    for (auto _ : state) benchmark::DoNotOptimize(clique_cover_upper_bound(g));
}
BENCHMARK(BM_CliqueCover)->Arg(64)->Arg(128)->Arg(256);

static void BM_IndependentSetExact(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const DiGraph g = DiGraph::sample_gnp(n, 0.5, 7);
    for (auto _ : state) benchmark::DoNotOptimize(independent_set_lower_bound(g));
}
BENCHMARK(BM_IndependentSetExact)->Arg(24)->Arg(32)->Arg(40);

static void BM_ExactMinrankF2(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const DiGraph g = DiGraph::sample_gnp(n, 0.5, 3);
    for (auto _ : state) benchmark::DoNotOptimize(exact_minrank(g, Field(2), 26.0));
}
BENCHMARK(BM_ExactMinrankF2)->Arg(4)->Arg(5)->Arg(6);

BENCHMARK_MAIN();
