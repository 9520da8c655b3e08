#include <benchmark/benchmark.h>

#include <vector>

#include "bipart/bipart.hpp"

namespace {

using namespace bipart;

void BM_PartitionTable(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(build_p_table(n));
}
BENCHMARK(BM_PartitionTable)->Arg(1600)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_CubicTable(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const PartitionTable p = build_p_table(n);
    for (auto _ : state) benchmark::DoNotOptimize(build_c_table(n, p));
}
BENCHMARK(BM_CubicTable)->Arg(1600)->Arg(10000)->Unit(benchmark::kMillisecond);

// Full diagonal cell at level L, including the tables it needs.
void BM_PiDiagonal(benchmark::State& state) {
    const auto level = static_cast<std::size_t>(state.range(0));
    const std::size_t sq = level * level;
    for (auto _ : state) {
        const PartitionTable p = build_p_table(sq);
        const CubicTable c = build_c_table(sq, p);
        benchmark::DoNotOptimize(pi_value(sq, sq, c, p));
    }
}
BENCHMARK(BM_PiDiagonal)->Arg(10)->Arg(40)->Arg(70)->Unit(benchmark::kMillisecond);

void BM_CrankColumn(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    const std::vector<std::size_t> cols{0};
    for (auto _ : state) benchmark::DoNotOptimize(build_crank_columns(order, cols));
}
BENCHMARK(BM_CrankColumn)->Arg(500)->Arg(2500)->Unit(benchmark::kMillisecond);

void BM_CrankProductExpansion(benchmark::State& state) {
    const auto order = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(expand_crank_product(order));
}
BENCHMARK(BM_CrankProductExpansion)->Arg(50)->Arg(100)->Unit(benchmark::kMillisecond);

void BM_GeneratingFunctionTable(benchmark::State& state) {
    const auto box = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) benchmark::DoNotOptimize(gf_table(box, box));
}
BENCHMARK(BM_GeneratingFunctionTable)->Arg(20)->Arg(60)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
