#include <benchmark/benchmark.h>

#include "csys/duality.hpp"

using namespace csys;

namespace {

ConnectivitySystem random_weighted(int vertices, std::uint64_t seed) {
    GeneratorConfig gc;
    gc.kind = GeneratorKind::RandomWeightedGraphCut;
    gc.vertices = vertices;
    gc.edges = std::min(2 * vertices, vertices * (vertices - 1) / 2);
    gc.seed = seed;
    gc.count = 1;
    return std::move(generate(gc).front());
}

void BM_EvaluateMemoized(benchmark::State& state) {
    auto sys = random_weighted(static_cast<int>(state.range(0)), 17);
    const Mask full = sys.full_mask();
    for (auto _ : state) {
        Value acc = 0;
        for (Mask m = 0; m <= full; ++m) acc += sys.evaluate(m);
        benchmark::DoNotOptimize(acc);
    }
    state.SetItemsProcessed(state.iterations() * (static_cast<std::int64_t>(full) + 1));
}
BENCHMARK(BM_EvaluateMemoized)->Arg(8)->Arg(12);

void BM_ExactBranchwidth(benchmark::State& state) {
    auto sys = random_weighted(static_cast<int>(state.range(0)), 23);
    for (auto _ : state) {
        sys.clear_cache();
        benchmark::DoNotOptimize(exact_branchwidth(sys).width);
    }
}
BENCHMARK(BM_ExactBranchwidth)->Arg(8)->Arg(10)->Arg(12)->Unit(benchmark::kMillisecond);

void BM_TreeEnumeration(benchmark::State& state) {
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::size_t count = 0;
        enumerate_all_trees(n, [&](const DecompositionTree&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_TreeEnumeration)->Arg(5)->Arg(6)->Arg(7);

void BM_BruteForceBranchwidth(benchmark::State& state) {
    auto sys = random_weighted(static_cast<int>(state.range(0)), 29);
    for (auto _ : state) benchmark::DoNotOptimize(brute_force_branchwidth(sys));
}
BENCHMARK(BM_BruteForceBranchwidth)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

void BM_SearchConditional(benchmark::State& state) {
    auto sys = random_weighted(static_cast<int>(state.range(0)), 31);
    const Value k = sys.max_value() / 2;
    SearchConfig config;
    config.order_k = k;
    for (auto _ : state) benchmark::DoNotOptimize(search(sys, k, config));
}
BENCHMARK(BM_SearchConditional)->Arg(8)->Arg(10)->Arg(12);

void BM_InterpretationMatrix(benchmark::State& state) {
    auto sys = random_weighted(static_cast<int>(state.range(0)), 37);
    for (auto _ : state) benchmark::DoNotOptimize(run_matrix(sys));
}
BENCHMARK(BM_InterpretationMatrix)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

} // namespace

BENCHMARK_MAIN();
