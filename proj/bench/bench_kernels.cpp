#include <benchmark/benchmark.h>

#include "perilink/engine.hpp"
#include "perilink/recipes.hpp"

using namespace perilink;

namespace {

SearchOptions census_options(Int p) {
    SearchOptions o;
    o.p = p;
    return o;
}

// Arguments: n, p. Box (-3, 3).
template <bool Parallel>
void BM_Census(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const SearchOptions o = census_options(state.range(1));
    std::size_t rows = 0;
    for (auto _ : state) {
        const CensusReport r = Parallel ? block_census(n, o, -3, 3) : block_census_serial(n, o, -3, 3);
        rows = r.rows.size();
        benchmark::DoNotOptimize(r.representatives.data());
    }
    state.counters["rows"] = static_cast<double>(rows);
}

RecipeGrid wide_grid() { return RecipeGrid{-2, 2, 2, 30, {3, 5, 7, 11}, {}}; }

template <bool Parallel>
void BM_RecipeGrid(benchmark::State& state) {
    const RecipeGrid g = wide_grid();
    std::size_t rows = 0;
    for (auto _ : state) {
        const RecipeReport r = Parallel ? verify_all_recipes(g) : verify_all_recipes_serial(g);
        rows = r.rows.size();
        benchmark::DoNotOptimize(r.counts.data());
    }
    state.counters["rows"] = static_cast<double>(rows);
}

void BM_BoxGraph(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        const BoxGraph g = move_graph_in_box(n, 5, -3, 3);
        benchmark::DoNotOptimize(g.edges.data());
    }
}

}  // namespace

BENCHMARK(BM_Census<false>)->Args({3, 5})->Args({4, 7})->Args({5, 7})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_Census<true>)->Args({3, 5})->Args({4, 7})->Args({5, 7})->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RecipeGrid<false>)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RecipeGrid<true>)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_BoxGraph)->Arg(3)->Arg(4)->Arg(5)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
