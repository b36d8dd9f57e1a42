#include "treepoly/caterpillar.hpp"
#include "treepoly/classify.hpp"
#include "treepoly/csf.hpp"
#include "treepoly/degree_poly.hpp"
#include "treepoly/free_trees.hpp"
#include "treepoly/subtree_census.hpp"

#include <benchmark/benchmark.h>

#include <vector>

using namespace treepoly;

namespace {

Tree spine_tree(int n)
{
    std::vector<int> parts(static_cast<std::size_t>(n / 3), 3);
    parts.front() = 2;
    parts.back() = 2;
    return cat(Composition(parts));
}

void BM_Gdp(benchmark::State& state)
{
    const Tree t = spine_tree(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(gdp(t));
    state.SetLabel("n=" + std::to_string(t.size()));
}
BENCHMARK(BM_Gdp)->Arg(12)->Arg(24)->Arg(48);

void BM_Hdp(benchmark::State& state)
{
    const Tree t = spine_tree(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(hdp(t));
    state.SetLabel("n=" + std::to_string(t.size()));
}
BENCHMARK(BM_Hdp)->Arg(12)->Arg(18)->Arg(24);

void BM_CsfPowersum(benchmark::State& state)
{
    const Tree t = spine_tree(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(csf_powersum(t));
    state.SetLabel("n=" + std::to_string(t.size()));
}
BENCHMARK(BM_CsfPowersum)->Arg(12)->Arg(18)->Arg(24);

void BM_SubtreeCensus(benchmark::State& state)
{
    const Tree t = spine_tree(static_cast<int>(state.range(0)));
    for (auto _ : state)
        benchmark::DoNotOptimize(SubtreeCensus(t).total());
    state.SetLabel("n=" + std::to_string(t.size()));
}
BENCHMARK(BM_SubtreeCensus)->Arg(12)->Arg(18)->Arg(24);

void BM_FreeTreeGeneration(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    for (auto _ : state) {
        std::size_t count = 0;
        for_each_free_tree(n, [&](const Tree&) { ++count; });
        benchmark::DoNotOptimize(count);
    }
}
BENCHMARK(BM_FreeTreeGeneration)->Arg(10)->Arg(12)->Arg(14);

void BM_Classify(benchmark::State& state)
{
    ClassifyOptions o;
    o.n = static_cast<int>(state.range(0));
    o.tag = InvariantTag::hdp;
    o.jobs = static_cast<int>(state.range(1));
    for (auto _ : state)
        benchmark::DoNotOptimize(classify(o).num_trees);
}
BENCHMARK(BM_Classify)->Args({10, 1})->Args({12, 1})->Args({12, 2})->Unit(benchmark::kMillisecond);

} // namespace
BENCHMARK_MAIN();
