#include <dominion/dichotomy.hpp>
#include <dominion/named_graphs.hpp>
#include <dominion/recognition.hpp>

#include <benchmark/benchmark.h>

#include <random>

using namespace dominion;

static void bm_contains_induced(benchmark::State & state)
{
    std::mt19937_64 rng(4);
    auto host = random_graph(static_cast<int>(state.range(0)), 0.1, rng);
    auto pattern = cycle_graph(6);
    for (auto _ : state)
        benchmark::DoNotOptimize(recognition::contains_induced(host, pattern).has_value());
}
BENCHMARK(bm_contains_induced)->Arg(30)->Arg(60)->Arg(120)->Unit(benchmark::kMicrosecond);

static void bm_claw_free(benchmark::State & state)
{
    std::mt19937_64 rng(5);
    auto host = line_graph(random_regular(static_cast<int>(state.range(0)), 3, rng)).graph;
    for (auto _ : state)
        benchmark::DoNotOptimize(recognition::is_claw_free(host));
}
BENCHMARK(bm_claw_free)->Arg(40)->Arg(200)->Unit(benchmark::kMicrosecond);

static void bm_classify_all(benchmark::State & state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(dichotomy::classify_all(static_cast<int>(state.range(0))).size());
}
BENCHMARK(bm_classify_all)->Arg(5)->Arg(6)->Unit(benchmark::kMillisecond);
