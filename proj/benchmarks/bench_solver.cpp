#include <dominion/gadget.hpp>
#include <dominion/mds.hpp>
#include <dominion/named_graphs.hpp>
#include <dominion/reduction.hpp>

#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>

using namespace dominion;

static void bm_min_dominating_cubic(benchmark::State & state)
{
    std::mt19937_64 rng(1);
    auto g = random_regular(static_cast<int>(state.range(0)), 3, rng);
    auto options = mds::default_options();
    options.canonical_witness = false;
    for (auto _ : state)
        benchmark::DoNotOptimize(mds::min_dominating(g, options).size);
}
BENCHMARK(bm_min_dominating_cubic)->Arg(20)->Arg(40)->Arg(60)->Unit(benchmark::kMillisecond);

static void bm_min_dominating_random(benchmark::State & state)
{
    std::mt19937_64 rng(2);
    auto g = random_graph(static_cast<int>(state.range(0)), 0.15, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(mds::min_dominating(g).size);
}
BENCHMARK(bm_min_dominating_random)->Arg(20)->Arg(30)->Arg(40)->Unit(benchmark::kMillisecond);

static void bm_independent_dominating(benchmark::State & state)
{
    std::mt19937_64 rng(3);
    auto g = random_graph(static_cast<int>(state.range(0)), 0.2, rng);
    for (auto _ : state)
        benchmark::DoNotOptimize(mds::min_independent_dominating(g).size);
}
BENCHMARK(bm_independent_dominating)->Arg(20)->Arg(30)->Unit(benchmark::kMillisecond);

static void bm_verify_butterfly_reduction(benchmark::State & state)
{
    auto file = std::filesystem::path(DOMINION_DATA_DIR) / "gadgets" / "butterfly9.json";
    auto gadget = gadgets::VerifiedGadget::check(gadgets::read_gadget_file(file));
    auto r = reductions::reduce_cubic_butterfly(petersen(), gadget);
    auto options = mds::default_options();
    options.canonical_witness = false;
    for (auto _ : state)
        benchmark::DoNotOptimize(reductions::verify_reduction(petersen(), r, options).holds);
}
BENCHMARK(bm_verify_butterfly_reduction)->Unit(benchmark::kMillisecond);
