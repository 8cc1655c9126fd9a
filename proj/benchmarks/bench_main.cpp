#include "symdom/fibre.hpp"
#include "symdom/intertwine.hpp"
#include "symdom/kernels.hpp"
#include "symdom/positivity.hpp"

#include <benchmark/benchmark.h>

using namespace symdom;

static void BM_LittleKernel(benchmark::State& state)
{
    Rng rng(1);
    const int d = static_cast<int>(state.range(0));
    LittleKernelParams p{d, 4.0, 2};
    Vec z = random_ball_point(rng, d, 0.8), w = random_ball_point(rng, d, 0.8);
    Vec zeta = random_vector(rng, d), omega = random_vector(rng, d);
    for (auto _ : state)
        benchmark::DoNotOptimize(little_kernel(p, z, w, zeta, omega));
}
BENCHMARK(BM_LittleKernel)->Arg(1)->Arg(2)->Arg(4);

static void BM_BigKernelClosed(benchmark::State& state)
{
    Rng rng(2);
    const int n = static_cast<int>(state.range(0));
    BigKernelParams p{2, 4.0, n, std::vector<double>(static_cast<std::size_t>(n) + 1, 1.0)};
    Vec z = random_ball_point(rng, 2, 0.5), w = random_ball_point(rng, 2, 0.5);
    Vec zeta = random_vector(rng, 2, 0.2), omega = random_vector(rng, 2, 0.2);
    for (auto _ : state)
        benchmark::DoNotOptimize(big_kernel_closed(p, z, w, zeta, omega));
}
BENCHMARK(BM_BigKernelClosed)->Arg(1)->Arg(2)->Arg(3);

static void BM_BigKernelTruncated(benchmark::State& state)
{
    Rng rng(3);
    BigKernelParams p{2, 4.0, 2, {1.0, 1.0, 1.0}};
    BigKernel K(p, static_cast<int>(state.range(0)));
    Vec z = random_ball_point(rng, 2, 0.3), w = random_ball_point(rng, 2, 0.3);
    Vec zeta = random_vector(rng, 2, 0.2), omega = random_vector(rng, 2, 0.2);
    for (auto _ : state)
        benchmark::DoNotOptimize(K.eval(z, w, zeta, omega));
}
BENCHMARK(BM_BigKernelTruncated)->Arg(8)->Arg(16);

static void BM_Cocycle(benchmark::State& state)
{
    Rng rng(4);
    const int n = static_cast<int>(state.range(0));
    GroupElement g = random_group_element(rng, 2, 0.8);
    Vec z = random_ball_point(rng, 2, 0.8);
    for (auto _ : state)
        benchmark::DoNotOptimize(cocycle_pi_n(g, z, n));
}
BENCHMARK(BM_Cocycle)->Arg(1)->Arg(3)->Arg(5);

static void BM_ReproducingCheck(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(check_reproducing({2, 4.0, 1}, static_cast<int>(state.range(0)), 2, 7, 1e-9));
}
BENCHMARK(BM_ReproducingCheck)->Arg(2)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_WallachScan(benchmark::State& state)
{
    GramSpec spec{sample_jet_points(2, static_cast<int>(state.range(0)), 0.8, 1.0, 7), 1e-9};
    auto grid = make_grid(-3.0, 3.0, 0.25);
    for (auto _ : state)
        benchmark::DoNotOptimize(wallach_scan(2, 1, grid, spec));
}
BENCHMARK(BM_WallachScan)->Arg(20)->Arg(40)->Unit(benchmark::kMillisecond);

static void BM_CommutantProbe(benchmark::State& state)
{
    CommutantSpec spec;
    spec.block_scalar = state.range(0) == 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(commutant_probe(spec));
}
BENCHMARK(BM_CommutantProbe)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
