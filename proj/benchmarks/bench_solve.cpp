#include "ldg/assembly1d.hpp"
#include "ldg/assembly2d.hpp"
#include "ldg/linalg.hpp"
#include "ldg/mesh.hpp"
#include "ldg/problems.hpp"

#include <benchmark/benchmark.h>

namespace {

constexpr double kEps = 1e-8;

void BM_Assemble1D(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const auto mesh = ldg::build_shishkin_1d({kEps, 1.0, k + 1.0, n});
    const auto pb = ldg::layer1d(kEps);
    const auto cfg = ldg::FluxConfig::paper(kEps, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ldg::assemble(mesh, pb, k, cfg));
    }
}
BENCHMARK(BM_Assemble1D)->Args({256, 1})->Args({1024, 1})->Args({1024, 3});

void BM_Solve1D(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const auto mesh = ldg::build_shishkin_1d({kEps, 1.0, k + 1.0, n});
    const auto pb = ldg::layer1d(kEps);
    const auto sys = ldg::assemble(mesh, pb, k, ldg::FluxConfig::paper(kEps, n));
    for (auto _ : state) {
        benchmark::DoNotOptimize(ldg::lu_solve(sys.matrix, sys.rhs));
    }
}
BENCHMARK(BM_Solve1D)->Args({256, 1})->Args({1024, 1})->Args({1024, 3});

void BM_Solve2D(benchmark::State& state)
{
    const int n = static_cast<int>(state.range(0));
    const int k = static_cast<int>(state.range(1));
    const auto m = ldg::build_shishkin_1d({kEps, 1.0, k + 1.0, n});
    const auto mesh = ldg::build_tensor_2d(m, m);
    const auto pb = ldg::layer2d(kEps);
    const auto cfg = ldg::FluxConfig2D::paper(kEps, n, n);
    for (auto _ : state) {
        benchmark::DoNotOptimize(ldg::solve_ldg_2d(mesh, pb, k, cfg));
    }
}
BENCHMARK(BM_Solve2D)->Args({16, 1})->Args({32, 1})->Args({16, 2})->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
