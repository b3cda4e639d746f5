#include <benchmark/benchmark.h>

#include "stablesup/laplace.hpp"
#include "stablesup/montecarlo.hpp"
#include "stablesup/oscint.hpp"
#include "stablesup/series.hpp"

using namespace stablesup;

static void BM_GFuncs(benchmark::State& state) {
  const oscint::IntegralDensity d(1.5);
  const double t = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(d.g_checked(t));
}
BENCHMARK(BM_GFuncs)->Arg(1)->Arg(10)->Arg(100);

static void BM_DensitySeries(benchmark::State& state) {
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(series::density_series(1.5, x));
}
BENCHMARK(BM_DensitySeries)->Arg(1)->Arg(4);

static void BM_DensityIntegral(benchmark::State& state) {
  const oscint::IntegralDensity d(1.5);
  const double x = static_cast<double>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(d.density(x));
}
BENCHMARK(BM_DensityIntegral)->Arg(1)->Arg(25)->Arg(200)->Unit(benchmark::kMillisecond);

static void BM_LaplaceExact(benchmark::State& state) {
  double lam = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(laplace::laplace_exact(1.5, lam));
    lam = lam < 20.0 ? lam * 1.1 : 0.1;
  }
}
BENCHMARK(BM_LaplaceExact);

static void BM_SampleStable(benchmark::State& state) {
  auto rng = mc::chunk_rng(42, 0);
  for (auto _ : state) benchmark::DoNotOptimize(mc::sample_stable(1.5, 1e-3, rng));
}
BENCHMARK(BM_SampleStable);
BENCHMARK_MAIN();
