// Serial reference vs OpenMP kernels.

#include <benchmark/benchmark.h>

#include "eqarea/characteristics.hpp"
#include "eqarea/godunov.hpp"
#include "eqarea/shock_path.hpp"

namespace {

using namespace eqarea;

const Flux& burgers() {
  static const Flux f = builtin_flux("burgers");
  return f;
}

const PiecewiseProfile& gaussian_triple() {
  static const PiecewiseProfile p = builtin_profile("gaussian_triple");
  return p;
}

void BM_ShearSerial(benchmark::State& state) {
  const auto g0 = sample_gamma0(gaussian_triple(), static_cast<std::size_t>(state.range(0)), 64);
  for (auto _ : state) benchmark::DoNotOptimize(shear_polyline_serial(burgers(), g0, 4.25));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_ShearParallel(benchmark::State& state) {
  const auto g0 = sample_gamma0(gaussian_triple(), static_cast<std::size_t>(state.range(0)), 64);
  for (auto _ : state) benchmark::DoNotOptimize(shear_polyline(burgers(), g0, 4.25));
  state.SetItemsProcessed(state.iterations() * state.range(0));
}

void BM_GodunovSerial(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(godunov_solve_serial(burgers(), gaussian_triple(), 4.25, n));
}

void BM_GodunovParallel(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(godunov_solve(burgers(), gaussian_triple(), 4.25, n));
}

void BM_Sweep(benchmark::State& state) {
  const auto jobs = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(sweep(burgers(), gaussian_triple(), 0.0, 10.0, 101, {}, jobs));
  }
}

}  // namespace

BENCHMARK(BM_ShearSerial)->Arg(1000)->Arg(100000)->Arg(1000000);
BENCHMARK(BM_ShearParallel)->Arg(1000)->Arg(100000)->Arg(1000000);
BENCHMARK(BM_GodunovSerial)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GodunovParallel)->Arg(1000)->Arg(4000)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Sweep)->Arg(1)->Arg(4)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
