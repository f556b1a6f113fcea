#include <benchmark/benchmark.h>

#include <random>

#include "curvecount/experiment.hpp"
#include "curvecount/extension_field.hpp"
#include "curvecount/smoothness.hpp"
#include "curvecount/statistics.hpp"

using namespace curvecount;

static void BM_PrimeFieldMul(benchmark::State& state) {
  const PrimeField F(2147483647U);
  PrimeField::Element a = 12345, b = 67891;
  for (auto _ : state) {
    a = F.mul(a, b);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_PrimeFieldMul);

static void BM_ExtensionFieldMul(benchmark::State& state) {
  const ExtensionField F(canonical_descriptor(2, static_cast<int>(state.range(0))));
  auto a = F.generator();
  const auto b = F.add(F.generator(), F.one());
  for (auto _ : state) {
    a = F.mul(a, b);
    benchmark::DoNotOptimize(a);
  }
}
BENCHMARK(BM_ExtensionFieldMul)->Arg(8)->Arg(36);

static void BM_IsSmoothPlane(benchmark::State& state) {
  const auto p = static_cast<std::uint32_t>(state.range(0));
  const int d = static_cast<int>(state.range(1));
  const SurfaceModel S{Surface::P2, p};
  std::mt19937_64 rng(1);
  for (auto _ : state) {
    state.PauseTiming();
    const Form f = sample_form(p, 2, d, rng);
    state.ResumeTiming();
    benchmark::DoNotOptimize(is_smooth(S, f));
  }
}
BENCHMARK(BM_IsSmoothPlane)->Args({2, 4})->Args({2, 8})->Args({3, 6})->Unit(benchmark::kMicrosecond);

static void BM_IsSmoothQuadric(benchmark::State& state) {
  const SurfaceModel S{Surface::SegreQuadric, 2};
  std::mt19937_64 rng(2);
  for (auto _ : state) {
    state.PauseTiming();
    const BiForm f = sample_biform(2, static_cast<int>(state.range(0)), rng);
    state.ResumeTiming();
    benchmark::DoNotOptimize(is_smooth(S, f));
  }
}
BENCHMARK(BM_IsSmoothQuadric)->Arg(4)->Unit(benchmark::kMicrosecond);

static void BM_OracleScan(benchmark::State& state) {
  const SurfaceModel S{Surface::P2, 2};
  const int d = static_cast<int>(state.range(0));
  std::mt19937_64 rng(3);
  for (auto _ : state) {
    state.PauseTiming();
    const Form f = sample_form(2, 2, d, rng);
    state.ResumeTiming();
    benchmark::DoNotOptimize(brute_force_singular(S, f, oracle_completeness_bound(Surface::P2, d)));
  }
}
BENCHMARK(BM_OracleScan)->Arg(3)->Arg(4)->Unit(benchmark::kMillisecond);

static void BM_KolmogorovSmirnov(benchmark::State& state) {
  const Rational r(3, 7);
  for (auto _ : state) benchmark::DoNotOptimize(ks_normalized_binomial(static_cast<std::uint64_t>(state.range(0)), r));
}
BENCHMARK(BM_KolmogorovSmirnov)->Arg(100)->Arg(10000)->Unit(benchmark::kMillisecond);

static void BM_RunExperiment(benchmark::State& state) {
  ExperimentConfig c;
  c.p = 2;
  c.degree = 8;
  c.mode = RunMode::Sample;
  c.sample_count = 2048;
  c.workers = 1;
  for (auto _ : state) benchmark::DoNotOptimize(run_experiment(c));
}
BENCHMARK(BM_RunExperiment)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
