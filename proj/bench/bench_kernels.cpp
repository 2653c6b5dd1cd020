// Benchmarks comparing the OpenMP scan kernels against their serial
// reference implementations.  Not part of the test suite; build the
// fieq_bench target and run it directly.

#include <benchmark/benchmark.h>

#include "fieq/defect.hpp"
#include "fieq/gruss.hpp"
#include "fieq/rng.hpp"
#include "fieq/subadditive.hpp"

namespace {

fieq::Kernel random_kernel(std::size_t n, std::uint64_t seed, double lo, double hi) {
  fieq::Rng rng(seed);
  std::vector<double> values(n * n);
  for (auto& v : values) v = rng.uniform(lo, hi);
  return fieq::Kernel(fieq::PointSet::numbered(n), std::move(values));
}

fieq::Kernel random_weights(std::size_t n, std::uint64_t seed) {
  fieq::Rng rng(seed);
  std::vector<double> values(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i != j) values[i * n + j] = rng.uniform(0.0, 4.0);
    }
  }
  return fieq::Kernel(fieq::PointSet::numbered(n), std::move(values));
}

void bm_defect_scan_parallel(benchmark::State& state) {
  const auto k = random_kernel(static_cast<std::size_t>(state.range(0)), 42, -2.0, 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fieq::defect_scan(fieq::DefectKind::sincov, k));
  }
}

void bm_defect_scan_serial(benchmark::State& state) {
  const auto k = random_kernel(static_cast<std::size_t>(state.range(0)), 42, -2.0, 2.0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fieq::serial::defect_scan(fieq::DefectKind::sincov, k));
  }
}

void bm_closure_parallel(benchmark::State& state) {
  const auto k = random_weights(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fieq::triangle_closure(k));
  }
}

void bm_closure_serial(benchmark::State& state) {
  const auto k = random_weights(static_cast<std::size_t>(state.range(0)), 7);
  for (auto _ : state) {
    benchmark::DoNotOptimize(fieq::serial::triangle_closure(k));
  }
}

void bm_richard_parallel(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(fieq::richard_scan(8, state.range(0), 11));
  }
}

void bm_richard_serial(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(fieq::serial::richard_scan(8, state.range(0), 11));
  }
}

}  // namespace

BENCHMARK(bm_defect_scan_parallel)->Arg(48)->Arg(96)->Arg(160);
BENCHMARK(bm_defect_scan_serial)->Arg(48)->Arg(96)->Arg(160);
BENCHMARK(bm_closure_parallel)->Arg(128)->Arg(256);
BENCHMARK(bm_closure_serial)->Arg(128)->Arg(256);
BENCHMARK(bm_richard_parallel)->Arg(100000);
BENCHMARK(bm_richard_serial)->Arg(100000);

BENCHMARK_MAIN();
