#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "stackedcc/collinear.hpp"
#include "stackedcc/kernels.hpp"
#include "stackedcc/special_configs.hpp"

using namespace stackedcc;

namespace {

struct Cloud {
  std::vector<double> m;
  std::vector<Vec3> q;
  std::vector<Vec3> out;
};

Cloud make_cloud(std::size_t n) {
  std::mt19937_64 rng(n);
  std::uniform_real_distribution<double> u(-1.0, 1.0), mass(0.1, 2.0);
  Cloud c;
  for (std::size_t i = 0; i < n; ++i) {
    c.m.push_back(mass(rng));
    c.q.emplace_back(u(rng), u(rng), u(rng));
  }
  c.out.resize(n);
  return c;
}

template <auto Kernel>
void BM_accelerations(benchmark::State& state) {
  auto c = make_cloud(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    Kernel(c.m, c.q, c.out);
    benchmark::DoNotOptimize(c.out.data());
  }
  state.SetComplexityN(state.range(0));
}

template <auto Kernel>
void BM_pair_sums(benchmark::State& state) {
  const auto c = make_cloud(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Kernel(c.m, c.q));
  state.SetComplexityN(state.range(0));
}

void BM_root_sweep_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(root_count_sweep_serial(state.range(0), 7));
}

void BM_root_sweep_omp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(root_count_sweep(state.range(0), 7));
}

void BM_ngon_serial(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ngon_table_serial(2, static_cast<int>(state.range(0))));
}

void BM_ngon_omp(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(ngon_table(2, static_cast<int>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_accelerations<kernels::serial::accelerations>)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_accelerations<kernels::omp::accelerations>)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_pair_sums<kernels::serial::pair_sums>)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_pair_sums<kernels::omp::pair_sums>)->RangeMultiplier(4)->Range(64, 4096);
BENCHMARK(BM_root_sweep_serial)->Arg(100000);
BENCHMARK(BM_root_sweep_omp)->Arg(100000);
BENCHMARK(BM_ngon_serial)->Arg(2000);
BENCHMARK(BM_ngon_omp)->Arg(2000);

BENCHMARK_MAIN();
