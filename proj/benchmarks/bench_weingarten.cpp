// Microbenchmarks for the table builders, the exact integrator, and the
// Haar samplers. Character tables are preloaded in each setup so the loops
// measure steady-state cost, not one-time memoization.

#include <benchmark/benchmark.h>

#include "wg/characters.hpp"
#include "wg/haar_mc.hpp"
#include "wg/integrator.hpp"
#include "wg/partition.hpp"
#include "wg/weingarten.hpp"

namespace {

void BM_UnitaryTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  wg::preload_characters(n);
  for (auto _ : state) {
    auto table = wg::wg_table(wg::GroupKind::Unitary, n, N);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_UnitaryTable)->Args({4, 10})->Args({6, 10})->Args({8, 10});

void BM_OrthogonalTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  wg::preload_characters(2 * n);
  for (auto _ : state) {
    auto table = wg::wg_table(wg::GroupKind::Orthogonal, n, N);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_OrthogonalTable)->Args({3, 6})->Args({4, 6})->Args({5, 6});

void BM_SymplecticTable(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  wg::preload_characters(2 * n);
  for (auto _ : state) {
    auto table = wg::wg_table(wg::GroupKind::Symplectic, n, N);
    benchmark::DoNotOptimize(table);
  }
}
BENCHMARK(BM_SymplecticTable)->Args({3, 6})->Args({4, 6})->Args({5, 6});

void BM_SingleValue(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  wg::preload_characters(n);
  const wg::Partition full_cycle({n});
  for (auto _ : state) {
    auto value = wg::wg_unitary(full_cycle, 10);
    benchmark::DoNotOptimize(value);
  }
}
BENCHMARK(BM_SingleValue)->Arg(6)->Arg(8);

void BM_IntegrateUnitary(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  wg::MomentSpec spec;
  spec.group = wg::GroupKind::Unitary;
  spec.dimension = 5;
  for (int k = 0; k < n; ++k) {
    spec.a.push_back(1 + k % 2);
    spec.b.push_back(1 + k % 3);
    spec.c.push_back(1 + k % 3);
    spec.d.push_back(1 + k % 2);
  }
  wg::preload_characters(n);
  for (auto _ : state) {
    auto value = wg::integrate(spec);
    benchmark::DoNotOptimize(value);
  }
}
BENCHMARK(BM_IntegrateUnitary)->Arg(4)->Arg(6);

void BM_SampleUnitary(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  wg::CounterRng rng(12345, 0);
  for (auto _ : state) {
    auto U = wg::sample_unitary(N, rng);
    benchmark::DoNotOptimize(U);
  }
}
BENCHMARK(BM_SampleUnitary)->Arg(4)->Arg(10);

void BM_SampleOrthogonal(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  wg::CounterRng rng(12345, 0);
  for (auto _ : state) {
    auto O = wg::sample_orthogonal(N, rng);
    benchmark::DoNotOptimize(O);
  }
}
BENCHMARK(BM_SampleOrthogonal)->Arg(4)->Arg(10);

void BM_SampleSymplectic(benchmark::State& state) {
  const int N = static_cast<int>(state.range(0));
  wg::CounterRng rng(12345, 0);
  for (auto _ : state) {
    auto S = wg::sample_symplectic(N, rng);
    benchmark::DoNotOptimize(S);
  }
}
BENCHMARK(BM_SampleSymplectic)->Arg(2)->Arg(5);

void BM_EstimateMoment(benchmark::State& state) {
  wg::MomentSpec spec;
  spec.group = wg::GroupKind::Unitary;
  spec.dimension = 3;
  spec.a = spec.b = spec.c = spec.d = {1, 2};
  for (auto _ : state) {
    auto est = wg::estimate_moment(spec, 1000, 42, 1);
    benchmark::DoNotOptimize(est);
  }
}
BENCHMARK(BM_EstimateMoment);

}  // namespace

BENCHMARK_MAIN();
