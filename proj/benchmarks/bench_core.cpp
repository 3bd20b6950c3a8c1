#include <benchmark/benchmark.h>

#include "cycdr/bench.hpp"
#include "cycdr/instances.hpp"
#include "cycdr/operators.hpp"
#include "cycdr/product.hpp"

using namespace cycdr;

namespace {

void BM_ProjectBall(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = gen_balls(n, 1, 7);
  const Vector x = gen_x0(n, 8);
  RandomStream rng(9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(project(inst.sets.front(), x, rng));
  }
}
BENCHMARK(BM_ProjectBall)->Arg(100)->Arg(1000);

void BM_DrStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto inst = gen_balls(n, 2, 7);
  const Vector x = gen_x0(n, 8);
  RandomStream rng(9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dr_step(inst.sets[0], inst.sets[1], x, rng));
  }
}
BENCHMARK(BM_DrStep)->Arg(100)->Arg(1000);

void BM_CyclicPass(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  const auto inst = gen_balls(n, N, 7);
  const Vector x = gen_x0(n, 8);
  RandomStream rng(9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(cyclic_step(inst.sets, x, rng).point);
  }
}
BENCHMARK(BM_CyclicPass)->Args({100, 10})->Args({100, 100})->Args({1000, 10});

void BM_AveragedPass(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  const auto inst = gen_balls(n, N, 7);
  const Vector x = gen_x0(n, 8);
  RandomStream rng(9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(averaged_step(inst.sets, x, rng));
  }
}
BENCHMARK(BM_AveragedPass)->Args({100, 10})->Args({100, 100});

void BM_ProductDrStep(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  const auto inst = gen_balls(n, N, 7);
  const auto [c, d] = lift(inst.sets);
  const Vector x = embed_diagonal(gen_x0(n, 8), N);
  RandomStream rng(9);
  for (auto _ : state) {
    benchmark::DoNotOptimize(dr_step(c, d, x, rng));
  }
}
BENCHMARK(BM_ProductDrStep)->Args({100, 10})->Args({100, 100});

void BM_GenBalls(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(gen_balls(n, 10, seed++));
  }
}
BENCHMARK(BM_GenBalls)->Arg(100)->Arg(1000);

void BM_SolveCyclicBalls(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const int N = static_cast<int>(state.range(1));
  std::uint64_t seed = 0;
  for (auto _ : state) {
    const auto inst = gen_balls(n, N, seed);
    const Vector x0 = gen_x0(n, seed);
    RandomStream rng(seed++);
    benchmark::DoNotOptimize(run_trial(Method::CyclicDR, inst, x0, 1e-6, 1000, rng));
  }
}
BENCHMARK(BM_SolveCyclicBalls)->Args({100, 10});

}  // namespace

BENCHMARK_MAIN();
