// Serial reference against the OpenMP kernels. Run with
//   build/bench/tiltkit_bench --benchmark_filter=Enumerate
#include <benchmark/benchmark.h>

#include "tiltkit/brauer.hpp"
#include "tiltkit/explorer.hpp"
#include "tiltkit/lattice.hpp"

using namespace tiltkit;

namespace {

Execution mode_of(const benchmark::State& state) {
  return state.range(0) == 0 ? Execution::serial : Execution::parallel;
}

void Enumerate(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(enumerate_ribbon_graphs(static_cast<int>(state.range(1)), mode_of(state)));
}
BENCHMARK(Enumerate)->ArgsProduct({{0, 1}, {5, 6}})->Unit(benchmark::kMillisecond);

void Generate(benchmark::State& state) {
  const auto gens = kronecker_generators(3);
  for (auto _ : state) benchmark::DoNotOptimize(generate(gens, static_cast<int>(state.range(1)), mode_of(state)));
}
BENCHMARK(Generate)->ArgsProduct({{0, 1}, {12, 16}})->Unit(benchmark::kMillisecond);

void Solutions(benchmark::State& state) {
  const RationalMatrix form{{4, 1, 1, 0}, {1, 4, 1, 1}, {1, 1, 4, 1}, {0, 1, 1, 4}};
  for (auto _ : state) benchmark::DoNotOptimize(solutions(form, state.range(1), mode_of(state)));
}
BENCHMARK(Solutions)->ArgsProduct({{0, 1}, {40, 120}})->Unit(benchmark::kMillisecond);

void BoundedBox(benchmark::State& state) {
  const RationalMatrix form{{2, 3, 0}, {3, 2, 1}, {0, 1, -2}};
  for (auto _ : state) benchmark::DoNotOptimize(bounded_box(form, 2, static_cast<int>(state.range(1)), mode_of(state)));
}
BENCHMARK(BoundedBox)->ArgsProduct({{0, 1}, {10, 20}})->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
