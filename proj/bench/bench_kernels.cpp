// Serial vs OpenMP window kernels.

#include <benchmark/benchmark.h>

#include "qweyl/weight_module.hpp"

using namespace qweyl;

namespace {

ModuleSpec spec(int n) {
  std::vector<Coord> c;
  for (int i = 0; i < n; ++i) c.push_back(i % 2 == 0 ? Coord::integral(1) : Coord::generic_symbol(1, 0));
  return {ParamContext::symbolic(n), Character(c), ModuleKind::P, Realization::DirectLambda};
}

template <Exec E>
void edge_table(benchmark::State& st) {
  ModuleSpec s = spec(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(build_edge_table(s, st.range(1), E));
  st.SetItemsProcessed(st.iterations() * static_cast<std::int64_t>(Window(s.n(), st.range(1)).size()));
}

template <Exec E>
void oracle_window(benchmark::State& st) {
  ModuleSpec s = spec(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(nphi_oracle_window(s, st.range(1), E));
}

template <Exec E>
void graph(benchmark::State& st) {
  ModuleSpec s = spec(static_cast<int>(st.range(0)));
  for (auto _ : st) benchmark::DoNotOptimize(action_graph(s, st.range(1), E));
}

void kernel_args(benchmark::internal::Benchmark* b) {
  b->Args({1, 64})->Args({2, 8})->Args({2, 16})->Args({3, 5})->Unit(benchmark::kMillisecond);
}

}  // namespace

BENCHMARK(edge_table<Exec::Serial>)->Apply(kernel_args);
BENCHMARK(edge_table<Exec::Parallel>)->Apply(kernel_args);
BENCHMARK(oracle_window<Exec::Serial>)->Apply(kernel_args);
BENCHMARK(oracle_window<Exec::Parallel>)->Apply(kernel_args);
BENCHMARK(graph<Exec::Serial>)->Apply(kernel_args);
BENCHMARK(graph<Exec::Parallel>)->Apply(kernel_args);

BENCHMARK_MAIN();
