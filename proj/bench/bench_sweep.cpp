#include <benchmark/benchmark.h>

#include "pebbling/numbers.hpp"
#include "pebbling/reductions.hpp"
#include "pebbling/solver.hpp"

using namespace pebbling;

namespace {

NumberOptions sweep(bool parallel) {
  NumberOptions o;
  o.parallel = parallel;
  return o;
}

void BM_CoverNumberPath(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  const bool parallel = state.range(1) != 0;
  const Graph g = Graph::path(n);
  for (auto _ : state) benchmark::DoNotOptimize(cover_pebbling_number(g, Demand::unit(n), sweep(parallel)));
}
BENCHMARK(BM_CoverNumberPath)->ArgsProduct({{4, 5}, {0, 1}})->ArgNames({"n", "parallel"})->Unit(benchmark::kMillisecond);

void BM_PebblingNumberPath(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  const Graph g = Graph::path(5);
  for (auto _ : state) benchmark::DoNotOptimize(pebbling_number(g, sweep(parallel)));
}
BENCHMARK(BM_PebblingNumberPath)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_CoverNumberCycle(benchmark::State& state) {
  const bool parallel = state.range(0) != 0;
  const Graph g = Graph::cycle(6);
  for (auto _ : state) benchmark::DoNotOptimize(cover_pebbling_number(g, Demand::unit(6), sweep(parallel)));
}
BENCHMARK(BM_CoverNumberCycle)->Arg(0)->Arg(1)->ArgName("parallel")->Unit(benchmark::kMillisecond);

void BM_SolveNoCoverReduction(benchmark::State& state) {
  const X4CInstance inst(2, {{0, 1, 2, 3}, {2, 3, 4, 5}, {3, 4, 6, 7}});
  const ReducedInstance r = reduce_to_cover_solvability(inst);
  for (auto _ : state) benchmark::DoNotOptimize(is_cover_solvable(r.graph, r.config, r.demand));
}
BENCHMARK(BM_SolveNoCoverReduction)->Unit(benchmark::kMicrosecond);

}  // namespace

BENCHMARK_MAIN();
