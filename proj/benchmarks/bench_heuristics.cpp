#include <benchmark/benchmark.h>

#include "cadorder/generator.hpp"
#include "cadorder/heuristics.hpp"
#include "cadorder/projection.hpp"

using namespace cadorder;

namespace {

Problem fixture(std::uint64_t seed) {
  GenParams params;
  params.max_tdeg = 2;
  params.terms = 3;
  params.seed = seed;
  return random_problem("11", params);
}

void BM_Cascade(benchmark::State& state) {
  auto p = fixture(7);
  auto kind = state.range(0) == 0 ? ProjectionKind::kFull : ProjectionKind::kTti;
  for (auto _ : state) {
    benchmark::DoNotOptimize(project_cascade(p, VariableOrdering({0, 1, 2}), kind));
  }
}
BENCHMARK(BM_Cascade)->Arg(0)->Arg(1);

void BM_Suggest(benchmark::State& state) {
  auto p = fixture(7);
  auto id = kAllHeuristics[static_cast<std::size_t>(state.range(0))];
  state.SetLabel(std::string(heuristic_name(id)));
  for (auto _ : state) benchmark::DoNotOptimize(suggest(p, id));
}
BENCHMARK(BM_Suggest)->DenseRange(0, 11)->Unit(benchmark::kMillisecond);

}  // namespace
