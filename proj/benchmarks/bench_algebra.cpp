#include <benchmark/benchmark.h>

#include "cadorder/algebra.hpp"
#include "cadorder/generator.hpp"
#include "cadorder/realroots.hpp"

using namespace cadorder;

namespace {

std::vector<Polynomial> draw(unsigned vars, unsigned tdeg, unsigned terms, std::size_t n,
                             std::uint64_t seed) {
  GenParams params;
  params.num_vars = vars;
  params.max_tdeg = tdeg;
  params.terms = terms;
  RngStream stream(seed);
  std::vector<Polynomial> out;
  while (out.size() < n) {
    auto f = random_polynomial(params, stream);
    if (f.contains(0)) out.push_back(f);
  }
  return out;
}

void BM_ResultantBivariate(benchmark::State& state) {
  auto polys = draw(2, static_cast<unsigned>(state.range(0)), 5, 32, 1);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(resultant(polys[i % 32], polys[(i + 1) % 32], 0));
    ++i;
  }
}
BENCHMARK(BM_ResultantBivariate)->Arg(4)->Arg(8)->Arg(12);

void BM_ResultantTrivariate(benchmark::State& state) {
  auto polys = draw(3, static_cast<unsigned>(state.range(0)), 4, 32, 2);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(resultant(polys[i % 32], polys[(i + 1) % 32], 0));
    ++i;
  }
}
BENCHMARK(BM_ResultantTrivariate)->Arg(3)->Arg(4)->Arg(6);

void BM_Discriminant(benchmark::State& state) {
  auto polys = draw(3, 4, 4, 32, 3);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(discriminant(polys[i++ % 32], 0));
}
BENCHMARK(BM_Discriminant);

void BM_SturmCount(benchmark::State& state) {
  auto polys = draw(1, static_cast<unsigned>(state.range(0)), 8, 16, 4);
  std::size_t i = 0;
  for (auto _ : state) benchmark::DoNotOptimize(count_real_roots(polys[i++ % 16], 0));
}
BENCHMARK(BM_SturmCount)->Arg(8)->Arg(32)->Arg(128);

}  // namespace
