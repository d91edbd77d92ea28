// Serial reference vs OpenMP kernel for the three parallel hot spots.
#include <benchmark/benchmark.h>

#include "lpg/numkernel.hpp"
#include "lpg/paths.hpp"
#include "lpg/series.hpp"

using namespace lpg;

namespace {

PowerSeries dense(int order) {
  // sqrt(1 - 6z + 5z^2): every coefficient is a nontrivial rational
  return sqrt(PowerSeries::polynomial(Var::z, order, {1, -6, 5}));
}

template <PowerSeries (*Mul)(const PowerSeries&, const PowerSeries&)>
void BM_mul(benchmark::State& state) {
  const PowerSeries a = dense(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(Mul(a, a));
  state.SetComplexityN(state.range(0));
}

template <std::vector<Integer> (*Row)(long, const Integer&)>
void BM_trinomial_row(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(Row(state.range(0), Integer(3)));
  state.SetComplexityN(state.range(0));
}

template <std::vector<LatticePath> (*Gen)(const PathRules&, int, int, int)>
void BM_generate(benchmark::State& state) {
  const MotzkinRules rules(3, kUnbounded);
  for (auto _ : state) benchmark::DoNotOptimize(Gen(rules, static_cast<int>(state.range(0)), 0, 0));
}

}  // namespace

BENCHMARK(BM_mul<mul_serial>)->Name("mul/serial")->RangeMultiplier(2)->Range(32, 256)->Complexity();
BENCHMARK(BM_mul<mul_parallel>)->Name("mul/parallel")->RangeMultiplier(2)->Range(32, 256)->Complexity();
BENCHMARK(BM_trinomial_row<trinomial_row_serial>)->Name("trinomial_row/serial")->RangeMultiplier(2)->Range(256, 1024);
BENCHMARK(BM_trinomial_row<trinomial_row>)->Name("trinomial_row/parallel")->RangeMultiplier(2)->Range(256, 1024);
BENCHMARK(BM_generate<generate_serial>)->Name("generate/serial")->DenseRange(8, 10);
BENCHMARK(BM_generate<generate>)->Name("generate/parallel")->DenseRange(8, 10);

BENCHMARK_MAIN();
