#include <benchmark/benchmark.h>

#include "pell3/binet.hpp"
#include "pell3/lagrange.hpp"
#include "pell3/pell.hpp"

using namespace pell3;

static void BM_Recurrence(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(recurrence_gen(Family::r, state.range(0)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Recurrence)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

static void BM_ClosedForm(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(closed_form(Family::r, state.range(0)));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_ClosedForm)->RangeMultiplier(4)->Range(64, 4096)->Complexity();

static void BM_HornerEval(benchmark::State& state) {
  const DensePoly p = to_dense(recurrence_gen(Family::sigma, state.range(0)));
  const Rational x = make_rational(-7, 5);
  for (auto _ : state) benchmark::DoNotOptimize(eval_rational(p, x));
}
BENCHMARK(BM_HornerEval)->Arg(100)->Arg(1000);

static void BM_SeriesInversion(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(verify_inversion(state.range(0)));
}
BENCHMARK(BM_SeriesInversion)->Arg(16)->Arg(64);

static void BM_BinetSweep(benchmark::State& state) {
  const auto ts = sample_t_values(8, 42);
  for (auto _ : state) {
    for (const Rational& t : ts) {
      const SubstitutionPoint p = substitution_chain(t);
      benchmark::DoNotOptimize(binet_eval(Family::s, state.range(0), p));
    }
  }
}
BENCHMARK(BM_BinetSweep)->Arg(20)->Arg(80);
BENCHMARK_MAIN();
