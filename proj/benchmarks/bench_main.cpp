// SPDX-License-Identifier: Apache-2.0
#include <benchmark/benchmark.h>

#include <random>

#include "fuzzymt/fuzzymt.hpp"

namespace {

using namespace fuzzymt;

Algebra product_ss() {
  return Algebra(TNorm::product(),
                 {ImplicationConvention::S, NegationConvention::S});
}

void BM_TNormApply(benchmark::State& state) {
  const TNorm t = TNorm::lukasiewicz();
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  TruthValue x(unit(rng)), y(unit(rng));
  for (auto _ : state) {
    benchmark::DoNotOptimize(t.apply(x, y));
  }
}
BENCHMARK(BM_TNormApply);

void BM_ResiduumNumeric(benchmark::State& state) {
  auto product_fn = [](double a, double b) { return a * b; };
  for (auto _ : state) {
    benchmark::DoNotOptimize(residuum_numeric(product_fn, TruthValue(0.8),
                                              TruthValue(0.2), 1e-12));
  }
}
BENCHMARK(BM_ResiduumNumeric);

void BM_ModusTollens(benchmark::State& state) {
  const Algebra alg = product_ss();
  const MTPremises premises{TruthValue(0.95), TruthValue(1.0)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(modus_tollens(alg, premises));
  }
}
BENCHMARK(BM_ModusTollens);

void BM_ParseEvaluate(benchmark::State& state) {
  const Algebra alg = product_ss();
  const AtomValuation v{{"a", TruthValue(0.3)},
                        {"b", TruthValue(0.9)},
                        {"c", TruthValue(0.5)}};
  for (auto _ : state) {
    const Formula f = parse("!a -> (b | c) & a");
    benchmark::DoNotOptimize(evaluate(f, v, alg));
  }
}
BENCHMARK(BM_ParseEvaluate);

void BM_PosteriorGrid(benchmark::State& state) {
  const int resolution = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(posterior_grid(0.04, resolution));
  }
}
BENCHMARK(BM_PosteriorGrid)->Arg(101)->Arg(1001);

} // namespace

BENCHMARK_MAIN();
