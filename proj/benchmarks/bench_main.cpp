#include <benchmark/benchmark.h>

#include "ivkit/cone.hpp"
#include "ivkit/factor.hpp"
#include "ivkit/intpoly.hpp"
#include "ivkit/puiseux.hpp"

using namespace ivkit;

static void BM_BinomialIrreducible(benchmark::State& state) {
  const auto n = static_cast<unsigned>(state.range(0));
  intpoly::IVPoly f(QPoly::binomial(n));
  for (auto _ : state) benchmark::DoNotOptimize(intpoly::is_irreducible(f));
}
BENCHMARK(BM_BinomialIrreducible)->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

static void BM_FactorizationsHF(benchmark::State& state) {
  intpoly::IVPoly f(QPoly::binomial(6) * Rational(6));
  for (auto _ : state) benchmark::DoNotOptimize(intpoly::factorizations(f));
}
BENCHMARK(BM_FactorizationsHF)->Unit(benchmark::kMillisecond);

static void BM_FactorOverQ(benchmark::State& state) {
  // x^n - 1: many cyclotomic factors, exercises recombination.
  std::vector<Rational> c(static_cast<std::size_t>(state.range(0)) + 1, Rational(0));
  c.front() = -1;
  c.back() = 1;
  QPoly f(c);
  for (auto _ : state) benchmark::DoNotOptimize(factor_over_q(f));
}
BENCHMARK(BM_FactorOverQ)->Arg(12)->Arg(24)->Arg(36)->Unit(benchmark::kMillisecond);

static void BM_GramsDecompose(benchmark::State& state) {
  auto g = puiseux::MonoidSpec::grams();
  Rational q = 0;
  for (std::size_t i = 0; i < 12; ++i) q += g.generator(i) * Rational(static_cast<long>(i + 1));
  for (auto _ : state) benchmark::DoNotOptimize(puiseux::grams_decompose(q));
}
BENCHMARK(BM_GramsDecompose);

static void BM_ConeMass(benchmark::State& state) {
  auto spec = cone::ConeSpec::truncated(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cone::common_divisor_mass(1, spec));
}
BENCHMARK(BM_ConeMass)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

static void BM_ConeEliminate(benchmark::State& state) {
  auto spec = cone::ConeSpec::truncated(static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(cone::common_divisor_exists_fm(1, spec));
}
BENCHMARK(BM_ConeEliminate)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);
BENCHMARK_MAIN();
