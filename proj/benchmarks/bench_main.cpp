#include <benchmark/benchmark.h>

#include "overpart/enumeration.hpp"
#include "overpart/identities.hpp"
#include "overpart/qfunctions.hpp"

using namespace overpart;

namespace {

QSeries dense(Exponent prec, long seed) {
  std::vector<Rational> c(static_cast<std::size_t>(prec));
  for (Exponent i = 0; i < prec; ++i) c[static_cast<std::size_t>(i)] = Rational((i * 7 + seed) % 11 - 5 + (i == 0));
  return QSeries::from_coefficients(0, std::move(c));
}

void BM_SeriesMul(benchmark::State& state) {
  const auto prec = state.range(0);
  const auto a = dense(prec, 1);
  const auto b = dense(prec, 4);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
  state.SetComplexityN(prec);
}
BENCHMARK(BM_SeriesMul)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_SeriesInvert(benchmark::State& state) {
  const auto a = dense(state.range(0), 3);
  for (auto _ : state) benchmark::DoNotOptimize(invert(a));
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_SeriesInvert)->RangeMultiplier(2)->Range(32, 512)->Complexity();

void BM_GfPbar(benchmark::State& state) {
  const int t = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(gf_pbar(t, 121));
}
BENCHMARK(BM_GfPbar)->Arg(1)->Arg(4)->Arg(8);

void BM_GfPbarDirect(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(gf_pbar_direct(static_cast<int>(state.range(0)), 121));
}
BENCHMARK(BM_GfPbarDirect)->Arg(1)->Arg(8);

void BM_CountOpbarBounded(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(count_opbar_bounded(n, 6));
}
BENCHMARK(BM_CountOpbarBounded)->Arg(30)->Arg(60)->Arg(90);

void BM_OracleSeriesG(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(oracle_series(OracleKind::g_t, 8, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_OracleSeriesG)->Arg(40)->Arg(60);

void BM_OverQBinomSum(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(over_qbinom_sum(m, m));
}
BENCHMARK(BM_OverQBinomSum)->DenseRange(4, 12, 4);

void BM_OverQBinomRec(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(over_qbinom_rec(m, m));
}
BENCHMARK(BM_OverQBinomRec)->DenseRange(4, 12, 4);

void BM_OverQBinomBox(benchmark::State& state) {
  const int m = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(over_qbinom_box_oracle(m, m));
}
BENCHMARK(BM_OverQBinomBox)->DenseRange(4, 12, 4);

void BM_ProofChain(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(proof_chain_theorem1(static_cast<int>(state.range(0)), 40));
}
BENCHMARK(BM_ProofChain)->Arg(2)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
