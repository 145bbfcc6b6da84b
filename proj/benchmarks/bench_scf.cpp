#include <benchmark/benchmark.h>

#include "qsym/scf.hpp"

namespace {

using namespace qsym;

void BM_MultiplyClassFunctions(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ClassFunction a = chi_dot(Subset(n, {1}), 3), b = kappa(Subset(n), 3);
  for (auto _ : state) benchmark::DoNotOptimize(m(a, b));
}
BENCHMARK(BM_MultiplyClassFunctions)->DenseRange(2, 4);

void BM_MA(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ClassFunction a = chi_dot(Subset(n, {1}), 3), b = chi_dot(Subset(n), 3);
  Subset s = Subset::interval(2 * n + 1, 1, n);
  for (auto _ : state) benchmark::DoNotOptimize(m_A(a, b, s));
}
BENCHMARK(BM_MA)->DenseRange(2, 4);

void BM_Characteristic(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  ClassFunction g = mk_G_classfn(Subset(n, {1}), 2);
  for (auto _ : state) benchmark::DoNotOptimize(ch(g));
}
BENCHMARK(BM_Characteristic)->DenseRange(2, 7);

void BM_KappaProductRule(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(kappa_product(Subset(n, {1}), Subset(n), 3));
}
BENCHMARK(BM_KappaProductRule)->DenseRange(2, 4);

}  // namespace
BENCHMARK_MAIN();
