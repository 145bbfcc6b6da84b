#include <benchmark/benchmark.h>

#include "qsym/oracle.hpp"

namespace {

using namespace qsym;

Composition ones(int n) { return Composition(std::vector<int>(n, 1)); }

void BM_ProductRuleD(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(product_rule(BasisKind::D, ones(n), ones(n)));
}
BENCHMARK(BM_ProductRuleD)->DenseRange(1, 4);

void BM_ProductRuleG(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(product_rule(BasisKind::G, Composition{n}, ones(n)));
}
BENCHMARK(BM_ProductRuleG)->DenseRange(1, 3);

void BM_ProductRuleMq(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(product_rule(BasisKind::Mq, ones(n), Composition{n}));
}
BENCHMARK(BM_ProductRuleMq)->DenseRange(1, 3);

void BM_OracleProductD(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(oracle_product(BasisKind::D, ones(n), Composition{n}));
}
BENCHMARK(BM_OracleProductD)->DenseRange(1, 3)->Unit(benchmark::kMillisecond);

void BM_ConvertGToM(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(to_M(QSymElement::single(BasisKind::G, ones(n))));
}
BENCHMARK(BM_ConvertGToM)->DenseRange(2, 6, 2);

}  // namespace
