#include <benchmark/benchmark.h>

#include "surfaut/elliptic.hpp"

namespace {

using namespace surfaut::elliptic;

TauClass canonical_tau(int type) {
  return type == 3 || type == 4 ? TauClass::square : TauClass::hexagonal;
}

void BM_NormalizerQuotient(benchmark::State& state) {
  const int type = static_cast<int>(state.range(0));
  const auto datum = bdf_table_datum(type, canonical_tau(type));
  for (auto _ : state) {
    benchmark::DoNotOptimize(normalizer_quotient(datum));
  }
}
BENCHMARK(BM_NormalizerQuotient)->Arg(1)->Arg(4)->Arg(6);

void BM_FullBdFTable(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(bdf_table());
  }
}
BENCHMARK(BM_FullBdFTable);

}  // namespace
