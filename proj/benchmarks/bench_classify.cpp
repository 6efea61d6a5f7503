#include <benchmark/benchmark.h>

#include "surfaut/classifier.hpp"
#include "surfaut/serialize.hpp"

namespace {

using namespace surfaut::classifier;

void BM_ClassifyHyperelliptic(benchmark::State& state) {
  const SurfaceDescriptor desc{
      Hyperelliptic{surfaut::elliptic::bdf_table_datum(1, surfaut::elliptic::TauClass::hexagonal)}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(classify(desc));
  }
}
BENCHMARK(BM_ClassifyHyperelliptic);

void BM_Kod1Minimal(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(kod1_minimal_example(60));
  }
}
BENCHMARK(BM_Kod1Minimal);

void BM_ReportDocument(benchmark::State& state) {
  const SurfaceDescriptor desc{Kod1MinimalExample{20}};
  const auto rep = classify(desc);
  for (auto _ : state) {
    benchmark::DoNotOptimize(surfaut::io::report_document(desc, rep));
  }
}
BENCHMARK(BM_ReportDocument);

}  // namespace
