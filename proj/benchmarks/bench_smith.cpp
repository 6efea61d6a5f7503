#include <benchmark/benchmark.h>

#include "surfaut/smith.hpp"
#include "test_helpers.hpp"

namespace {

void BM_SmithNormalForm(benchmark::State& state) {
  surfaut_test::Rng rng(1);
  const auto n = static_cast<std::size_t>(state.range(0));
  std::vector<surfaut::IntMatrix> inputs;
  for (int i = 0; i < 32; ++i)
    inputs.push_back(surfaut_test::random_matrix(rng, n, n, 100));
  std::size_t k = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(surfaut::smith_normal_form(inputs[k++ % inputs.size()]));
  }
}
BENCHMARK(BM_SmithNormalForm)->Arg(4)->Arg(6)->Arg(10);

void BM_Cokernel(benchmark::State& state) {
  surfaut_test::Rng rng(2);
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto m = surfaut_test::random_matrix(rng, n, n + 1, 50);
  for (auto _ : state) {
    benchmark::DoNotOptimize(surfaut::cokernel(m));
  }
}
BENCHMARK(BM_Cokernel)->Arg(4)->Arg(8);

}  // namespace
