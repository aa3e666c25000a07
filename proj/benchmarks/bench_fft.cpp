#include <benchmark/benchmark.h>

#include <random>

#include "bicheb/fft2d.hpp"

namespace {

bicheb::ComplexMatrix random_square(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  bicheb::ComplexMatrix m(n, n);
  for (auto& v : m.data()) v = {u(rng), u(rng)};
  return m;
}

void BM_Fft2(benchmark::State& state) {
  const auto x = random_square(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bicheb::fft2(x));
  state.SetComplexityN(state.range(0) * state.range(0));
}
BENCHMARK(BM_Fft2)->RangeMultiplier(2)->Range(16, 1024)->Complexity(benchmark::oNLogN);

void BM_Dft2Naive(benchmark::State& state) {
  const auto x = random_square(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(bicheb::dft2_naive(x));
}
BENCHMARK(BM_Dft2Naive)->RangeMultiplier(2)->Range(4, 32);

}  // namespace
