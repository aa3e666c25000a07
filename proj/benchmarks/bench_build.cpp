#include <benchmark/benchmark.h>

#include <cmath>

#include "bicheb/calculus.hpp"
#include "bicheb/cheb2.hpp"
#include "bicheb/interp.hpp"

namespace {

double cos_xy(double x, double y) { return std::cos(x * y); }

double example2(double x, double y) { return std::cos(10.0 * x * y * y) + std::exp(-x * x); }

void BM_BuildCosXy(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(bicheb::build_adaptive(cos_xy));
}
BENCHMARK(BM_BuildCosXy);

void BM_BuildExample2(benchmark::State& state) {
  bicheb::BuildOptions opts;
  opts.parallel_sampling = state.range(0) != 0;
  for (auto _ : state) benchmark::DoNotOptimize(bicheb::build_adaptive(example2, {}, opts));
}
BENCHMARK(BM_BuildExample2)->Arg(0)->Arg(1);

void BM_Evaluate(benchmark::State& state) {
  const auto c = bicheb::build_adaptive(example2);
  const bool clenshaw = state.range(0) != 0;
  double x = -0.9;
  for (auto _ : state) {
    x = x > 0.9 ? -0.9 : x + 1e-3;
    benchmark::DoNotOptimize(clenshaw ? bicheb::evaluate_clenshaw(c, x, 0.3)
                                      : bicheb::evaluate_matrix(c, x, 0.3));
  }
}
BENCHMARK(BM_Evaluate)->Arg(0)->Arg(1);

void BM_DiffIntegrate(benchmark::State& state) {
  const auto c = bicheb::build_adaptive(example2);
  for (auto _ : state) benchmark::DoNotOptimize(bicheb::integrate(bicheb::diff_x(c)));
}
BENCHMARK(BM_DiffIntegrate);

void BM_LagrangeCoeffs(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(bicheb::lagrange_cheb_coeffs(cos_xy, n, n));
}
BENCHMARK(BM_LagrangeCoeffs)->Arg(8)->Arg(16)->Arg(32);

}  // namespace
