#include <benchmark/benchmark.h>

#include <cmath>

#include "degentrig/chebpoly.hpp"
#include "degentrig/degen_trig.hpp"
#include "degentrig/exact_series.hpp"
#include "degentrig/identity_suite.hpp"

namespace {

using namespace degentrig;

void BM_falling_factorial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(falling_factorial(1.3, n, 0.25));
  }
}
BENCHMARK(BM_falling_factorial)->Arg(8)->Arg(32);

void BM_degen_exp_closed(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(degen_exp_closed(1.7, 0.25, 0.8));
  }
}
BENCHMARK(BM_degen_exp_closed);

void BM_degen_exp_series(benchmark::State& state) {
  for (auto _ : state) {
    benchmark::DoNotOptimize(degen_exp_series(1.7, 0.25, 0.8, 80).value);
  }
}
BENCHMARK(BM_degen_exp_series);

void BM_trig_eval(benchmark::State& state) {
  const DegenContext ctx(0.5, 1.0);
  double x = 0.1;
  for (auto _ : state) {
    benchmark::DoNotOptimize(cos_l(ctx, x) + sin_l(ctx, x));
    x += 1e-6;
  }
}
BENCHMARK(BM_trig_eval);

void BM_cheb_eval(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(cheb_eval(n, 0.7));
  }
}
BENCHMARK(BM_cheb_eval)->Arg(8)->Arg(16)->Arg(32);

void BM_km_eval(benchmark::State& state) {
  const KmPoly km = km_build(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(km_eval(km, 0.4));
  }
}
BENCHMARK(BM_km_eval)->Arg(4)->Arg(10);

void BM_run_identity_tan_sum(benchmark::State& state) {
  const SampleGrid grid = SampleGrid::make_default(1, 16);
  const Params params{{"m", static_cast<int>(state.range(0))}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(run_identity(IdentityId::tan_sum, params, grid));
  }
}
BENCHMARK(BM_run_identity_tan_sum)->Arg(1)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_series_mul(benchmark::State& state) {
  using namespace degentrig::exact;
  const int order = static_cast<int>(state.range(0));
  const SinCosSeries sc = series_sin_cos(Rational(2, 3), Rational(-1, 2), order);
  for (auto _ : state) {
    benchmark::DoNotOptimize(series_mul(sc.sin, sc.cos));
  }
}
BENCHMARK(BM_series_mul)->Arg(16)->Arg(32)->Unit(benchmark::kMicrosecond);

void BM_verify_exact_multi_angle(benchmark::State& state) {
  using namespace degentrig::exact;
  const Params params{{"n", static_cast<int>(state.range(0))}};
  for (auto _ : state) {
    benchmark::DoNotOptimize(verify_exact(IdentityId::multi_angle_cos, Rational(2, 3),
                                          Rational(1, 5), Rational(-1, 2), params, 32));
  }
}
BENCHMARK(BM_verify_exact_multi_angle)->Arg(2)->Arg(8)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
