#include <benchmark/benchmark.h>

#include <complex>

#include "qhyper/qhyper.hpp"

namespace {

using namespace qhyper;

void BM_CycloMul(benchmark::State& state) {
  auto ctx = CycloContext::get(static_cast<int>(state.range(0)));
  CycloNum a = zeta_pow(ctx, 1) + zeta_pow(ctx, 3).scale(Rational(5, 7));
  CycloNum b = CycloNum::one(ctx) - zeta_pow(ctx, 2).scale(Rational(2, 3));
  for (auto _ : state) {
    CycloNum c = a * b;
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CycloMul)->Arg(12)->Arg(30)->Arg(60);

void BM_CycloInverse(benchmark::State& state) {
  auto ctx = CycloContext::get(static_cast<int>(state.range(0)));
  CycloNum a = CycloNum::one(ctx) - zeta_pow(ctx, 1);
  for (auto _ : state) {
    CycloNum c = a.inverse();
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(BM_CycloInverse)->Arg(12)->Arg(30)->Arg(60);

void BM_Psi2Build(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Params p(n, 1, 1, n / 2 + 1);
  for (auto _ : state) {
    SolutionElement e = psi2(p);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(BM_Psi2Build)->Arg(6)->Arg(10)->Arg(14);

void BM_ApplyL(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Params p(n, 1, 1, n / 2 + 1);
  SolutionElement e = psi2(p);
  for (auto _ : state) {
    SolutionElement img = apply_L(p, e);
    benchmark::DoNotOptimize(img);
  }
}
BENCHMARK(BM_ApplyL)->Arg(6)->Arg(10)->Arg(14);

void BM_ResidueSum(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Params p(n, 1, 1, 1);
  const std::complex<double> x{0.3, 0.0};
  for (auto _ : state) {
    std::complex<double> v = residue_sum(p, x);
    benchmark::DoNotOptimize(v);
  }
}
BENCHMARK(BM_ResidueSum)->Arg(4)->Arg(8);

void BM_ContourIntegral(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  Params p(n, 1, 1, 1);
  const std::complex<double> x{0.5, 0.0};
  QuadConfig cfg;
  cfg.tol = 1e-7;
  for (auto _ : state) {
    IntegralResult r = contour_integral(p, x, cfg);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ContourIntegral)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
