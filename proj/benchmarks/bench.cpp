#include <benchmark/benchmark.h>

#include <memory>

#include "cornermass/concentration.hpp"
#include "cornermass/conformal.hpp"
#include "cornermass/grid.hpp"

using namespace cornermass;

namespace {

std::shared_ptr<MetricPath> strict_path() {
  static auto path = std::make_shared<MetricPath>(
      build_collar(make_flat_schwarzschild(4.0, 0.5, 8.0), 1.0, 801));
  return path;
}

void BM_MollifiedEval(benchmark::State& state) {
  MollifiedPath m(strict_path(), MollifierConfig::make(0.05));
  double s = 0.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(m.gamma(s).coeff());
    s = s > 0.02 ? -0.02 : s + 1e-3;
  }
}
BENCHMARK(BM_MollifiedEval);

void BM_CurvatureAtPoint(benchmark::State& state) {
  MollifiedPath m(strict_path(), MollifierConfig::make(0.05));
  const CornerMetric fs = make_flat_schwarzschild(4.0, 0.5, 8.0);
  const MeanCurvatureJump jump = mean_curvature_jump(fs);
  double s = -0.02;
  for (auto _ : state) {
    benchmark::DoNotOptimize(mollified_curvature_at(m, s).R.scalar());
    s = s > 0.02 ? -0.02 : s + 1e-3;
  }
  (void)jump;
}
BENCHMARK(BM_CurvatureAtPoint);

void BM_BVPSolve(benchmark::State& state) {
  RadialBVPSpec spec;
  spec.s = uniform_grid(0.0, 4.0, std::size_t(state.range(0)));
  spec.smooth_center = true;
  spec.p = [](double s) { return 2.0 / s; };
  spec.q = [](double) { return 1.0; };
  spec.f = [](double s) { return (s * s / 4.0 - 0.5) * std::exp(-s * s / 4.0); };
  spec.robin_beta = 1.0;
  for (auto _ : state) benchmark::DoNotOptimize(solve_bvp_fd(spec).back());
}
BENCHMARK(BM_BVPSolve)->Arg(2001)->Arg(20001);

}  // namespace

BENCHMARK_MAIN();
