#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <memory>

#include "cornermass/concentration.hpp"

using namespace cornermass;

TEST_CASE("mean curvature jump values") {
  const CornerMetric fs = make_flat_schwarzschild(4.0, 0.5, 8.0);
  const MeanCurvatureJump j = mean_curvature_jump(fs);
  CHECK(j.h_minus.scalar() == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(j.h_plus.scalar() == doctest::Approx(0.4330127018922193).epsilon(1e-12));
  CHECK(j.jump.scalar() == doctest::Approx(0.0669872981077807).epsilon(1e-11));
  CHECK(j.dominance);

  const CornerMetric neg = make_flat_schwarzschild(4.0, -0.5, 8.0);
  const MeanCurvatureJump jn = mean_curvature_jump(neg);
  CHECK(jn.jump.scalar() == doctest::Approx(-0.0590169943749474).epsilon(1e-11));
  CHECK_FALSE(jn.dominance);

  const CornerMetric flat = make_flat_flat(4.0);
  CHECK(mean_curvature_jump(flat).jump.scalar() == doctest::Approx(0.0));
}

TEST_CASE("concentration profile structure for the strict jump") {
  const CornerMetric fs = make_flat_schwarzschild(4.0, 0.5, 8.0);
  const MeanCurvatureJump j = mean_curvature_jump(fs);
  auto path = std::make_shared<MetricPath>(build_collar(fs, 1.0, 801));
  MollifiedPath m(path, MollifierConfig::make(0.1));
  const ConcentrationReport rep = concentration_profile(m, j);

  CHECK(rep.kernel_mass == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(rep.target_max == doctest::Approx(0.1339745962155614).epsilon(1e-11));
  // outside the Dirac band the curvature stays order one while the spike
  // reaches jump * 2 phi(0) / w ~ 1100
  CHECK(rep.sup_outside_inner < 50.0);
  CHECK(rep.sup_inner_residual < 50.0);
  // the line integral is already near the distributional value at delta = 0.1
  CHECK(std::fabs(rep.line_integral_max - rep.target_max) < 0.05);
}

TEST_CASE("distributional limit of the scalar curvature") {
  const CornerMetric fs = make_flat_schwarzschild(4.0, 0.5, 8.0);
  const DistributionalLimit lim =
      distributional_scalar_curvature(fs, {0.1, 0.05, 0.025}, 1.0, 801);
  CHECK(lim.target == doctest::Approx(0.1339745962155614).epsilon(1e-11));
  CHECK(std::fabs(lim.extrapolated.limit - lim.target) < 1e-3);
}

TEST_CASE("smooth cut concentrates nothing") {
  const CornerMetric cut = make_schwarzschild_cut(4.0, 0.5, -1.5, 8.0);
  const DistributionalLimit lim =
      distributional_scalar_curvature(cut, {0.1, 0.05, 0.025}, 1.0, 801);
  CHECK(lim.target == doctest::Approx(0.0));
  CHECK(std::fabs(lim.extrapolated.limit) < 1e-3);
}
