#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cornermass/oracle.hpp"
#include "cornermass/radial_profile.hpp"
#include "cornermass/scenario.hpp"

using namespace cornermass;

TEST_CASE("matrix inverse") {
  Mat3 g{{{2.0, 0.3, 0.0}, {0.3, 1.5, 0.1}, {0.0, 0.1, 4.0}}};
  const Mat3 gi = invert3(g);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) {
      double v = 0.0;
      for (int c = 0; c < 3; ++c) v += g[a][c] * gi[c][b];
      CHECK(v == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-13));
    }
}

TEST_CASE("round 3-sphere: R = 6, Ric(nu,nu) = 2") {
  // r(t) = sin(1 + t), collar form of the unit round sphere
  auto c = [](double t) { return std::sin(1.0 + t) * std::sin(1.0 + t); };
  const MetricFn g = spherical_collar_metric_fn(c);
  const Vec3 x{0.2, 1.3, 0.7};
  CHECK(oracle_scalar_curvature_r(g, x, 1e-3) == doctest::Approx(6.0).epsilon(1e-9));
  CHECK(oracle_ricci_normal_r(g, x, 1e-3) == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("cylinder: R = 2 / r0^2, Ric(nu,nu) = 0") {
  const double r0 = 3.0;
  const MetricFn g = spherical_collar_metric_fn([r0](double) { return r0 * r0; });
  const Vec3 x{0.0, 1.5, 2.0};
  CHECK(oracle_scalar_curvature_r(g, x, 1e-3) ==
        doctest::Approx(2.0 / (r0 * r0)).epsilon(1e-10));
  CHECK(std::fabs(oracle_ricci_normal_r(g, x, 1e-3)) < 1e-10);
}

TEST_CASE("schwarzschild slice: vacuum, Ric(nu,nu) = -2m/r^3") {
  SchwarzschildProfile prof(4.0, 0.5, -1.0, 2.0);
  const MetricFn g = spherical_collar_metric_fn([&prof](double t) { return prof.c(t); });
  for (double t : {-0.5, 0.4, 1.5}) {
    const Vec3 x{t, 1.3, 0.7};
    const double r = prof.r(t);
    CHECK(std::fabs(oracle_scalar_curvature_r(g, x, 1e-3)) < 1e-6);
    CHECK(oracle_ricci_normal_r(g, x, 1e-3) ==
          doctest::Approx(-1.0 / (r * r * r)).epsilon(1e-5));
    CHECK(oracle_mean_curvature(g, x, 1e-4) ==
          doctest::Approx(2.0 * prof.dr(t) / r).epsilon(1e-7));
  }
}

TEST_CASE("flat space in spherical collar form") {
  const MetricFn g = spherical_collar_metric_fn([](double t) { return (4.0 + t) * (4.0 + t); });
  const Vec3 x{0.3, 1.2, 0.5};
  CHECK(std::fabs(oracle_scalar_curvature_r(g, x, 1e-3)) < 1e-9);
  CHECK(std::fabs(oracle_ricci_normal_r(g, x, 1e-3)) < 1e-9);
}

TEST_CASE("oracle convergence is second order") {
  auto c = [](double t) { return std::sin(1.0 + t) * std::sin(1.0 + t); };
  const MetricFn g = spherical_collar_metric_fn(c);
  const Vec3 x{0.1, 1.4, 0.3};
  const double e1 = std::fabs(oracle_scalar_curvature(g, x, 4e-3) - 6.0);
  const double e2 = std::fabs(oracle_scalar_curvature(g, x, 2e-3) - 6.0);
  const double order = std::log2(e1 / e2);
  CHECK(order > 1.9);
  CHECK(order < 2.1);
}

TEST_CASE("scenario oracle checks: spherical and torus") {
  const std::vector<Scenario> list = shipped_scenarios();
  const Scenario* fs = find_scenario(list, "flat_in_schwarzschild");
  REQUIRE(fs != nullptr);
  const OracleCheckReport r1 = oracle_check(*fs);
  CHECK(r1.max_rel_R_err <= 1e-6);
  CHECK(r1.observed_order >= 1.5);
  CHECK(r1.gauss_residual <= 1e-6);
  CHECK(r1.evolution_residual <= 1e-6);
  CHECK(r1.pass);

  const Scenario* tk = find_scenario(list, "torus_kink");
  REQUIRE(tk != nullptr);
  const OracleCheckReport r2 = oracle_check(*tk);
  CHECK(r2.max_rel_R_err <= 1e-6);
  CHECK(r2.gauss_residual <= 1e-6);
  CHECK(r2.evolution_residual <= 1e-6);
  CHECK(r2.pass);
}
