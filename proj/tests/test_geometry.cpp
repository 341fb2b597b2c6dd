#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <memory>
#include <numbers>

#include "cornermass/corner_metric.hpp"
#include "cornermass/curvature.hpp"
#include "cornermass/metric_path.hpp"
#include "cornermass/radial_profile.hpp"
#include "cornermass/slice_tensor.hpp"

using namespace cornermass;

TEST_CASE("spherical slice tensor algebra") {
  const SliceTensor gamma = SliceTensor::spherical(4.0);
  const SliceTensor a = SliceTensor::spherical(1.0);
  CHECK(a.trace_with(gamma).scalar() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(a.inner_with(gamma, a).scalar() == doctest::Approx(0.125).epsilon(1e-15));
  CHECK(gamma.min_eigenvalue() == doctest::Approx(4.0));
  CHECK((gamma - a * 4.0).inf_norm() == doctest::Approx(0.0));
}

TEST_CASE("torus slice tensor trace and inner product") {
  TorusGridSpec spec{4, 4, 2.0 * std::numbers::pi, 2.0 * std::numbers::pi};
  const SliceTensor gamma = SliceTensor::torus_from_fn(
      spec, [](double, double, double& c11, double& c12, double& c22) {
        c11 = 2.0;
        c12 = 0.5;
        c22 = 1.0;
      });
  const SliceTensor t = SliceTensor::torus_from_fn(
      spec, [](double, double, double& c11, double& c12, double& c22) {
        c11 = 1.0;
        c12 = 0.0;
        c22 = 3.0;
      });
  // inverse of [[2, .5], [.5, 1]] is [[1, -.5], [-.5, 2]] / 1.75 * ... det = 1.75
  const double i11 = 1.0 / 1.75, i12 = -0.5 / 1.75, i22 = 2.0 / 1.75;
  const double tr = i11 * 1.0 + i22 * 3.0;  // gamma^{ij} t_ij
  CHECK(t.trace_with(gamma)[0] == doctest::Approx(tr).epsilon(1e-14));
  // |t|^2 = gamma^{ik} gamma^{jl} t_ij t_kl
  const double n2 = i11 * i11 * 1.0 + 2.0 * i12 * i12 * 3.0 + i22 * i22 * 9.0 +
                    2.0 * (i11 * i12 * 0.0) + 2.0 * (i12 * i22 * 0.0);
  CHECK(t.inner_with(gamma, t)[0] == doctest::Approx(n2).epsilon(1e-12));
  CHECK(gamma.min_eigenvalue() > 0.0);
}

TEST_CASE("schwarzschild profile satisfies its defining ODE") {
  SchwarzschildProfile prof(4.0, 0.5, -1.0, 10.0);
  CHECK(prof.r(0.0) == doctest::Approx(4.0).epsilon(1e-12));
  for (double t : {-0.8, -0.2, 0.0, 1.0, 5.0, 9.5}) {
    const double r = prof.r(t);
    CHECK(prof.dr(t) == doctest::Approx(std::sqrt(1.0 - 1.0 / r)).epsilon(1e-9));
    CHECK(prof.d2r(t) == doctest::Approx(0.5 / (r * r)).epsilon(1e-9));
    // Hawking mass is exactly the Schwarzschild parameter
    const double mh = 0.5 * r * (1.0 - prof.dr(t) * prof.dr(t));
    CHECK(mh == doctest::Approx(0.5).epsilon(1e-9));
  }
  CHECK_THROWS_AS(SchwarzschildProfile(1.001, 0.5, -1.0, 1.0), geometry_error);
}

TEST_CASE("metric path from a kinked scalar profile") {
  // c(t) = (2 + a t)^2 with a- = 0.3, a+ = 0.1
  auto side = [](double a) {
    return scalar_side([a](double t) { return (2.0 + a * t) * (2.0 + a * t); },
                       [a](double t) { return 2.0 * a * (2.0 + a * t); },
                       [a](double) { return 2.0 * a * a; });
  };
  MetricPath path = MetricPath::from_sides(side(0.3), side(0.1), 1.0, 401);
  CHECK(path.eval(0.5).coeff() == doctest::Approx(2.05 * 2.05).epsilon(1e-13));
  CHECK(path.eval_d1(-0.5, Side::minus).coeff() ==
        doctest::Approx(2.0 * 0.3 * 1.85).epsilon(1e-13));
  const SliceTensor jump = path.corner_d1_jump();
  CHECK(jump.coeff() == doctest::Approx(2.0 * 0.1 * 2.0 - 2.0 * 0.3 * 2.0).epsilon(1e-12));
  CHECK(path.lipschitz_L() > 0.0);

  // mismatched corner values must be rejected
  auto bad = scalar_side([](double t) { return (2.1 + t) * (2.1 + t); });
  CHECK_THROWS_AS(MetricPath::from_sides(side(0.3), bad, 1.0, 401), geometry_error);
}

TEST_CASE("interpolated derivatives agree with analytic ones") {
  auto analytic = [](double a) {
    return scalar_side([a](double t) { return std::exp(a * t) + 3.0; },
                       [a](double t) { return a * std::exp(a * t); },
                       [a](double t) { return a * a * std::exp(a * t); });
  };
  auto value_only = [](double a) {
    return scalar_side([a](double t) { return std::exp(a * t) + 3.0; });
  };
  MetricPath pa = MetricPath::from_sides(analytic(0.4), analytic(-0.2), 1.0, 801);
  MetricPath pv = MetricPath::from_sides(value_only(0.4), value_only(-0.2), 1.0, 801);
  for (double t : {-1.3, -0.4, 0.35, 1.7}) {
    const Side side = t < 0.0 ? Side::minus : Side::plus;
    CHECK(pv.eval_d1(t, side).coeff() ==
          doctest::Approx(pa.eval_d1(t, side).coeff()).epsilon(1e-8));
    CHECK(pv.eval_d2(t, side).coeff() ==
          doctest::Approx(pa.eval_d2(t, side).coeff()).epsilon(1e-5));
  }
  CHECK(pv.corner_d1_jump().coeff() ==
        doctest::Approx(pa.corner_d1_jump().coeff()).epsilon(1e-5));
}

TEST_CASE("corner mean curvatures") {
  // unit sphere in flat space: H = 2
  const CornerMetric unit = make_flat_flat(1.0);
  CHECK(unit.h_side(Side::minus).scalar() == doctest::Approx(2.0).epsilon(1e-13));

  const CornerMetric fs = make_flat_schwarzschild(4.0, 0.5, 8.0);
  CHECK(fs.h_side(Side::minus).scalar() == doctest::Approx(0.5).epsilon(1e-13));
  CHECK(fs.h_side(Side::plus).scalar() ==
        doctest::Approx(0.4330127018922193).epsilon(1e-12));

  // smooth cut: jump vanishes
  const CornerMetric cut = make_schwarzschild_cut(4.0, 0.5, -1.5, 8.0);
  CHECK(cut.h_side(Side::minus).scalar() ==
        doctest::Approx(cut.h_side(Side::plus).scalar()).epsilon(1e-14));
}

TEST_CASE("second fundamental form of the schwarzschild side") {
  const CornerMetric fs = make_flat_schwarzschild(4.0, 0.5, 8.0);
  MetricPath path = build_collar(fs, 1.0, 401);
  const SliceTensor a_plus = path.d1_corner_plus() * 0.5;
  // A = r r' ghat = 4 sqrt(3)/2 ghat
  CHECK(a_plus.coeff() == doctest::Approx(3.4641016151377544).epsilon(1e-9));
}

TEST_CASE("collar curvature: cylinder and round sphere") {
  // cylinder over a sphere of radius r0: gamma constant, R = 2 / r0^2
  const double r0 = 3.0;
  auto cyl = scalar_side([r0](double) { return r0 * r0; }, [](double) { return 0.0; },
                         [](double) { return 0.0; });
  MetricPath path = MetricPath::from_sides(cyl, cyl, 1.0, 101);
  CurvatureField f = collar_scalar_curvature(path);
  const std::size_t mid = path.corner_index();
  CHECK(f.H[mid].scalar() == doctest::Approx(0.0));
  CHECK(f.R[mid].scalar() == doctest::Approx(2.0 / (r0 * r0)).epsilon(1e-12));

  // round 3-sphere: r = sin(s0 + t), R = 6 everywhere
  auto cap = std::make_shared<SphereCapProfile>(1.0, 1.0);
  MetricPath sph = MetricPath::from_sides(cap->side_fns(), cap->side_fns(), 0.3, 201);
  CurvatureField fs = collar_scalar_curvature(sph);
  for (std::size_t i : {std::size_t(10), sph.corner_index(), sph.size() - 5})
    CHECK(fs.R[i].scalar() == doctest::Approx(6.0).epsilon(1e-10));

  // flat space is scalar flat
  FlatProfile flat(2.0);
  MetricPath fp = MetricPath::from_sides(flat.side_fns(), flat.side_fns(), 0.5, 101);
  CurvatureField ff = collar_scalar_curvature(fp);
  CHECK(std::fabs(ff.R[ff.R.size() / 2].scalar()) < 1e-11);
}

TEST_CASE("torus gaussian curvature: finite differences vs closed form") {
  TorusKinkParams params;
  params.nx = 96;
  params.ny = 16;
  const CornerMetric torus = make_torus_collar(params);
  REQUIRE(bool(torus.torus_K));
  const SliceTensor gamma = torus.side(Side::plus).value(0.3);
  const SliceScalar k_fd = slice_intrinsic_curvature(gamma);
  const SliceScalar k_exact = torus.torus_K(0.3);
  double worst = 0.0;
  for (std::size_t i = 0; i < k_fd.size(); ++i)
    worst = std::max(worst, std::fabs(k_fd[i] - k_exact[i]));
  CHECK(worst < 5e-4);  // second order in hx = 2 pi / 96
}

TEST_CASE("collar scalar curvature vanishes on vacuum sides") {
  const CornerMetric fs = make_flat_schwarzschild(4.0, 0.5, 8.0);
  MetricPath path = build_collar(fs, 1.0, 801);
  CurvatureField f = collar_scalar_curvature(path);
  for (std::size_t i = 0; i < path.size(); i += 50)
    CHECK(std::fabs(f.R[i].scalar()) < 1e-7);
  CHECK(std::fabs(f.R_corner_plus.scalar()) < 1e-7);
}
