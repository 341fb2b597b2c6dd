#include "cornermass/corner_metric.hpp"

#include <cmath>
#include <numbers>

namespace cornermass {

PathSideFns CornerMetric::side(Side s) const {
  if (family == Family::Spherical) {
    // capture the profile by shared ownership so the returned callables stay
    // valid after this CornerMetric goes away
    std::shared_ptr<RadialProfile> p = s == Side::minus ? interior : exterior;
    PathSideFns fns;
    fns.value = [p](double t) { return SliceTensor::spherical(p->c(t)); };
    fns.d1 = [p](double t) { return SliceTensor::spherical(p->dc(t)); };
    fns.d2 = [p](double t) { return SliceTensor::spherical(p->d2c(t)); };
    return fns;
  }
  return s == Side::minus ? torus_minus : torus_plus;
}

SliceScalar CornerMetric::h_side(Side s) const {
  if (family == Family::Spherical) {
    const auto& p = (s == Side::minus ? interior : exterior);
    return SliceScalar::spherical(2.0 * p->dr(0.0) / p->r(0.0));
  }
  const PathSideFns fns = side(s);
  const SliceTensor gamma0 = fns.value(0.0);
  const SliceTensor a = fns.d1(0.0) * 0.5;
  return a.trace_with(gamma0);
}

CornerMetric make_flat_flat(double R) {
  CornerMetric c;
  c.family = Family::Spherical;
  c.interior = std::make_shared<FlatProfile>(R);
  c.exterior = std::make_shared<FlatProfile>(R);
  c.corner_radius = R;
  c.exterior_mass = 0.0;
  return c;
}

CornerMetric make_flat_schwarzschild(double R, double m, double t_max) {
  CornerMetric c;
  c.family = Family::Spherical;
  c.interior = std::make_shared<FlatProfile>(R);
  c.exterior = std::make_shared<SchwarzschildProfile>(R, m, -0.5, t_max);
  c.corner_radius = R;
  c.exterior_mass = m;
  return c;
}

CornerMetric make_schwarzschild_cut(double R, double m, double wall_t, double t_max) {
  if (wall_t >= 0.0) throw config_error("make_schwarzschild_cut: wall_t must be negative");
  CornerMetric c;
  c.family = Family::Spherical;
  auto prof = std::make_shared<SchwarzschildProfile>(R, m, wall_t - 0.5, t_max);
  c.interior = prof;
  c.exterior = prof;
  c.corner_radius = R;
  c.exterior_mass = m;
  c.inner_boundary = InnerBoundaryKind::ReflectingWall;
  c.wall_t = wall_t;
  return c;
}

CornerMetric make_torus_collar(const TorusKinkParams& params) {
  CornerMetric c;
  c.family = Family::TorusCollar;
  c.grid = TorusGridSpec{params.nx, params.ny, 2.0 * std::numbers::pi,
                         2.0 * std::numbers::pi};
  const double amp = params.amplitude;
  const double beta = params.offdiag;
  const TorusGridSpec grid = c.grid;

  auto base = [amp, beta, grid]() {
    return SliceTensor::torus_from_fn(
        grid, [amp, beta](double x, double y, double& c11, double& c12, double& c22) {
          const double e = std::exp(2.0 * amp * std::cos(x));
          c11 = e;
          c22 = e;
          c12 = beta * std::sin(x + y);
        });
  }();

  auto make_side = [base](double cs) {
    PathSideFns fns;
    fns.value = [base, cs](double t) {
      const double g = 1.0 + cs * t;
      return base * (g * g);
    };
    fns.d1 = [base, cs](double t) { return base * (2.0 * cs * (1.0 + cs * t)); };
    fns.d2 = [base, cs](double) { return base * (2.0 * cs * cs); };
    return fns;
  };
  c.torus_minus = make_side(params.c_minus);
  c.torus_plus = make_side(params.c_plus);

  // closed-form Gaussian curvature of e^{2 phi} delta with phi = amp cos x is
  // -laplacian(phi) e^{-2 phi} = amp cos(x) e^{-2 phi}; scaling by g(t)^2
  // divides it by g(t)^2. Only available for the conformal base (offdiag = 0).
  if (beta == 0.0) {
    const double cm = params.c_minus, cp = params.c_plus;
    c.torus_K = [amp, grid, cm, cp](double t) {
      const double g = 1.0 + (t < 0.0 ? cm : cp) * t;
      std::vector<double> k(grid.size());
      for (std::size_t j = 0; j < grid.ny; ++j)
        for (std::size_t i = 0; i < grid.nx; ++i) {
          const double x = grid.x(i);
          k[j * grid.nx + i] =
              amp * std::cos(x) * std::exp(-2.0 * amp * std::cos(x)) / (g * g);
        }
      return SliceScalar::torus(grid, std::move(k));
    };
  }
  return c;
}

MetricPath build_collar(const CornerMetric& corner, double epsilon, std::size_t n_t) {
  if (corner.family == Family::Spherical && corner.corner_radius <= 2.0 * epsilon &&
      corner.inner_boundary == InnerBoundaryKind::SmoothCenter)
    throw geometry_error("build_collar: collar reaches the center, reduce epsilon");
  return MetricPath::from_sides(corner.side(Side::minus), corner.side(Side::plus), epsilon,
                                n_t);
}

}  // namespace cornermass
