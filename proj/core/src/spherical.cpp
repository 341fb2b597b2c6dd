#include "cornermass/spherical.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "cornermass/grid.hpp"

namespace cornermass {

double radial_scalar_curvature(double r, double dr, double d2r) {
  const double a = 1.0 - dr * dr;
  if (std::fabs(a) < 1e-14 && std::fabs(d2r) < 1e-14) return 0.0;
  return 2.0 * a / (r * r) - 4.0 * d2r / r;
}

double SphericalGeometry::harmonic_radius(double sv) const {
  const double rv = r(sv);
  if (mass == 0.0) return 1.0 / rv;
  return (1.0 - std::sqrt(1.0 - 2.0 * mass / rv)) / mass;
}

double SphericalGeometry::harmonic_radius_d1(double sv) const {
  const double rv = r(sv);
  return -1.0 / (rv * rv);
}

double SphericalGeometry::hawking_mass(double sv) const {
  const double rv = r(sv), dv = dr(sv);
  return 0.5 * rv * (1.0 - dv * dv);
}

SphericalGeometry build_spherical_geometry(const CornerMetric& corner, double epsilon,
                                           std::size_t n_t, const MollifierConfig& cfg,
                                           double s_max_t, const SphericalGridParams& gp) {
  if (corner.family != Family::Spherical)
    throw config_error("build_spherical_geometry: spherical families only");

  SphericalGeometry geo;
  geo.mass = corner.exterior_mass;
  geo.delta = cfg.delta;
  geo.inner_boundary = corner.inner_boundary;

  // the interior profile fixes the s origin: s = s_corner + t with r(s) the
  // interior areal radius, r(0) = 0 for a smooth center
  if (corner.inner_boundary == InnerBoundaryKind::SmoothCenter) {
    const double r0 = corner.interior->r(0.0);
    const double slope = corner.interior->dr(0.0);
    if (std::fabs(slope - 1.0) > 1e-12)
      throw config_error("build_spherical_geometry: smooth center needs a flat interior");
    geo.s_corner = r0;
    geo.s_min = 0.0;
  } else {
    geo.s_corner = -corner.wall_t;  // wall at s = 0
    geo.s_min = 0.0;
  }
  geo.s_max = geo.s_corner + s_max_t;

  auto path = std::make_shared<MetricPath>(build_collar(corner, epsilon, n_t));
  auto moll = std::make_shared<MollifiedPath>(path, cfg);
  const double sc = geo.s_corner;
  const double half = 0.5 * cfg.delta;
  auto interior = corner.interior;
  auto exterior = corner.exterior;

  geo.r = [moll, interior, exterior, sc, half](double sv) {
    const double t = sv - sc;
    if (t <= -half) return interior->r(t);
    if (t >= half) return exterior->r(t);
    return std::sqrt(moll->gamma(t).coeff());
  };
  geo.dr = [moll, interior, exterior, sc, half](double sv) {
    const double t = sv - sc;
    if (t <= -half) return interior->dr(t);
    if (t >= half) return exterior->dr(t);
    const double r = std::sqrt(moll->gamma(t).coeff());
    return moll->d1(t).coeff() / (2.0 * r);  // dc = 2 r r'
  };
  geo.d2r = [moll, interior, exterior, sc, half](double sv) {
    const double t = sv - sc;
    if (t <= -half) return interior->d2r(t);
    if (t >= half) return exterior->d2r(t);
    const double r = std::sqrt(moll->gamma(t).coeff());
    const double rp = moll->d1(t).coeff() / (2.0 * r);
    return (moll->d2(t).coeff() - 2.0 * rp * rp) / (2.0 * r);  // d2c = 2 r'^2 + 2 r r''
  };
  const auto r_fn = geo.r;
  const auto dr_fn = geo.dr;
  const auto d2r_fn = geo.d2r;
  geo.scalar_curvature = [r_fn, dr_fn, d2r_fn, sc, half](double sv) {
    const double t = sv - sc;
    if (std::fabs(t) >= half) {
      // interior flat / exterior vacuum: exactly scalar flat outside the band
      return 0.0;
    }
    return radial_scalar_curvature(r_fn(sv), dr_fn(sv), d2r_fn(sv));
  };

  // solver grid, refined across the band and the Dirac-scale inner band
  const double w = cfg.inner_halfwidth();
  const auto n_of = [](double len, double h) {
    return std::max<std::size_t>(4, std::size_t(std::ceil(len / h)));
  };
  const double q = 0.25 * cfg.delta;
  std::vector<double> bp = {geo.s_min,  sc - half, sc - q, sc - w, sc + w,
                            sc + q,     sc + half, geo.s_max};
  std::vector<std::size_t> counts = {n_of(sc - half - geo.s_min, gp.h_outer),
                                     n_of(q, gp.h_collar),
                                     gp.band_nodes,
                                     gp.inner_nodes,
                                     gp.band_nodes,
                                     n_of(q, gp.h_collar),
                                     n_of(geo.s_max - sc - half, gp.h_outer)};
  geo.s = zoned_grid(bp, counts);
  return geo;
}

}  // namespace cornermass
