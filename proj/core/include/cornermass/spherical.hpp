#pragma once

#include <functional>
#include <vector>

#include "cornermass/concentration.hpp"
#include "cornermass/corner_metric.hpp"
#include "cornermass/mollifier.hpp"

namespace cornermass {

/// A rotationally symmetric 3-metric dr^2-form g = ds^2 + r(s)^2 ghat on a
/// radial interval, assembled from a smoothed corner geometry. Outside the
/// smoothing band the metric agrees with the underlying profiles; inside, the
/// areal radius comes from the mollified slice coefficient.
struct SphericalGeometry {
  int n_dim = 3;
  double mass = 0.0;    // Schwarzschild parameter of the exact exterior
  double delta = 0.0;
  double s_corner = 0.0;
  double s_min = 0.0, s_max = 0.0;
  InnerBoundaryKind inner_boundary = InnerBoundaryKind::SmoothCenter;

  std::vector<double> s;  // solver grid, refined across the smoothing band

  std::function<double(double)> r, dr, d2r;
  std::function<double(double)> scalar_curvature;

  /// Exterior harmonic radial coordinate W with Delta W = 0, W -> 0 at
  /// infinity, normalized so W ~ 1/r. Only valid where the metric is exactly
  /// Schwarzschild (outside the band).
  double harmonic_radius(double sv) const;
  /// dW/ds = -1/r^2 there.
  double harmonic_radius_d1(double sv) const;

  double hawking_mass(double sv) const;
};

struct SphericalGridParams {
  double h_outer = 2e-3;         // spacing away from the band
  double h_collar = 2e-4;        // spacing in [delta/4, delta/2] around the corner
  std::size_t band_nodes = 160;  // nodes across each half of [w, delta/4]
  std::size_t inner_nodes = 240; // nodes across the Dirac-scale band [-w, w]
};

/// Assemble the full radial geometry for a spherical corner metric smoothed at
/// bandwidth cfg.delta. s_max_t is the collar coordinate of the outer
/// boundary (must not exceed the cached range of the exterior profile).
SphericalGeometry build_spherical_geometry(const CornerMetric& corner, double epsilon,
                                           std::size_t n_t, const MollifierConfig& cfg,
                                           double s_max_t,
                                           const SphericalGridParams& gp = {});

/// R = 2 (1 - r'^2) / r^2 - 4 r'' / r for g = ds^2 + r^2 ghat.
double radial_scalar_curvature(double r, double dr, double d2r);

}  // namespace cornermass
