#pragma once

#include <memory>

#include "cornermass/metric_path.hpp"
#include "cornermass/radial_profile.hpp"
#include "cornermass/slice_tensor.hpp"

namespace cornermass {

enum class Family { Spherical, TorusCollar };

/// Inner end of the spherical domain: a smooth center (r(0) = 0, r'(0) = 1)
/// or a reflecting wall at finite radius (used when both sides of the corner
/// continue a vacuum exterior, e.g. a smooth cut through Schwarzschild).
enum class InnerBoundaryKind { SmoothCenter, ReflectingWall };

/// Full corner geometry: interior/exterior descriptions on the two sides of
/// Sigma, inducing the same metric there but possibly different normal
/// derivatives.
struct CornerMetric {
  Family family = Family::Spherical;

  // spherical family; profiles are parameterized by the collar coordinate t
  std::shared_ptr<RadialProfile> interior;
  std::shared_ptr<RadialProfile> exterior;
  double corner_radius = 0.0;  // areal radius of Sigma
  double exterior_mass = 0.0;  // Schwarzschild parameter of the exterior
  InnerBoundaryKind inner_boundary = InnerBoundaryKind::SmoothCenter;
  double wall_t = 0.0;  // collar coordinate of the reflecting wall (< 0)

  // torus family (collar-local test rig, never fed to mass operations)
  TorusGridSpec grid;
  PathSideFns torus_minus, torus_plus;
  std::function<SliceScalar(double)> torus_K;  // closed-form slice curvature, optional

  PathSideFns side(Side s) const;
  /// One-sided mean curvature of Sigma (outward normal; unit sphere in flat
  /// space gives n-1 = 2).
  SliceScalar h_side(Side s) const;
};

/// Flat space on both sides, corner at areal radius R (smooth, jump 0).
CornerMetric make_flat_flat(double R);

/// Flat interior cut at areal radius R, Schwarzschild exterior of mass m.
/// t_max bounds the range over which the exterior profile is needed.
CornerMetric make_flat_schwarzschild(double R, double m, double t_max);

/// Smooth Schwarzschild sliced at areal radius R: both sides the same vacuum
/// metric, mean-curvature jump identically zero. The domain is closed off by a
/// reflecting wall at collar coordinate wall_t < 0 (above the horizon).
CornerMetric make_schwarzschild_cut(double R, double m, double wall_t, double t_max);

struct TorusKinkParams {
  std::size_t nx = 64, ny = 64;
  double amplitude = 0.1;  // conformal factor amplitude
  double c_minus = 0.15;   // gamma = (1 + c t)^2 * base per side
  double c_plus = 0.05;
  double offdiag = 0.0;    // optional off-diagonal base perturbation
};

/// Flat 2-torus collar with a conformally perturbed base metric and a kinked
/// normal profile; exercises the full tensor machinery.
CornerMetric make_torus_collar(const TorusKinkParams& params);

/// Glue the two sides into the collar path on [-2 eps, 2 eps] (t = 0 shared).
MetricPath build_collar(const CornerMetric& corner, double epsilon, std::size_t n_t);

}  // namespace cornermass
