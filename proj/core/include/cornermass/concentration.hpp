#pragma once

#include <vector>

#include "cornermass/corner_metric.hpp"
#include "cornermass/curvature.hpp"
#include "cornermass/mollifier.hpp"
#include "cornermass/richardson.hpp"

namespace cornermass {

/// Mean curvature of the corner hypersurface from both sides, and the
/// dominance condition H(Sigma, g_-) >= H(Sigma, g_+).
struct MeanCurvatureJump {
  SliceScalar h_minus, h_plus;
  SliceScalar jump;  // H_- - H_+
  double jump_min = 0.0, jump_max = 0.0;
  bool dominance = false;
};

MeanCurvatureJump mean_curvature_jump(const CornerMetric& corner);

/// Pointwise collar curvature of a mollified path at coordinate s. The slice
/// curvature comes from `K_fn` when provided, else from the slice metric.
PointCurvature mollified_curvature_at(const MollifiedPath& m, double s,
                                      const std::function<SliceScalar(double)>& K_fn = {});

/// How the scalar curvature of the smoothed metric concentrates in the band.
struct ConcentrationReport {
  double delta = 0.0;
  double h_jump_min = 0.0, h_jump_max = 0.0;

  // sup |R_delta| over the band outside the Dirac-scale inner band
  double sup_outside_inner = 0.0;
  // sup |R_delta - 2 (H_- - H_+) phi_w(s)| over the inner band, where phi_w is
  // the rescaled kernel of mass one concentrated on |s| < delta^2 / 100
  double sup_inner_residual = 0.0;
  // pointwise line integral of R_delta across the band (range over the slice)
  double line_integral_min = 0.0, line_integral_max = 0.0;
  // quadrature check: integral of the rescaled kernel alone (should be 1)
  double kernel_mass = 0.0;
  // 2 (H_- - H_+), the predicted distributional content (range over the slice)
  double target_min = 0.0, target_max = 0.0;
};

ConcentrationReport concentration_profile(const MollifiedPath& m,
                                          const MeanCurvatureJump& jump,
                                          const std::function<SliceScalar(double)>& K_fn = {});

/// Line integrals of R_delta for a decreasing delta sweep, extrapolated to
/// delta -> 0 and compared with 2 (H_- - H_+). Spherical families only.
struct DistributionalLimit {
  std::vector<double> deltas;
  std::vector<double> integrals;
  ExtrapolationResult extrapolated;
  double target = 0.0;
};

DistributionalLimit distributional_scalar_curvature(const CornerMetric& corner,
                                                    const std::vector<double>& deltas,
                                                    double epsilon, std::size_t n_t);

}  // namespace cornermass
