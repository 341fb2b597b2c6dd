#pragma once

#include <functional>
#include <vector>

#include "cornermass/spherical.hpp"

namespace cornermass {

/// Linear radial boundary value problem y'' + p y' + q y = f on the given
/// grid. Inner boundary is Neumann y' = 0; with smooth_center the first node
/// sits at the center r = 0 and the regularized equation n_dim y'' + q y = f
/// is imposed there (p is never evaluated at that node). Outer boundary is
/// the Robin condition y'(s_max) + robin_beta y(s_max) = robin_rhs.
struct RadialBVPSpec {
  std::vector<double> s;
  std::function<double(double)> p, q, f;
  bool smooth_center = false;
  int n_dim = 3;
  double robin_beta = 0.0;
  double robin_rhs = 0.0;
};

/// Second-order finite differences (three-point stencils, ghost-node boundary
/// rows, Thomas elimination).
std::vector<double> solve_bvp_fd(const RadialBVPSpec& spec);

/// Independent check: RK4 shooting with superposition of a particular and a
/// homogeneous initial value solution; substeps per grid interval.
std::vector<double> solve_bvp_shooting(const RadialBVPSpec& spec, std::size_t substeps = 4);

/// One conformal correction u = 1 + y with Delta u = +/- c_n R_part u.
struct ConformalStage {
  std::vector<double> u;      // on the geometry grid
  double A_decay = 0.0;       // decay coefficient from a least-squares fit u ~ 1 + A W
  double A_integral = 0.0;    // same coefficient from the energy identity
  double energy = 0.0;        // the (sign-definite) energy integral
  double u_min = 0.0, u_max = 0.0;
  double solver_mismatch = 0.0;  // sup |fd - shooting|
};

/// Both conformal corrections applied to a smoothed spherical corner geometry:
/// first kill the negative part of R, then shrink toward the scalar-flat
/// comparison metric; masses track m -> m + 2 A1 -> m + 2 A1 + 2 A2.
struct PipelineResult {
  double delta = 0.0;
  double mass_smoothed = 0.0;  // Hawking mass of the smoothed metric at s_max
  double mass_tilde = 0.0;     // after the first correction
  double mass_hat = 0.0;       // after the second correction
  double smallness = 0.0;      // (integral of R_-^{n/2} dV)^{2/n}
  double h_jump = 0.0;         // corner mean curvature jump H_- - H_+
  bool dominance = false;      // H_- >= H_+ at the corner
  ConformalStage first, second;
};

PipelineResult run_conformal_pipeline(const SphericalGeometry& geo,
                                      const MeanCurvatureJump& jump);

}  // namespace cornermass
