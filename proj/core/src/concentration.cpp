#include "cornermass/concentration.hpp"

#include <algorithm>
#include <cmath>

#include "cornermass/quadrature.hpp"

namespace cornermass {

MeanCurvatureJump mean_curvature_jump(const CornerMetric& corner) {
  MeanCurvatureJump j;
  j.h_minus = corner.h_side(Side::minus);
  j.h_plus = corner.h_side(Side::plus);
  j.jump = j.h_minus - j.h_plus;
  j.jump_min = j.jump.min();
  j.jump_max = j.jump.max();
  j.dominance = j.jump_min >= -1e-12;
  return j;
}

PointCurvature mollified_curvature_at(const MollifiedPath& m, double s,
                                      const std::function<SliceScalar(double)>& K_fn) {
  const SliceTensor gamma = m.gamma(s);
  const SliceTensor d1 = m.d1(s);
  const SliceTensor d2 = m.d2(s);
  const SliceScalar K = K_fn ? K_fn(s) : slice_intrinsic_curvature(gamma);
  return curvature_from_derivatives(gamma, d1, d2, K);
}

ConcentrationReport concentration_profile(const MollifiedPath& m,
                                          const MeanCurvatureJump& jump,
                                          const std::function<SliceScalar(double)>& K_fn) {
  ConcentrationReport rep;
  const double delta = m.delta();
  const double w = m.config().inner_halfwidth();
  rep.delta = delta;
  rep.h_jump_min = jump.jump_min;
  rep.h_jump_max = jump.jump_max;
  const SliceScalar target = jump.jump * 2.0;
  rep.target_min = target.min();
  rep.target_max = target.max();

  const BumpKernel& phi = m.config().phi;
  auto R_at = [&](double s) { return mollified_curvature_at(m, s, K_fn).R; };

  // sweep the band on the refined grid
  for (double s : m.s_grid()) {
    if (std::fabs(s) > 0.5 * delta) continue;
    const SliceScalar R = R_at(s);
    if (std::fabs(s) > w) {
      rep.sup_outside_inner = std::max(rep.sup_outside_inner, R.sup_abs());
    } else {
      const SliceScalar predicted = target * (phi(s / w) / w);
      rep.sup_inner_residual = std::max(rep.sup_inner_residual, (R - predicted).sup_abs());
    }
  }

  const std::vector<double> splits = {-0.25 * delta, -w, 0.0, w, 0.25 * delta};
  const SliceScalar line =
      integrate_adaptive_split(R_at, -0.5 * delta, 0.5 * delta, splits, 1e-8);
  rep.line_integral_min = line.min();
  rep.line_integral_max = line.max();
  rep.kernel_mass = integrate_adaptive([&](double s) { return phi(s / w) / w; }, -w, w, 1e-12);
  return rep;
}

DistributionalLimit distributional_scalar_curvature(const CornerMetric& corner,
                                                    const std::vector<double>& deltas,
                                                    double epsilon, std::size_t n_t) {
  if (corner.family != Family::Spherical)
    throw config_error("distributional_scalar_curvature: spherical families only");
  DistributionalLimit lim;
  auto path = std::make_shared<MetricPath>(build_collar(corner, epsilon, n_t));
  const MeanCurvatureJump jump = mean_curvature_jump(corner);
  lim.target = 2.0 * jump.jump.scalar();
  for (double delta : deltas) {
    MollifiedPath m = mollify_path(path, MollifierConfig::make(delta));
    const ConcentrationReport rep = concentration_profile(m, jump);
    lim.deltas.push_back(delta);
    lim.integrals.push_back(rep.line_integral_max);
  }
  lim.extrapolated = richardson_extrapolate(lim.integrals, 1.0);
  return lim;
}

}  // namespace cornermass
