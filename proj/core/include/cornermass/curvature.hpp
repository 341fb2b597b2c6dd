#pragma once

#include <functional>
#include <vector>

#include "cornermass/metric_path.hpp"
#include "cornermass/slice_tensor.hpp"

namespace cornermass {

/// Extrinsic/intrinsic curvature of the collar slices. Arrays are indexed by
/// the t nodes of the path; the corner node carries the minus-side values,
/// with the plus-side one-sided set stored separately.
struct CurvatureField {
  std::vector<SliceTensor> A;     // second fundamental form, A = gamma'/2
  std::vector<SliceScalar> H;     // mean curvature, trace of A
  std::vector<SliceScalar> A2;    // |A|^2
  std::vector<SliceScalar> K;     // intrinsic (Gaussian) curvature of the slice
  std::vector<SliceScalar> dH_dt;
  std::vector<SliceScalar> R;     // scalar curvature, R = 2K - (|A|^2 + H^2) - 2 dH/dt

  SliceTensor A_corner_plus;
  SliceScalar H_corner_plus, A2_corner_plus, dH_corner_plus, R_corner_plus;
};

/// Pointwise curvature quantities assembled algebraically from the slice
/// metric and its first/second t-derivatives plus intrinsic curvature K.
struct PointCurvature {
  SliceTensor A;
  SliceScalar H, A2, dH, K, R;
};

PointCurvature curvature_from_derivatives(const SliceTensor& gamma, const SliceTensor& d1,
                                          const SliceTensor& d2, const SliceScalar& K);

SliceTensor second_fundamental_form(const MetricPath& path, std::size_t i,
                                    Side side = Side::minus);
SliceScalar mean_curvature(const MetricPath& path, std::size_t i, Side side = Side::minus);

/// Intrinsic curvature of a single slice metric: 1/c for the spherical
/// representation, Gaussian curvature by second-order periodic finite
/// differences (Brioschi formula) for the torus grid.
SliceScalar slice_intrinsic_curvature(const SliceTensor& gamma, int fd_order = 2);

/// All curvature fields of the collar path. When `K_fn` is provided it
/// supplies the slice curvature (closed form); otherwise it is computed from
/// the sampled slice metrics.
CurvatureField collar_scalar_curvature(const MetricPath& path,
                                       const std::function<SliceScalar(double)>& K_fn = {});

}  // namespace cornermass
