#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "cornermass/slice_tensor.hpp"
#include "cornermass/types.hpp"

namespace cornermass {

using TensorFn = std::function<SliceTensor(double)>;

/// Closed-form description of one side of a collar path, with derivatives.
struct PathSideFns {
  TensorFn value;  // gamma(t)
  TensorFn d1;     // gamma'(t)
  TensorFn d2;     // gamma''(t)
};

/// The collar path t -> gamma(t) of induced slice metrics, t in [-2 eps, 2 eps],
/// with the corner at t = 0 (single shared node, two one-sided derivative sets).
class MetricPath {
 public:
  /// Sample a path from per-side closed forms. n_t must be odd so that t = 0
  /// is a node. The analytic side functions are kept for exact derivative
  /// evaluation; pass value-only PathSideFns to force interpolation.
  static MetricPath from_sides(PathSideFns minus, PathSideFns plus, double epsilon,
                               std::size_t n_t);

  /// Build from explicit samples only (interpolation used for evaluation).
  static MetricPath from_samples(std::vector<double> t_grid,
                                 std::vector<SliceTensor> values, double epsilon);

  double epsilon() const { return epsilon_; }
  std::size_t size() const { return t_.size(); }
  const std::vector<double>& t_grid() const { return t_; }
  const std::vector<SliceTensor>& values() const { return values_; }
  std::size_t corner_index() const { return corner_; }
  double spacing() const { return h_; }
  double lipschitz_L() const { return lipschitz_L_; }
  bool has_analytic() const { return bool(minus_.d1) && bool(plus_.d1); }

  /// gamma(t); analytic when available, piecewise-cubic per side otherwise.
  SliceTensor eval(double t) const;
  /// One-sided first/second t-derivative. `side` matters only at t = 0.
  SliceTensor eval_d1(double t, Side side) const;
  SliceTensor eval_d2(double t, Side side) const;
  Side side_of(double t) const { return t < 0.0 ? Side::minus : Side::plus; }

  /// Jump of gamma' at the corner: gamma_+'(0) - gamma_-'(0).
  SliceTensor corner_d1_jump() const;

 private:
  void finalize();
  SliceTensor interp(const std::vector<SliceTensor>& samples, double t, Side side) const;
  const std::vector<SliceTensor>& d1_samples() const;
  const std::vector<SliceTensor>& d2_samples() const;

  double epsilon_ = 0.0;
  double h_ = 0.0;
  std::size_t corner_ = 0;
  std::vector<double> t_;
  std::vector<SliceTensor> values_;
  double lipschitz_L_ = 0.0;
  PathSideFns minus_, plus_;

  // lazy FD derivative samples (per side split at the corner), for
  // interpolation when no analytic derivative is available
  mutable std::shared_ptr<std::vector<SliceTensor>> d1_cache_;
  mutable std::shared_ptr<std::vector<SliceTensor>> d2_cache_;
  mutable std::shared_ptr<SliceTensor> d1_corner_plus_, d2_corner_plus_;

 public:
  const SliceTensor& d1_corner_plus() const;
  const SliceTensor& d2_corner_plus() const;
};

/// Wraps scalar profile functions c(t), c'(t), c''(t) as one side of a path
/// gamma(t) = c(t) * ghat in spherical-tensor form (mollifier lemma rigs,
/// spherical collars, CLI demos). Derivative functions may be empty.
PathSideFns scalar_side(std::function<double(double)> c,
                        std::function<double(double)> dc = {},
                        std::function<double(double)> d2c = {});

}  // namespace cornermass
