#pragma once

#include <memory>
#include <vector>

#include "cornermass/kernels.hpp"
#include "cornermass/metric_path.hpp"

namespace cornermass {

/// Parameters of the variable-bandwidth mollification: bandwidth profile
/// sigma_delta(t) = delta^2 sigma(t/delta), kernel phi, quadrature control.
struct MollifierConfig {
  double delta = 0.1;
  double plateau = 0.01;  // sigma plateau height (1/100 per the construction)
  double quad_tol = 1e-10;
  std::size_t refined_band_nodes = 24;  // nodes across the inner band

  BumpKernel phi;
  CutoffProfile sigma{plateau};

  static MollifierConfig make(double delta, double plateau = 0.01);
  void validate(double epsilon) const;

  double sigma_delta(double t) const { return delta * delta * sigma(t / delta); }
  /// d/dt sigma_delta = delta sigma'(t/delta)
  double sigma_delta_d1(double t) const { return delta * sigma.derivative(t / delta); }
  /// d2/dt2 sigma_delta = sigma''(t/delta)
  double sigma_delta_d2(double t) const { return sigma.second_derivative(t / delta); }

  /// Half-width of the inner (Dirac-scale) band, delta^2 * plateau.
  double inner_halfwidth() const { return delta * delta * plateau; }
};

/// The smoothed path gamma_delta with analytic first/second derivatives.
/// Evaluation is on demand; the refined s grid resolves the inner band.
class MollifiedPath {
 public:
  MollifiedPath(std::shared_ptr<const MetricPath> base, MollifierConfig cfg);

  const MetricPath& base() const { return *base_; }
  const MollifierConfig& config() const { return cfg_; }
  double delta() const { return cfg_.delta; }
  const std::vector<double>& s_grid() const { return s_grid_; }

  /// gamma_delta(s) = int gamma(s - sigma_delta(s) t) phi(t) dt; returns the
  /// base value exactly when sigma_delta(s) = 0.
  SliceTensor gamma(double s, double tol_override = 0.0) const;
  /// First derivative via the closed convolution formula.
  SliceTensor d1(double s) const;
  /// Second derivative; inner-band formula carries the corner-jump Dirac term.
  SliceTensor d2(double s) const;

  /// The corner jump gamma_+'(0) - gamma_-'(0) entering the Dirac term.
  const SliceTensor& jump() const { return jump_; }

 private:
  std::shared_ptr<const MetricPath> base_;
  MollifierConfig cfg_;
  SliceTensor jump_;
  std::vector<double> s_grid_;
};

MollifiedPath mollify_path(std::shared_ptr<const MetricPath> base, MollifierConfig cfg);

/// Measured quantities for the three smoothing lemmas.
struct LemmaReport {
  double delta = 0.0;
  double lipschitz_L = 0.0;
  double max_outside_band_dev = 0.0;  // sup ||gamma_delta - gamma|| for |s| > delta/2
  double max_c0_dev = 0.0;            // sup ||gamma_delta - gamma|| over all s
  double c0_bound = 0.0;              // L delta^2
  double c1_modulus = 0.0;            // discrete C^1 modulus of gamma_delta across the band
  double min_eigenvalue = 0.0;
  bool agrees_outside = false;
  bool c0_within_bound = false;
};

LemmaReport verify_lemmas(const MollifiedPath& m);

/// Analytic d1/d2 vs centered finite differences of gamma_delta, at probe
/// points in every bandwidth regime, for steps h and h/2.
struct DerivativeCheck {
  double d1_err_h = 0.0, d1_err_h2 = 0.0;
  double d2_err_h = 0.0, d2_err_h2 = 0.0;
  double d1_order = 0.0, d2_order = 0.0;
};

DerivativeCheck check_derivative_consistency(const MollifiedPath& m);

}  // namespace cornermass
