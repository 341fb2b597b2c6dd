#include "cornermass/mollifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "cornermass/grid.hpp"
#include "cornermass/quadrature.hpp"

namespace cornermass {

MollifierConfig MollifierConfig::make(double delta, double plateau) {
  MollifierConfig cfg;
  cfg.delta = delta;
  cfg.plateau = plateau;
  cfg.sigma = CutoffProfile(plateau);
  return cfg;
}

void MollifierConfig::validate(double epsilon) const {
  if (delta <= 0.0) throw config_error("MollifierConfig: delta must be positive");
  if (delta > epsilon / 10.0 + 1e-15)
    throw config_error("MollifierConfig: delta must satisfy delta <= epsilon/10");
  if (plateau <= 0.0 || plateau > 0.01 + 1e-15)
    throw config_error("MollifierConfig: plateau must lie in (0, 1/100]");
}

MollifiedPath::MollifiedPath(std::shared_ptr<const MetricPath> base, MollifierConfig cfg)
    : base_(std::move(base)), cfg_(cfg) {
  cfg_.validate(base_->epsilon());
  jump_ = base_->corner_d1_jump();

  const double delta = cfg_.delta;
  const double w = cfg_.inner_halfwidth();
  const double eps = base_->epsilon();
  const std::size_t inner = std::max<std::size_t>(cfg_.refined_band_nodes, 20);
  // piecewise-uniform refinement: coarse outside the band, finer towards the
  // Dirac-scale inner band
  s_grid_ = zoned_grid(
      {-2.0 * eps, -0.5 * delta, -0.25 * delta, -w, w, 0.25 * delta, 0.5 * delta,
       2.0 * eps},
      {std::size_t((2.0 * eps - 0.5 * delta) / base_->spacing()) + 1, 64, 96, inner, 96, 64,
       std::size_t((2.0 * eps - 0.5 * delta) / base_->spacing()) + 1});
}

SliceTensor MollifiedPath::gamma(double s, double tol_override) const {
  const double sd = cfg_.sigma_delta(s);
  if (sd <= 0.0) return base_->eval(s);
  const double tol = tol_override > 0.0 ? tol_override : cfg_.quad_tol;
  const BumpKernel& phi = cfg_.phi;
  auto f = [&](double t) { return base_->eval(s - sd * t) * phi(t); };
  std::vector<double> splits;
  const double tk = s / sd;  // preimage of the corner
  if (std::fabs(tk) < 1.0) splits.push_back(tk);
  return integrate_adaptive_split(f, -1.0, 1.0, splits, tol);
}

SliceTensor MollifiedPath::d1(double s) const {
  if (std::fabs(s) >= 0.5 * cfg_.delta)
    return base_->eval_d1(s, base_->side_of(s));
  const double sd = cfg_.sigma_delta(s);
  const double sdp = cfg_.sigma_delta_d1(s);
  const BumpKernel& phi = cfg_.phi;
  auto f = [&](double t) {
    const double arg = s - sd * t;
    return base_->eval_d1(arg, base_->side_of(arg)) * ((1.0 - t * sdp) * phi(t));
  };
  std::vector<double> splits;
  if (sd > 0.0 && std::fabs(s / sd) < 1.0) splits.push_back(s / sd);
  return integrate_adaptive_split(f, -1.0, 1.0, splits, cfg_.quad_tol);
}

SliceTensor MollifiedPath::d2(double s) const {
  if (std::fabs(s) >= 0.5 * cfg_.delta)
    return base_->eval_d2(s, base_->side_of(s));
  const double sd = cfg_.sigma_delta(s);
  const double sdp = cfg_.sigma_delta_d1(s);
  const double sdpp = cfg_.sigma_delta_d2(s);
  const BumpKernel& phi = cfg_.phi;
  auto f = [&](double t) {
    const double arg = s - sd * t;
    const Side side = base_->side_of(arg);
    const double fac = 1.0 - t * sdp;
    return base_->eval_d2(arg, side) * (fac * fac * phi(t)) +
           base_->eval_d1(arg, side) * (-t * sdpp * phi(t));
  };
  std::vector<double> splits;
  if (sd > 0.0 && std::fabs(s / sd) < 1.0) splits.push_back(s / sd);
  SliceTensor out = integrate_adaptive_split(f, -1.0, 1.0, splits, cfg_.quad_tol);
  // Dirac term from the gamma' jump; phi vanishes outside the inner band, so
  // the inner and outer formulas agree on their overlap.
  const double w = cfg_.inner_halfwidth();
  const double d = phi(s / w) / w;
  if (d != 0.0) out = out + jump_ * d;
  return out;
}

MollifiedPath mollify_path(std::shared_ptr<const MetricPath> base, MollifierConfig cfg) {
  return MollifiedPath(std::move(base), cfg);
}

LemmaReport verify_lemmas(const MollifiedPath& m) {
  LemmaReport rep;
  const MetricPath& base = m.base();
  rep.delta = m.delta();
  rep.lipschitz_L = base.lipschitz_L();
  rep.c0_bound = rep.lipschitz_L * m.delta() * m.delta();
  rep.min_eigenvalue = std::numeric_limits<double>::infinity();

  SliceTensor prev_d1;
  bool have_prev = false;
  double prev_s = 0.0;
  for (double s : m.s_grid()) {
    if (std::fabs(s) > 1.9 * base.epsilon()) continue;
    const SliceTensor g = m.gamma(s);
    const double dev = (g - base.eval(s)).inf_norm();
    rep.max_c0_dev = std::max(rep.max_c0_dev, dev);
    if (std::fabs(s) > 0.5 * m.delta())
      rep.max_outside_band_dev = std::max(rep.max_outside_band_dev, dev);
    rep.min_eigenvalue = std::min(rep.min_eigenvalue, g.min_eigenvalue());
    if (std::fabs(s) <= 0.5 * m.delta()) {
      const SliceTensor d1 = m.d1(s);
      if (have_prev && s - prev_s > 0.0) {
        const double mod = (d1 - prev_d1).inf_norm();
        rep.c1_modulus = std::max(rep.c1_modulus, mod);
      }
      prev_d1 = d1;
      prev_s = s;
      have_prev = true;
    }
  }
  rep.agrees_outside = rep.max_outside_band_dev <= 1e-10;
  rep.c0_within_bound = rep.max_c0_dev <= rep.c0_bound * (1.0 + 1e-8) + 1e-14;
  return rep;
}

DerivativeCheck check_derivative_consistency(const MollifiedPath& m) {
  DerivativeCheck chk;
  const double delta = m.delta();
  const double w = m.config().inner_halfwidth();
  struct Probe {
    double s, h;
  };
  // probe points in the inner band, the plateau region, the sigma transition
  // region, and near the band edge, with steps matched to the local scale
  const std::vector<Probe> probes = {
      {0.0, w / 10.0},           {0.45 * w, w / 10.0},      {3.0 * w, w / 4.0},
      {0.1 * delta, delta / 64}, {-0.3 * delta, delta / 64}, {0.42 * delta, delta / 64},
  };
  const double tol = 1e-14;
  const std::size_t np = probes.size();
  std::vector<double> e1(2 * np, 0.0), e2(2 * np, 0.0);
  for (std::size_t half = 0; half < 2; ++half) {
    for (std::size_t k = 0; k < np; ++k) {
      const auto& p = probes[k];
      const double hh = (half ? 0.5 : 1.0) * p.h;
      const SliceTensor gp = m.gamma(p.s + hh, tol);
      const SliceTensor gm = m.gamma(p.s - hh, tol);
      const SliceTensor g0 = m.gamma(p.s, tol);
      const SliceTensor d1_fd = (gp - gm) * (0.5 / hh);
      const SliceTensor d2_fd = (gp - g0 * 2.0 + gm) * (1.0 / (hh * hh));
      const double s1 = 1.0 + m.d1(p.s).inf_norm();
      const double s2 = 1.0 + m.d2(p.s).inf_norm();
      e1[half * np + k] = (d1_fd - m.d1(p.s)).inf_norm() / s1;
      e2[half * np + k] = (d2_fd - m.d2(p.s)).inf_norm() / s2;
    }
  }
  // the reported order is the convergence rate at the probe whose coarse-step
  // error dominates; probes already sitting at the roundoff or quadrature
  // floor would otherwise poison the ratio
  auto reduce = [np](const std::vector<double>& e, double& err_h, double& err_h2,
                     double& order) {
    std::size_t dom = 0;
    for (std::size_t k = 0; k < np; ++k) {
      if (e[k] > e[dom]) dom = k;
      err_h = std::max(err_h, e[k]);
      err_h2 = std::max(err_h2, e[np + k]);
    }
    if (e[np + dom] > 0.0) order = std::log2(e[dom] / e[np + dom]);
  };
  reduce(e1, chk.d1_err_h, chk.d1_err_h2, chk.d1_order);
  reduce(e2, chk.d2_err_h, chk.d2_err_h2, chk.d2_order);
  return chk;
}

}  // namespace cornermass
