#include "cornermass/conformal.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "cornermass/grid.hpp"

namespace cornermass {

namespace {

void check_spec(const RadialBVPSpec& spec) {
  if (spec.s.size() < 5) throw solver_error("radial BVP: grid too small");
  if (!spec.p || !spec.q || !spec.f) throw solver_error("radial BVP: missing coefficients");
}

std::vector<double> thomas(std::vector<double> a, std::vector<double> b,
                           std::vector<double> c, std::vector<double> d) {
  const std::size_t n = b.size();
  for (std::size_t i = 1; i < n; ++i) {
    const double m = a[i] / b[i - 1];
    b[i] -= m * c[i - 1];
    d[i] -= m * d[i - 1];
  }
  std::vector<double> y(n);
  y[n - 1] = d[n - 1] / b[n - 1];
  for (std::size_t i = n - 1; i-- > 0;) y[i] = (d[i] - c[i] * y[i + 1]) / b[i];
  return y;
}

// first derivative of samples on a nonuniform grid, three-point stencils
std::vector<double> grid_derivative(const std::vector<double>& s,
                                    const std::vector<double>& y) {
  const std::size_t n = s.size();
  std::vector<double> dy(n);
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double hm = s[i] - s[i - 1], hp = s[i + 1] - s[i];
    dy[i] = (y[i + 1] * hm * hm - y[i - 1] * hp * hp + y[i] * (hp * hp - hm * hm)) /
            (hm * hp * (hm + hp));
  }
  {
    const double h0 = s[1] - s[0], h1 = s[2] - s[1];
    dy[0] = (y[1] - y[0]) / h0 - h0 * ((y[2] - y[1]) / h1 - (y[1] - y[0]) / h0) / (h0 + h1);
    const double hm = s[n - 2] - s[n - 3], hp = s[n - 1] - s[n - 2];
    dy[n - 1] =
        (y[n - 1] - y[n - 2]) / hp + hp * ((y[n - 1] - y[n - 2]) / hp - (y[n - 2] - y[n - 3]) / hm) / (hm + hp);
  }
  return dy;
}

}  // namespace

std::vector<double> solve_bvp_fd(const RadialBVPSpec& spec) {
  check_spec(spec);
  const std::vector<double>& s = spec.s;
  const std::size_t n = s.size();
  std::vector<double> a(n, 0.0), b(n, 0.0), c(n, 0.0), d(n, 0.0);

  {
    const double h = s[1] - s[0];
    const double lap = spec.smooth_center ? double(spec.n_dim) : 1.0;
    // symmetric ghost node (y' = 0); at a smooth center the radial Laplacian
    // degenerates to n_dim * y''
    b[0] = spec.q(s[0]) - 2.0 * lap / (h * h);
    c[0] = 2.0 * lap / (h * h);
    d[0] = spec.f(s[0]);
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const double hm = s[i] - s[i - 1], hp = s[i + 1] - s[i];
    const double denom = hm * hp * (hm + hp);
    const double pi = spec.p(s[i]);
    a[i] = 2.0 * hp / denom - pi * hp * hp / denom;
    b[i] = -2.0 * (hm + hp) / denom + pi * (hp * hp - hm * hm) / denom + spec.q(s[i]);
    c[i] = 2.0 * hm / denom + pi * hm * hm / denom;
    d[i] = spec.f(s[i]);
  }
  {
    const std::size_t N = n - 1;
    const double h = s[N] - s[N - 1];
    const double pN = spec.p(s[N]);
    const double beta = spec.robin_beta, rr = spec.robin_rhs;
    a[N] = 2.0 / (h * h);
    b[N] = -2.0 / (h * h) - 2.0 * beta / h - pN * beta + spec.q(s[N]);
    d[N] = spec.f(s[N]) - 2.0 * rr / h - pN * rr;
  }
  return thomas(std::move(a), std::move(b), std::move(c), std::move(d));
}

std::vector<double> solve_bvp_shooting(const RadialBVPSpec& spec, std::size_t substeps) {
  check_spec(spec);
  const std::vector<double>& s = spec.s;
  const std::size_t n = s.size();

  struct State {
    double y, dy;
  };
  auto rhs = [&](double sv, const State& st, bool particular) {
    return State{st.dy,
                 (particular ? spec.f(sv) : 0.0) - spec.p(sv) * st.dy - spec.q(sv) * st.y};
  };
  auto rk4_step = [&](double sv, double h, State st, bool particular) {
    const State k1 = rhs(sv, st, particular);
    const State k2 = rhs(sv + 0.5 * h, {st.y + 0.5 * h * k1.y, st.dy + 0.5 * h * k1.dy},
                         particular);
    const State k3 = rhs(sv + 0.5 * h, {st.y + 0.5 * h * k2.y, st.dy + 0.5 * h * k2.dy},
                         particular);
    const State k4 = rhs(sv + h, {st.y + h * k3.y, st.dy + h * k3.dy}, particular);
    st.y += h / 6.0 * (k1.y + 2.0 * k2.y + 2.0 * k3.y + k4.y);
    st.dy += h / 6.0 * (k1.dy + 2.0 * k2.dy + 2.0 * k3.dy + k4.dy);
    return st;
  };

  std::vector<double> yp(n), yh(n);
  State p_state, h_state;
  std::size_t start = 0;
  if (spec.smooth_center) {
    // series through the center: y = y0 + a s^2 with 2 n_dim a + q y0 = f
    const double q0 = spec.q(s[0]), f0 = spec.f(s[0]);
    const double s1 = s[1];
    const double ap = f0 / (2.0 * spec.n_dim);
    const double ah = -q0 / (2.0 * spec.n_dim);
    yp[0] = 0.0;
    yh[0] = 1.0;
    p_state = {ap * s1 * s1, 2.0 * ap * s1};
    h_state = {1.0 + ah * s1 * s1, 2.0 * ah * s1};
    yp[1] = p_state.y;
    yh[1] = h_state.y;
    start = 1;
  } else {
    p_state = {0.0, 0.0};
    h_state = {1.0, 0.0};
    yp[0] = 0.0;
    yh[0] = 1.0;
  }
  for (std::size_t i = start; i + 1 < n; ++i) {
    const double h = (s[i + 1] - s[i]) / double(substeps);
    for (std::size_t k = 0; k < substeps; ++k) {
      const double sv = s[i] + double(k) * h;
      p_state = rk4_step(sv, h, p_state, true);
      h_state = rk4_step(sv, h, h_state, false);
    }
    yp[i + 1] = p_state.y;
    yh[i + 1] = h_state.y;
  }
  const double gp = p_state.dy + spec.robin_beta * p_state.y;
  const double gh = h_state.dy + spec.robin_beta * h_state.y;
  if (std::fabs(gh) < 1e-300) throw solver_error("shooting: degenerate homogeneous solution");
  const double alpha = (spec.robin_rhs - gp) / gh;
  std::vector<double> y(n);
  for (std::size_t i = 0; i < n; ++i) y[i] = yp[i] + alpha * yh[i];
  return y;
}

namespace {

// linear interpolation of node samples (for the shooting substep points)
struct Interp {
  const std::vector<double>* s;
  std::vector<double> v;
  double operator()(double x) const {
    const std::vector<double>& g = *s;
    if (x <= g.front()) return v.front();
    if (x >= g.back()) return v.back();
    const std::size_t j = std::size_t(std::upper_bound(g.begin(), g.end(), x) - g.begin());
    const double t = (x - g[j - 1]) / (g[j] - g[j - 1]);
    return (1.0 - t) * v[j - 1] + t * v[j];
  }
};

struct StageOutput {
  ConformalStage stage;
  std::vector<double> y;
  std::vector<double> dy;
};

StageOutput run_stage(const SphericalGeometry& geo, const std::vector<double>& r,
                      const std::vector<double>& q_nodes, double sign,
                      const std::function<double(double)>& p_fn,
                      const std::vector<double>& weight,  // u^2 factor of the measure
                      double robin_beta, const std::vector<double>& decay_profile) {
  // equation u'' + p u' + sign * q u = 0 with u -> 1; solved for y = u - 1
  const std::vector<double>& s = geo.s;
  const std::size_t n = s.size();
  Interp q_interp{&geo.s, q_nodes};

  RadialBVPSpec spec;
  spec.s = s;
  spec.n_dim = geo.n_dim;
  spec.smooth_center = geo.inner_boundary == InnerBoundaryKind::SmoothCenter;
  spec.p = p_fn;
  spec.q = [q_interp, sign](double sv) { return sign * q_interp(sv); };
  spec.f = [q_interp, sign](double sv) { return -sign * q_interp(sv); };
  spec.robin_beta = robin_beta;

  StageOutput out;
  out.y = solve_bvp_fd(spec);
  const std::vector<double> y2 = solve_bvp_shooting(spec);
  for (std::size_t i = 0; i < n; ++i)
    out.stage.solver_mismatch = std::max(out.stage.solver_mismatch,
                                         std::fabs(out.y[i] - y2[i]));
  out.dy = grid_derivative(s, out.y);

  out.stage.u.resize(n);
  out.stage.u_min = 1e300;
  out.stage.u_max = -1e300;
  for (std::size_t i = 0; i < n; ++i) {
    out.stage.u[i] = 1.0 + out.y[i];
    out.stage.u_min = std::min(out.stage.u_min, out.stage.u[i]);
    out.stage.u_max = std::max(out.stage.u_max, out.stage.u[i]);
  }

  // decay coefficient: least-squares fit y ~ A * profile over the outer tail
  {
    double num = 0.0, den = 0.0;
    const double s_lo = s.back() - 0.1 * (s.back() - s.front());
    for (std::size_t i = 0; i < n; ++i) {
      if (s[i] < s_lo) continue;
      num += out.y[i] * decay_profile[i];
      den += decay_profile[i] * decay_profile[i];
    }
    out.stage.A_decay = num / den;
  }

  // energy identity: int (u'^2 - sign q u^2) weight r^2 ds equals the flux
  // -A u(s_max) through the outer sphere (u = 1 + A W + ... there)
  {
    std::vector<double> integrand(n);
    for (std::size_t i = 0; i < n; ++i) {
      const double u = out.stage.u[i];
      integrand[i] =
          (out.dy[i] * out.dy[i] - sign * q_nodes[i] * u * u) * weight[i] * r[i] * r[i];
    }
    const double e = trapezoid(s, integrand);
    out.stage.energy = 4.0 * std::numbers::pi * e;
    out.stage.A_integral = -e / out.stage.u.back();
  }
  return out;
}

}  // namespace

PipelineResult run_conformal_pipeline(const SphericalGeometry& geo,
                                      const MeanCurvatureJump& jump) {
  const std::vector<double>& s = geo.s;
  const std::size_t n = s.size();
  const double cn = conformal_coupling(geo.n_dim);

  PipelineResult res;
  res.delta = geo.delta;
  res.h_jump = jump.jump.scalar();
  res.dominance = jump.dominance;
  res.mass_smoothed = geo.hawking_mass(s.back());

  std::vector<double> r(n), dr(n), R(n), Rm(n), Rp(n), W(n), ones(n, 1.0);
  for (std::size_t i = 0; i < n; ++i) {
    r[i] = geo.r(s[i]);
    dr[i] = geo.dr(s[i]);
    R[i] = geo.scalar_curvature(s[i]);
    Rm[i] = std::max(-R[i], 0.0);
    Rp[i] = std::max(R[i], 0.0);
    W[i] = geo.harmonic_radius(s[i]);
  }

  // smallness of the negative part, (int R_-^{n/2} dV)^{2/n}
  {
    std::vector<double> integrand(n);
    for (std::size_t i = 0; i < n; ++i)
      integrand[i] = std::pow(Rm[i], 1.5) * 4.0 * std::numbers::pi * r[i] * r[i];
    res.smallness = std::pow(trapezoid(s, integrand), 2.0 / 3.0);
  }

  const double r_out = r.back();
  const double W_out = W.back();
  const double beta1 = 1.0 / (r_out * r_out * W_out);

  // first correction: Delta u + c_n R_- u = 0
  std::vector<double> q1(n);
  for (std::size_t i = 0; i < n; ++i) q1[i] = cn * Rm[i];
  auto p1 = [&geo](double sv) { return 2.0 * geo.dr(sv) / geo.r(sv); };
  StageOutput st1 = run_stage(geo, r, q1, +1.0, p1, ones, beta1, W);
  res.first = st1.stage;
  res.mass_tilde = res.mass_smoothed + 2.0 * st1.stage.A_integral;

  // second correction on the tilde metric: Delta_t v - c_n Rt v = 0, which in
  // the original radial coordinate is v'' + (p + 2u'/u) v' - c_n R_+ v = 0
  std::vector<double> q2(n), w2(n), Wt(n);
  for (std::size_t i = 0; i < n; ++i) {
    q2[i] = cn * Rp[i];
    w2[i] = st1.stage.u[i] * st1.stage.u[i];
    Wt[i] = W[i] / st1.stage.u[i];
  }
  Interp u_interp{&geo.s, st1.stage.u};
  Interp du_interp{&geo.s, st1.dy};
  auto p2 = [&geo, u_interp, du_interp](double sv) {
    return 2.0 * geo.dr(sv) / geo.r(sv) + 2.0 * du_interp(sv) / u_interp(sv);
  };
  const double beta2 = beta1 / st1.stage.u.back();
  StageOutput st2 = run_stage(geo, r, q2, -1.0, p2, w2, beta2, Wt);
  res.second = st2.stage;
  res.mass_hat = res.mass_tilde + 2.0 * st2.stage.A_integral;
  return res;
}

}  // namespace cornermass
