#include "cornermass/curvature.hpp"

#include <cmath>

namespace cornermass {

PointCurvature curvature_from_derivatives(const SliceTensor& gamma, const SliceTensor& d1,
                                          const SliceTensor& d2, const SliceScalar& K) {
  PointCurvature p;
  p.A = d1 * 0.5;
  p.H = p.A.trace_with(gamma);
  p.A2 = p.A.inner_with(gamma, p.A);
  // dH = d(gamma^{ij}) A_ij + gamma^{ij} dA_ij = -2|A|^2 + tr(gamma'' )/2
  p.dH = p.A2 * (-2.0) + (d2 * 0.5).trace_with(gamma);
  p.K = K;
  const SliceScalar h2 = p.H * p.H;
  p.R = K * 2.0 - (p.A2 + h2) - p.dH * 2.0;
  return p;
}

SliceTensor second_fundamental_form(const MetricPath& path, std::size_t i, Side side) {
  return path.eval_d1(path.t_grid()[i], side) * 0.5;
}

SliceScalar mean_curvature(const MetricPath& path, std::size_t i, Side side) {
  return second_fundamental_form(path, i, side).trace_with(path.values()[i]);
}

namespace {

// periodic second-order derivatives of a 2D field
struct Field2D {
  const std::vector<double>* v;
  TorusGridSpec g;
  double at(long i, long j) const {
    const long nx = long(g.nx), ny = long(g.ny);
    i = ((i % nx) + nx) % nx;
    j = ((j % ny) + ny) % ny;
    return (*v)[std::size_t(j) * g.nx + std::size_t(i)];
  }
  double dx(long i, long j) const { return (at(i + 1, j) - at(i - 1, j)) / (2 * g.hx()); }
  double dy(long i, long j) const { return (at(i, j + 1) - at(i, j - 1)) / (2 * g.hy()); }
  double dxx(long i, long j) const {
    return (at(i + 1, j) - 2 * at(i, j) + at(i - 1, j)) / (g.hx() * g.hx());
  }
  double dyy(long i, long j) const {
    return (at(i, j + 1) - 2 * at(i, j) + at(i, j - 1)) / (g.hy() * g.hy());
  }
  double dxy(long i, long j) const {
    return (at(i + 1, j + 1) - at(i + 1, j - 1) - at(i - 1, j + 1) + at(i - 1, j - 1)) /
           (4 * g.hx() * g.hy());
  }
};

double det3(double a11, double a12, double a13, double a21, double a22, double a23,
            double a31, double a32, double a33) {
  return a11 * (a22 * a33 - a23 * a32) - a12 * (a21 * a33 - a23 * a31) +
         a13 * (a21 * a32 - a22 * a31);
}

}  // namespace

SliceScalar slice_intrinsic_curvature(const SliceTensor& gamma, int /*fd_order*/) {
  if (gamma.kind() == SliceKind::SphericalScalar)
    return SliceScalar::spherical(1.0 / gamma.coeff());

  const TorusGridSpec g = gamma.grid();
  Field2D E{&gamma.c11(), g}, F{&gamma.c12(), g}, G{&gamma.c22(), g};
  std::vector<double> out(g.size());
  for (long j = 0; j < long(g.ny); ++j)
    for (long i = 0; i < long(g.nx); ++i) {
      const double e = E.at(i, j), f = F.at(i, j), gg = G.at(i, j);
      const double ex = E.dx(i, j), ey = E.dy(i, j);
      const double fx = F.dx(i, j), fy = F.dy(i, j);
      const double gx = G.dx(i, j), gy = G.dy(i, j);
      const double eyy = E.dyy(i, j), gxx = G.dxx(i, j), fxy = F.dxy(i, j);
      const double det = e * gg - f * f;
      // Brioschi formula
      const double m1 =
          det3(-0.5 * eyy + fxy - 0.5 * gxx, 0.5 * ex, fx - 0.5 * ey,  //
               fy - 0.5 * gx, e, f,                                    //
               0.5 * gy, f, gg);
      const double m2 = det3(0.0, 0.5 * ey, 0.5 * gx,  //
                             0.5 * ey, e, f,           //
                             0.5 * gx, f, gg);
      out[std::size_t(j) * g.nx + std::size_t(i)] = (m1 - m2) / (det * det);
    }
  return SliceScalar::torus(g, std::move(out));
}

CurvatureField collar_scalar_curvature(const MetricPath& path,
                                       const std::function<SliceScalar(double)>& K_fn) {
  CurvatureField f;
  const std::size_t n = path.size();
  const std::size_t c = path.corner_index();
  f.A.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = path.t_grid()[i];
    const SliceTensor& gamma = path.values()[i];
    const SliceTensor d1 = path.eval_d1(t, Side::minus);
    const SliceTensor d2 = path.eval_d2(t, Side::minus);
    const SliceScalar K = K_fn ? K_fn(t) : slice_intrinsic_curvature(gamma);
    PointCurvature p = curvature_from_derivatives(gamma, d1, d2, K);
    f.A.push_back(std::move(p.A));
    f.H.push_back(std::move(p.H));
    f.A2.push_back(std::move(p.A2));
    f.K.push_back(std::move(p.K));
    f.dH_dt.push_back(std::move(p.dH));
    f.R.push_back(std::move(p.R));
  }
  {
    const SliceTensor& gamma = path.values()[c];
    const SliceTensor d1 = path.eval_d1(0.0, Side::plus);
    const SliceTensor d2 = path.eval_d2(0.0, Side::plus);
    PointCurvature p = curvature_from_derivatives(gamma, d1, d2, f.K[c]);
    f.A_corner_plus = std::move(p.A);
    f.H_corner_plus = std::move(p.H);
    f.A2_corner_plus = std::move(p.A2);
    f.dH_corner_plus = std::move(p.dH);
    f.R_corner_plus = std::move(p.R);
  }
  return f;
}

}  // namespace cornermass
