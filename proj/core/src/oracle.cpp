#include "cornermass/oracle.hpp"

#include <cmath>

namespace cornermass {

Mat3 invert3(const Mat3& g) {
  const double det =
      g[0][0] * (g[1][1] * g[2][2] - g[1][2] * g[2][1]) -
      g[0][1] * (g[1][0] * g[2][2] - g[1][2] * g[2][0]) +
      g[0][2] * (g[1][0] * g[2][1] - g[1][1] * g[2][0]);
  if (std::fabs(det) < 1e-300) throw geometry_error("invert3: singular metric");
  Mat3 inv;
  inv[0][0] = (g[1][1] * g[2][2] - g[1][2] * g[2][1]) / det;
  inv[0][1] = (g[0][2] * g[2][1] - g[0][1] * g[2][2]) / det;
  inv[0][2] = (g[0][1] * g[1][2] - g[0][2] * g[1][1]) / det;
  inv[1][0] = (g[1][2] * g[2][0] - g[1][0] * g[2][2]) / det;
  inv[1][1] = (g[0][0] * g[2][2] - g[0][2] * g[2][0]) / det;
  inv[1][2] = (g[0][2] * g[1][0] - g[0][0] * g[1][2]) / det;
  inv[2][0] = (g[1][0] * g[2][1] - g[1][1] * g[2][0]) / det;
  inv[2][1] = (g[0][1] * g[2][0] - g[0][0] * g[2][1]) / det;
  inv[2][2] = (g[0][0] * g[1][1] - g[0][1] * g[1][0]) / det;
  return inv;
}

namespace {

Vec3 shifted(Vec3 x, int a, double d) {
  x[std::size_t(a)] += d;
  return x;
}

// d g_bc / d x^a, central
std::array<Mat3, 3> metric_gradient(const MetricFn& g, const Vec3& x, double h) {
  std::array<Mat3, 3> dg;
  for (int a = 0; a < 3; ++a) {
    const Mat3 gp = g(shifted(x, a, h));
    const Mat3 gm = g(shifted(x, a, -h));
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) dg[a][b][c] = (gp[b][c] - gm[b][c]) / (2.0 * h);
  }
  return dg;
}

}  // namespace

std::array<Mat3, 3> oracle_christoffel(const MetricFn& g, const Vec3& x, double h) {
  const Mat3 gx = g(x);
  const Mat3 gi = invert3(gx);
  const std::array<Mat3, 3> dg = metric_gradient(g, x, h);
  std::array<Mat3, 3> gamma;  // gamma[a][b][c] = Gamma^a_{bc}
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      for (int c = 0; c < 3; ++c) {
        double sum = 0.0;
        for (int d = 0; d < 3; ++d)
          sum += gi[a][d] * (dg[b][d][c] + dg[c][b][d] - dg[d][b][c]);
        gamma[a][b][c] = 0.5 * sum;
      }
  return gamma;
}

Mat3 oracle_ricci(const MetricFn& g, const Vec3& x, double h) {
  // R_bc = d_a Gamma^a_{bc} - d_c Gamma^a_{ba} + Gamma^a_{ad} Gamma^d_{bc}
  //        - Gamma^a_{cd} Gamma^d_{ab}
  std::array<std::array<Mat3, 3>, 3> dgamma;  // dgamma[a] = d_a Gamma
  for (int a = 0; a < 3; ++a) {
    const std::array<Mat3, 3> cp = oracle_christoffel(g, shifted(x, a, h), h);
    const std::array<Mat3, 3> cm = oracle_christoffel(g, shifted(x, a, -h), h);
    for (int u = 0; u < 3; ++u)
      for (int b = 0; b < 3; ++b)
        for (int c = 0; c < 3; ++c)
          dgamma[a][u][b][c] = (cp[u][b][c] - cm[u][b][c]) / (2.0 * h);
  }
  const std::array<Mat3, 3> gm = oracle_christoffel(g, x, h);
  Mat3 ric{};
  for (int b = 0; b < 3; ++b)
    for (int c = 0; c < 3; ++c) {
      double v = 0.0;
      for (int a = 0; a < 3; ++a) v += dgamma[a][a][b][c] - dgamma[c][a][b][a];
      for (int a = 0; a < 3; ++a)
        for (int d = 0; d < 3; ++d)
          v += gm[a][a][d] * gm[d][b][c] - gm[a][c][d] * gm[d][a][b];
      ric[b][c] = v;
    }
  return ric;
}

double oracle_scalar_curvature(const MetricFn& g, const Vec3& x, double h) {
  const Mat3 gi = invert3(g(x));
  const Mat3 ric = oracle_ricci(g, x, h);
  double r = 0.0;
  for (int b = 0; b < 3; ++b)
    for (int c = 0; c < 3; ++c) r += gi[b][c] * ric[b][c];
  return r;
}

double oracle_ricci_normal(const MetricFn& g, const Vec3& x, double h) {
  return oracle_ricci(g, x, h)[0][0];
}

double oracle_scalar_curvature_r(const MetricFn& g, const Vec3& x, double h) {
  const double c = oracle_scalar_curvature(g, x, h);
  const double f = oracle_scalar_curvature(g, x, 0.5 * h);
  return (4.0 * f - c) / 3.0;
}

double oracle_ricci_normal_r(const MetricFn& g, const Vec3& x, double h) {
  const double c = oracle_ricci_normal(g, x, h);
  const double f = oracle_ricci_normal(g, x, 0.5 * h);
  return (4.0 * f - c) / 3.0;
}

double oracle_mean_curvature(const MetricFn& g, const Vec3& x, double h) {
  const Mat3 gp = g(shifted(x, 0, h));
  const Mat3 gm = g(shifted(x, 0, -h));
  const Mat3 gx = g(x);
  // invert the 2x2 slice block
  const double det = gx[1][1] * gx[2][2] - gx[1][2] * gx[2][1];
  const double i11 = gx[2][2] / det, i22 = gx[1][1] / det, i12 = -gx[1][2] / det;
  const double d11 = (gp[1][1] - gm[1][1]) / (2.0 * h);
  const double d12 = (gp[1][2] - gm[1][2]) / (2.0 * h);
  const double d22 = (gp[2][2] - gm[2][2]) / (2.0 * h);
  return 0.5 * (i11 * d11 + 2.0 * i12 * d12 + i22 * d22);
}

MetricFn spherical_collar_metric_fn(std::function<double(double)> c) {
  return [c](const Vec3& x) {
    Mat3 g{};
    const double cv = c(x[0]);
    const double st = std::sin(x[1]);
    g[0][0] = 1.0;
    g[1][1] = cv;
    g[2][2] = cv * st * st;
    return g;
  };
}

MetricFn torus_collar_metric_fn(TorusSliceFn gamma) {
  return [gamma](const Vec3& x) {
    Mat3 g{};
    g[0][0] = 1.0;
    double c11, c12, c22;
    gamma(x[1], x[2], x[0], c11, c12, c22);
    g[1][1] = c11;
    g[1][2] = g[2][1] = c12;
    g[2][2] = c22;
    return g;
  };
}

}  // namespace cornermass
