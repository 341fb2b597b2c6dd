#pragma once

#include <array>
#include <functional>

#include "cornermass/types.hpp"

namespace cornermass {

using Mat3 = std::array<std::array<double, 3>, 3>;
using Vec3 = std::array<double, 3>;

/// A 3-metric as a plain coordinate callable; coordinate 0 is the collar
/// coordinate t (so g_00 = 1 and Ric(nu, nu) = Ric_00 in collar form).
using MetricFn = std::function<Mat3(const Vec3&)>;

Mat3 invert3(const Mat3& g);

/// Christoffel symbols Gamma^a_{bc} by central differences of the metric.
std::array<Mat3, 3> oracle_christoffel(const MetricFn& g, const Vec3& x, double h);

/// Ricci tensor by central differences of the Christoffel symbols (nested
/// stencils; deliberately independent of the collar formulas).
Mat3 oracle_ricci(const MetricFn& g, const Vec3& x, double h);

double oracle_scalar_curvature(const MetricFn& g, const Vec3& x, double h);
/// Ric(nu, nu) for the unit collar normal, i.e. the 00 component.
double oracle_ricci_normal(const MetricFn& g, const Vec3& x, double h);

/// Richardson-improved variants (evaluations at h and h/2, 4th order).
double oracle_scalar_curvature_r(const MetricFn& g, const Vec3& x, double h);
double oracle_ricci_normal_r(const MetricFn& g, const Vec3& x, double h);

/// Mean curvature of the slice t = x[0] by a central difference of the slice
/// block, H = (1/2) gamma^{ij} d_t gamma_ij.
double oracle_mean_curvature(const MetricFn& g, const Vec3& x, double h);

/// Collar metric dt^2 + c(t) ghat on the sphere patch, coordinates (t, theta, phi).
MetricFn spherical_collar_metric_fn(std::function<double(double)> c);

/// Collar metric dt^2 + gamma_ij(x, y, t) dx dx on the torus, coordinates (t, x, y).
using TorusSliceFn = std::function<void(double x, double y, double t, double& c11,
                                        double& c12, double& c22)>;
MetricFn torus_collar_metric_fn(TorusSliceFn gamma);

}  // namespace cornermass
