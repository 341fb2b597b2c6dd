#include "cornermass/kernels.hpp"

#include <cmath>

#include "cornermass/quadrature.hpp"

namespace cornermass {

namespace {

double bump_raw(double t) {
  const double q = 1.0 - t * t;
  if (q <= 0.0) return 0.0;
  return std::exp(-1.0 / q);
}

double f_exp(double x) { return x > 0.0 ? std::exp(-1.0 / x) : 0.0; }
double f_exp_d1(double x) { return x > 0.0 ? f_exp(x) / (x * x) : 0.0; }
double f_exp_d2(double x) {
  if (x <= 0.0) return 0.0;
  return f_exp(x) * (1.0 / (x * x * x * x) - 2.0 / (x * x * x));
}

// smooth step: 0 at x=0, 1 at x=1
double hstep(double x) {
  const double a = f_exp(x), b = f_exp(1.0 - x);
  return a / (a + b);
}

double hstep_d1(double x) {
  const double a = f_exp(x), b = f_exp(1.0 - x);
  const double ap = f_exp_d1(x), bp = -f_exp_d1(1.0 - x);
  const double d = a + b;
  return (ap * b - a * bp) / (d * d);
}

double hstep_d2(double x) {
  const double a = f_exp(x), b = f_exp(1.0 - x);
  const double ap = f_exp_d1(x), bp = -f_exp_d1(1.0 - x);
  const double app = f_exp_d2(x), bpp = f_exp_d2(1.0 - x);
  const double d = a + b;
  return ((app * b - a * bpp) * d - 2.0 * (ap * b - a * bp) * (ap + bp)) / (d * d * d);
}

}  // namespace

BumpKernel::BumpKernel() {
  norm_ = integrate_adaptive([](double t) { return bump_raw(t); }, -1.0, 1.0, 1e-14);
}

double BumpKernel::operator()(double t) const { return bump_raw(t) / norm_; }

double CutoffProfile::operator()(double t) const {
  const double a = std::fabs(t);
  if (a >= 0.5) return 0.0;
  if (a <= 0.25) return plateau_;
  return plateau_ * hstep((0.5 - a) * 4.0);
}

double CutoffProfile::derivative(double t) const {
  const double a = std::fabs(t);
  if (a >= 0.5 || a <= 0.25) return 0.0;
  const double sign = t > 0.0 ? 1.0 : -1.0;
  return plateau_ * hstep_d1((0.5 - a) * 4.0) * (-4.0) * sign;
}

double CutoffProfile::second_derivative(double t) const {
  const double a = std::fabs(t);
  if (a >= 0.5 || a <= 0.25) return 0.0;
  return plateau_ * hstep_d2((0.5 - a) * 4.0) * 16.0;
}

}  // namespace cornermass
