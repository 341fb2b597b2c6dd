#pragma once

namespace cornermass {

/// Smooth compactly supported mollifier kernel on [-1, 1]:
/// phi(t) = exp(-1/(1-t^2)) / N, with N fixed so that the integral is 1.
/// Even, 0 <= phi <= 1, phi(0) ~ 0.829.
class BumpKernel {
 public:
  BumpKernel();
  double operator()(double t) const;
  double normalization() const { return norm_; }

 private:
  double norm_;
};

/// Smooth cutoff profile on [-1/2, 1/2]:
///   sigma = plateau        on |t| < 1/4,
///   0 < sigma <= plateau   on 1/4 < |t| < 1/2,
///   sigma = 0              on |t| >= 1/2,
/// assembled from the transition h(x) = f(x)/(f(x)+f(1-x)), f(x) = exp(-1/x).
/// First and second derivatives are available in closed form.
class CutoffProfile {
 public:
  explicit CutoffProfile(double plateau = 0.01) : plateau_(plateau) {}

  double plateau() const { return plateau_; }
  double operator()(double t) const;
  double derivative(double t) const;
  double second_derivative(double t) const;

 private:
  double plateau_;
};

}  // namespace cornermass
