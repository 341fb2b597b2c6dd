#include "cornermass/radial_profile.hpp"

#include <cmath>

#include "cornermass/grid.hpp"
#include "cornermass/types.hpp"

namespace cornermass {

PathSideFns RadialProfile::side_fns() const {
  PathSideFns s;
  s.value = [this](double t) { return SliceTensor::spherical(c(t)); };
  s.d1 = [this](double t) { return SliceTensor::spherical(dc(t)); };
  s.d2 = [this](double t) { return SliceTensor::spherical(d2c(t)); };
  return s;
}

SchwarzschildProfile::SchwarzschildProfile(double R0, double m, double t_min, double t_max,
                                           double step)
    : m_(m), t_min_(t_min), step_(step) {
  if (R0 <= 0.0 || (m > 0.0 && R0 <= 2.0 * m))
    throw geometry_error("SchwarzschildProfile: anchor radius must exceed 2m");
  if (t_min > 0.0 || t_max < 0.0) throw config_error("SchwarzschildProfile: range must contain 0");
  auto f = [this](double r) {
    const double q = 1.0 - 2.0 * m_ / r;
    if (q <= 0.0)
      throw geometry_error("SchwarzschildProfile: profile reached the horizon r = 2m");
    return std::sqrt(q);
  };
  auto rk4 = [&](double r, double h) {
    const double k1 = f(r);
    const double k2 = f(r + 0.5 * h * k1);
    const double k3 = f(r + 0.5 * h * k2);
    const double k4 = f(r + h * k3);
    return r + h / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
  };
  const std::size_t n_down = std::size_t(std::ceil(-t_min / step)) + 1;
  const std::size_t n_up = std::size_t(std::ceil(t_max / step)) + 1;
  // integrate down from 0 to t_min, then up from 0 to t_max, on the uniform cache grid
  std::vector<double> down(n_down + 1), up(n_up + 1);
  down[0] = R0;
  for (std::size_t i = 0; i < n_down; ++i) down[i + 1] = rk4(down[i], -step);
  up[0] = R0;
  for (std::size_t i = 0; i < n_up; ++i) up[i + 1] = rk4(up[i], step);
  t_min_ = -double(n_down) * step;
  cache_.resize(n_down + n_up + 1);
  for (std::size_t i = 0; i <= n_down; ++i) cache_[n_down - i] = down[i];
  for (std::size_t i = 0; i <= n_up; ++i) cache_[n_down + i] = up[i];
}

double SchwarzschildProfile::r(double t) const {
  return cubic_interpolate(cache_, t_min_, step_, t, 0, cache_.size() - 1);
}

double SchwarzschildProfile::dr(double t) const {
  const double q = 1.0 - 2.0 * m_ / r(t);
  if (q <= 0.0) throw geometry_error("SchwarzschildProfile: dr at/inside horizon");
  return std::sqrt(q);
}

double SchwarzschildProfile::d2r(double t) const {
  const double rv = r(t);
  return m_ / (rv * rv);
}

double SphereCapProfile::r(double t) const {
  const double sk = std::sqrt(k_);
  return std::sin(sk * (s0_ + t)) / sk;
}

double SphereCapProfile::dr(double t) const {
  return std::cos(std::sqrt(k_) * (s0_ + t));
}

double SphereCapProfile::d2r(double t) const {
  const double sk = std::sqrt(k_);
  return -sk * std::sin(sk * (s0_ + t));
}

}  // namespace cornermass
