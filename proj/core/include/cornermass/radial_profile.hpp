#pragma once

#include <memory>
#include <vector>

#include "cornermass/metric_path.hpp"

namespace cornermass {

/// Areal-radius profile r(t) of a spherically symmetric metric
/// g = dt^2 + r(t)^2 ghat, parameterized by proper distance t relative to a
/// reference point (t = 0 at the corner when used in a collar).
class RadialProfile {
 public:
  virtual ~RadialProfile() = default;
  virtual double r(double t) const = 0;
  virtual double dr(double t) const = 0;
  virtual double d2r(double t) const = 0;

  // slice coefficient c(t) = r^2 and derivatives
  double c(double t) const {
    const double rv = r(t);
    return rv * rv;
  }
  double dc(double t) const { return 2.0 * r(t) * dr(t); }
  double d2c(double t) const {
    const double d = dr(t);
    return 2.0 * d * d + 2.0 * r(t) * d2r(t);
  }

  /// Wrap as one side of a MetricPath (gamma = c(t) ghat).
  PathSideFns side_fns() const;
};

/// Flat space: r(t) = R + t.
class FlatProfile final : public RadialProfile {
 public:
  explicit FlatProfile(double R) : R_(R) {}
  double r(double t) const override { return R_ + t; }
  double dr(double) const override { return 1.0; }
  double d2r(double) const override { return 0.0; }

 private:
  double R_;
};

/// Spatial Schwarzschild slice of mass m, anchored at areal radius r(0) = R0:
/// dr/dt = sqrt(1 - 2m/r), d2r/dt2 = m/r^2. Values cached on a fine RK4 grid
/// over [t_min, t_max].
class SchwarzschildProfile final : public RadialProfile {
 public:
  SchwarzschildProfile(double R0, double m, double t_min, double t_max,
                       double step = 1e-3);
  double r(double t) const override;
  double dr(double t) const override;
  double d2r(double t) const override;
  double mass() const { return m_; }

 private:
  double m_;
  double t_min_, step_;
  std::vector<double> cache_;  // r at t_min + i*step
};

/// Round 3-sphere patch of curvature k > 0: r(t) = sin(sqrt(k)(s0+t))/sqrt(k).
class SphereCapProfile final : public RadialProfile {
 public:
  SphereCapProfile(double k, double s0) : k_(k), s0_(s0) {}
  double r(double t) const override;
  double dr(double t) const override;
  double d2r(double t) const override;

 private:
  double k_, s0_;
};

}  // namespace cornermass
