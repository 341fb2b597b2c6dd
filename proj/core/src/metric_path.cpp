#include "cornermass/metric_path.hpp"

#include <cmath>

#include "cornermass/grid.hpp"

namespace cornermass {

namespace {

// 4-point Lagrange weights at x for nodes x0 + h*{a, a+1, a+2, a+3}
void lagrange4_weights(double x0, double h, long a, double x, double w[4]) {
  double xn[4];
  for (int k = 0; k < 4; ++k) xn[k] = x0 + h * double(a + k);
  for (int k = 0; k < 4; ++k) {
    double lk = 1.0;
    for (int m = 0; m < 4; ++m) {
      if (m == k) continue;
      lk *= (x - xn[m]) / (xn[k] - xn[m]);
    }
    w[k] = lk;
  }
}

// tensor-valued FD derivative at node i restricted to [lo, hi], order 4 -> 2 fallback
SliceTensor tensor_d1(const std::vector<SliceTensor>& f, double h, long i, long lo, long hi) {
  const long nl = i - lo, nr = hi - i;
  if (nl >= 2 && nr >= 2)
    return (f[i - 2] - f[i + 2] + (f[i + 1] - f[i - 1]) * 8.0) * (1.0 / (12.0 * h));
  if (nl >= 1 && nr >= 1) return (f[i + 1] - f[i - 1]) * (1.0 / (2.0 * h));
  if (nr >= 2) return (f[i] * (-3.0) + f[i + 1] * 4.0 - f[i + 2]) * (1.0 / (2.0 * h));
  if (nl >= 2) return (f[i] * 3.0 - f[i - 1] * 4.0 + f[i - 2]) * (1.0 / (2.0 * h));
  throw stencil_error("MetricPath: not enough stencil points for derivative");
}

SliceTensor tensor_d2(const std::vector<SliceTensor>& f, double h, long i, long lo, long hi) {
  const long nl = i - lo, nr = hi - i;
  const double h2 = h * h;
  if (nl >= 2 && nr >= 2)
    return (f[i + 2] * (-1.0) + f[i + 1] * 16.0 - f[i] * 30.0 + f[i - 1] * 16.0 -
            f[i - 2]) *
           (1.0 / (12.0 * h2));
  if (nl >= 1 && nr >= 1) return (f[i + 1] - f[i] * 2.0 + f[i - 1]) * (1.0 / h2);
  if (nr >= 3)
    return (f[i] * 2.0 - f[i + 1] * 5.0 + f[i + 2] * 4.0 - f[i + 3]) * (1.0 / h2);
  if (nl >= 3)
    return (f[i] * 2.0 - f[i - 1] * 5.0 + f[i - 2] * 4.0 - f[i - 3]) * (1.0 / h2);
  throw stencil_error("MetricPath: not enough stencil points for second derivative");
}

}  // namespace

MetricPath MetricPath::from_sides(PathSideFns minus, PathSideFns plus, double epsilon,
                                  std::size_t n_t) {
  if (n_t < 9 || n_t % 2 == 0)
    throw config_error("MetricPath: n_t must be odd and >= 9");
  MetricPath p;
  p.epsilon_ = epsilon;
  p.t_ = uniform_grid(-2.0 * epsilon, 2.0 * epsilon, n_t);
  p.corner_ = (n_t - 1) / 2;
  p.t_[p.corner_] = 0.0;
  p.h_ = 4.0 * epsilon / double(n_t - 1);
  p.minus_ = std::move(minus);
  p.plus_ = std::move(plus);

  const SliceTensor at0_minus = p.minus_.value(0.0);
  const SliceTensor at0_plus = p.plus_.value(0.0);
  const double mismatch = (at0_minus - at0_plus).inf_norm();
  if (mismatch > 1e-9 * (1.0 + at0_minus.inf_norm()))
    throw geometry_error("MetricPath: induced metrics at Sigma do not match (corner mismatch " +
                         std::to_string(mismatch) + ")");

  p.values_.reserve(n_t);
  for (std::size_t i = 0; i < n_t; ++i) {
    const double t = p.t_[i];
    p.values_.push_back(t < 0.0 ? p.minus_.value(t)
                                : (t > 0.0 ? p.plus_.value(t) : at0_minus));
  }
  p.finalize();
  return p;
}

MetricPath MetricPath::from_samples(std::vector<double> t_grid,
                                    std::vector<SliceTensor> values, double epsilon) {
  if (t_grid.size() != values.size() || t_grid.size() < 9)
    throw config_error("MetricPath: bad sample arrays");
  MetricPath p;
  p.epsilon_ = epsilon;
  p.t_ = std::move(t_grid);
  p.values_ = std::move(values);
  p.corner_ = nearest_index(p.t_, 0.0);
  if (std::fabs(p.t_[p.corner_]) > 1e-12)
    throw config_error("MetricPath: t grid must contain a node at t = 0");
  p.h_ = p.t_[1] - p.t_[0];
  p.finalize();
  return p;
}

void MetricPath::finalize() {
  for (const auto& v : values_)
    if (!v.is_positive_definite())
      throw geometry_error("MetricPath: non-positive-definite slice metric");
  // Measured Lipschitz constant on [-3 eps/2, 3 eps/2]
  double L = 0.0;
  for (std::size_t i = 0; i + 1 < t_.size(); ++i) {
    if (t_[i] < -1.5 * epsilon_ || t_[i + 1] > 1.5 * epsilon_) continue;
    L = std::max(L, (values_[i + 1] - values_[i]).inf_norm() / (t_[i + 1] - t_[i]));
  }
  lipschitz_L_ = L;
}

SliceTensor MetricPath::interp(const std::vector<SliceTensor>& samples, double t,
                               Side side) const {
  const long n = long(samples.size());
  long lo = 0, hi = n - 1;
  if (side == Side::minus) hi = long(corner_);
  else lo = long(corner_);
  const double x0 = t_.front();
  long i = long(std::floor((t - x0) / h_));
  long a = i - 1;
  if (a < lo) a = lo;
  if (a > hi - 3) a = hi - 3;
  if (a < lo) throw stencil_error("MetricPath::interp: side range too small");
  double w[4];
  lagrange4_weights(x0, h_, a, t, w);
  SliceTensor out = samples[a] * w[0];
  for (int k = 1; k < 4; ++k) out = out + samples[a + k] * w[k];
  return out;
}

const std::vector<SliceTensor>& MetricPath::d1_samples() const {
  if (!d1_cache_) {
    auto d = std::make_shared<std::vector<SliceTensor>>();
    d->reserve(values_.size());
    const long n = long(values_.size());
    const long c = long(corner_);
    for (long i = 0; i < n; ++i) {
      const long lo = (i <= c) ? 0 : c;
      const long hi = (i <= c) ? c : n - 1;
      d->push_back(tensor_d1(values_, h_, i, lo, hi));
    }
    d1_cache_ = std::move(d);
    d1_corner_plus_ =
        std::make_shared<SliceTensor>(tensor_d1(values_, h_, c, c, n - 1));
  }
  return *d1_cache_;
}

const std::vector<SliceTensor>& MetricPath::d2_samples() const {
  if (!d2_cache_) {
    auto d = std::make_shared<std::vector<SliceTensor>>();
    d->reserve(values_.size());
    const long n = long(values_.size());
    const long c = long(corner_);
    for (long i = 0; i < n; ++i) {
      const long lo = (i <= c) ? 0 : c;
      const long hi = (i <= c) ? c : n - 1;
      d->push_back(tensor_d2(values_, h_, i, lo, hi));
    }
    d2_cache_ = std::move(d);
    d2_corner_plus_ =
        std::make_shared<SliceTensor>(tensor_d2(values_, h_, c, c, n - 1));
  }
  return *d2_cache_;
}

const SliceTensor& MetricPath::d1_corner_plus() const {
  if (!d1_corner_plus_) {
    if (plus_.d1)
      d1_corner_plus_ = std::make_shared<SliceTensor>(plus_.d1(0.0));
    else
      d1_samples();
  }
  return *d1_corner_plus_;
}

const SliceTensor& MetricPath::d2_corner_plus() const {
  if (!d2_corner_plus_) {
    if (plus_.d2)
      d2_corner_plus_ = std::make_shared<SliceTensor>(plus_.d2(0.0));
    else
      d2_samples();
  }
  return *d2_corner_plus_;
}

SliceTensor MetricPath::eval(double t) const {
  if (minus_.value && plus_.value)
    return t < 0.0 ? minus_.value(t) : plus_.value(t);
  return interp(values_, t, side_of(t));
}

SliceTensor MetricPath::eval_d1(double t, Side side) const {
  if (t != 0.0) side = side_of(t);
  if (minus_.d1 && plus_.d1) return side == Side::minus ? minus_.d1(t) : plus_.d1(t);
  const auto& d = d1_samples();
  if (t == 0.0) return side == Side::minus ? d[corner_] : *d1_corner_plus_;
  return interp(d, t, side);
}

SliceTensor MetricPath::eval_d2(double t, Side side) const {
  if (t != 0.0) side = side_of(t);
  if (minus_.d2 && plus_.d2) return side == Side::minus ? minus_.d2(t) : plus_.d2(t);
  const auto& d = d2_samples();
  if (t == 0.0) return side == Side::minus ? d[corner_] : *d2_corner_plus_;
  return interp(d, t, side);
}

SliceTensor MetricPath::corner_d1_jump() const {
  return eval_d1(0.0, Side::plus) - eval_d1(0.0, Side::minus);
}

PathSideFns scalar_side(std::function<double(double)> c, std::function<double(double)> dc,
                        std::function<double(double)> d2c) {
  PathSideFns s;
  s.value = [c](double t) { return SliceTensor::spherical(c(t)); };
  if (dc) s.d1 = [dc](double t) { return SliceTensor::spherical(dc(t)); };
  if (d2c) s.d2 = [d2c](double t) { return SliceTensor::spherical(d2c(t)); };
  return s;
}

}  // namespace cornermass
