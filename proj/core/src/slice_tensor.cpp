#include "cornermass/slice_tensor.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace cornermass {

// ---- SliceScalar ----

SliceScalar SliceScalar::spherical(double v) {
  SliceScalar s;
  s.kind_ = SliceKind::SphericalScalar;
  s.value_ = v;
  return s;
}

SliceScalar SliceScalar::torus(const TorusGridSpec& spec, std::vector<double> values) {
  if (values.size() != spec.size()) throw geometry_error("SliceScalar: size mismatch");
  SliceScalar s;
  s.kind_ = SliceKind::TorusGrid;
  s.grid_ = spec;
  s.data_ = std::move(values);
  return s;
}

SliceScalar SliceScalar::torus_constant(const TorusGridSpec& spec, double v) {
  return torus(spec, std::vector<double>(spec.size(), v));
}

double SliceScalar::sup_abs() const {
  if (kind_ == SliceKind::SphericalScalar) return std::fabs(value_);
  double m = 0.0;
  for (double v : data_) m = std::max(m, std::fabs(v));
  return m;
}

double SliceScalar::min() const {
  if (kind_ == SliceKind::SphericalScalar) return value_;
  return *std::min_element(data_.begin(), data_.end());
}

double SliceScalar::max() const {
  if (kind_ == SliceKind::SphericalScalar) return value_;
  return *std::max_element(data_.begin(), data_.end());
}

namespace {
template <class Op>
SliceScalar combine(const SliceScalar& a, const SliceScalar& b, Op op) {
  if (a.kind() != b.kind()) throw geometry_error("SliceScalar: kind mismatch");
  if (a.kind() == SliceKind::SphericalScalar)
    return SliceScalar::spherical(op(a.scalar(), b.scalar()));
  std::vector<double> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = op(a[i], b[i]);
  return SliceScalar::torus(a.grid(), std::move(out));
}
}  // namespace

SliceScalar SliceScalar::operator+(const SliceScalar& o) const {
  return combine(*this, o, [](double x, double y) { return x + y; });
}
SliceScalar SliceScalar::operator-(const SliceScalar& o) const {
  return combine(*this, o, [](double x, double y) { return x - y; });
}
SliceScalar SliceScalar::operator*(const SliceScalar& o) const {
  return combine(*this, o, [](double x, double y) { return x * y; });
}
SliceScalar SliceScalar::operator*(double c) const {
  return map([c](double x) { return c * x; });
}
SliceScalar SliceScalar::map(const std::function<double(double)>& f) const {
  if (kind_ == SliceKind::SphericalScalar) return spherical(f(value_));
  std::vector<double> out(data_.size());
  for (std::size_t i = 0; i < data_.size(); ++i) out[i] = f(data_[i]);
  return torus(grid_, std::move(out));
}

// ---- SliceTensor ----

SliceTensor SliceTensor::spherical(double coeff) {
  SliceTensor t;
  t.kind_ = SliceKind::SphericalScalar;
  t.coeff_ = coeff;
  return t;
}

SliceTensor SliceTensor::torus(const TorusGridSpec& spec, std::vector<double> c11,
                               std::vector<double> c12, std::vector<double> c22) {
  if (c11.size() != spec.size() || c12.size() != spec.size() || c22.size() != spec.size())
    throw geometry_error("SliceTensor: component size mismatch");
  SliceTensor t;
  t.kind_ = SliceKind::TorusGrid;
  t.grid_ = spec;
  t.c11_ = std::move(c11);
  t.c12_ = std::move(c12);
  t.c22_ = std::move(c22);
  return t;
}

SliceTensor SliceTensor::torus_from_fn(
    const TorusGridSpec& spec,
    const std::function<void(double, double, double&, double&, double&)>& f) {
  std::vector<double> a(spec.size()), b(spec.size()), c(spec.size());
  for (std::size_t j = 0; j < spec.ny; ++j)
    for (std::size_t i = 0; i < spec.nx; ++i) {
      const std::size_t k = j * spec.nx + i;
      f(spec.x(i), spec.y(j), a[k], b[k], c[k]);
    }
  return torus(spec, std::move(a), std::move(b), std::move(c));
}

void SliceTensor::check_compatible(const SliceTensor& o) const {
  if (kind_ != o.kind_) throw geometry_error("SliceTensor: kind mismatch");
  if (kind_ == SliceKind::TorusGrid && !(grid_ == o.grid_))
    throw geometry_error("SliceTensor: grid mismatch");
}

SliceTensor SliceTensor::operator+(const SliceTensor& o) const {
  check_compatible(o);
  if (kind_ == SliceKind::SphericalScalar) return spherical(coeff_ + o.coeff_);
  SliceTensor t = *this;
  for (std::size_t i = 0; i < c11_.size(); ++i) {
    t.c11_[i] += o.c11_[i];
    t.c12_[i] += o.c12_[i];
    t.c22_[i] += o.c22_[i];
  }
  return t;
}

SliceTensor SliceTensor::operator-(const SliceTensor& o) const { return *this + o * (-1.0); }

SliceTensor SliceTensor::operator*(double c) const {
  if (kind_ == SliceKind::SphericalScalar) return spherical(coeff_ * c);
  SliceTensor t = *this;
  for (std::size_t i = 0; i < c11_.size(); ++i) {
    t.c11_[i] *= c;
    t.c12_[i] *= c;
    t.c22_[i] *= c;
  }
  return t;
}

double SliceTensor::inf_norm() const {
  if (kind_ == SliceKind::SphericalScalar) return std::fabs(coeff_);
  double m = 0.0;
  for (std::size_t i = 0; i < c11_.size(); ++i) {
    m = std::max(m, std::fabs(c11_[i]));
    m = std::max(m, std::fabs(c12_[i]));
    m = std::max(m, std::fabs(c22_[i]));
  }
  return m;
}

double SliceTensor::min_eigenvalue() const {
  if (kind_ == SliceKind::SphericalScalar) return coeff_;
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < c11_.size(); ++i) {
    const double tr = c11_[i] + c22_[i];
    const double det = c11_[i] * c22_[i] - c12_[i] * c12_[i];
    const double disc = std::sqrt(std::max(0.0, 0.25 * tr * tr - det));
    m = std::min(m, 0.5 * tr - disc);
  }
  return m;
}

SliceScalar SliceTensor::trace_with(const SliceTensor& metric) const {
  check_compatible(metric);
  if (kind_ == SliceKind::SphericalScalar) {
    // T = a ghat, gamma = c ghat on S^2: gamma^{ij} T_ij = 2 a / c
    return SliceScalar::spherical(2.0 * coeff_ / metric.coeff_);
  }
  std::vector<double> out(c11_.size());
  for (std::size_t i = 0; i < c11_.size(); ++i) {
    const double det = metric.c11_[i] * metric.c22_[i] - metric.c12_[i] * metric.c12_[i];
    if (det <= 0.0) throw geometry_error("trace_with: singular slice metric");
    // inverse of [[g11,g12],[g12,g22]]
    const double i11 = metric.c22_[i] / det;
    const double i12 = -metric.c12_[i] / det;
    const double i22 = metric.c11_[i] / det;
    out[i] = i11 * c11_[i] + 2.0 * i12 * c12_[i] + i22 * c22_[i];
  }
  return SliceScalar::torus(grid_, std::move(out));
}

SliceScalar SliceTensor::inner_with(const SliceTensor& metric, const SliceTensor& other) const {
  check_compatible(metric);
  check_compatible(other);
  if (kind_ == SliceKind::SphericalScalar) {
    const double c = metric.coeff_;
    return SliceScalar::spherical(2.0 * coeff_ * other.coeff_ / (c * c));
  }
  std::vector<double> out(c11_.size());
  for (std::size_t i = 0; i < c11_.size(); ++i) {
    const double det = metric.c11_[i] * metric.c22_[i] - metric.c12_[i] * metric.c12_[i];
    if (det <= 0.0) throw geometry_error("inner_with: singular slice metric");
    const double i11 = metric.c22_[i] / det;
    const double i12 = -metric.c12_[i] / det;
    const double i22 = metric.c11_[i] / det;
    // (T gamma^{-1})_i^j then contract with (S gamma^{-1})
    const double t11 = c11_[i], t12 = c12_[i], t22 = c22_[i];
    const double s11 = other.c11_[i], s12 = other.c12_[i], s22 = other.c22_[i];
    // raised T: Tu^{kl} = g^{ki} g^{lj} T_ij
    const double u11 = i11 * (i11 * t11 + i12 * t12) + i12 * (i11 * t12 + i12 * t22);
    const double u12 = i11 * (i12 * t11 + i22 * t12) + i12 * (i12 * t12 + i22 * t22);
    const double u22 = i12 * (i12 * t11 + i22 * t12) + i22 * (i12 * t12 + i22 * t22);
    out[i] = u11 * s11 + 2.0 * u12 * s12 + u22 * s22;
  }
  return SliceScalar::torus(grid_, std::move(out));
}

}  // namespace cornermass
