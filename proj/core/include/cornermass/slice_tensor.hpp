#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "cornermass/types.hpp"

namespace cornermass {

/// Discretizations of the corner hypersurface.
/// SphericalScalar: round sphere, tensor = coeff * (unit-sphere metric).
/// TorusGrid: flat 2-torus with a uniform periodic grid, full 2x2 components.
enum class SliceKind { SphericalScalar, TorusGrid };

struct TorusGridSpec {
  std::size_t nx = 0, ny = 0;
  double lx = 0.0, ly = 0.0;
  double hx() const { return lx / double(nx); }
  double hy() const { return ly / double(ny); }
  std::size_t size() const { return nx * ny; }
  double x(std::size_t i) const { return lx * double(i) / double(nx); }
  double y(std::size_t j) const { return ly * double(j) / double(ny); }
  bool operator==(const TorusGridSpec&) const = default;
};

/// Scalar field on the hypersurface grid (single value in spherical mode).
class SliceScalar {
 public:
  SliceScalar() = default;
  static SliceScalar spherical(double v);
  static SliceScalar torus(const TorusGridSpec& spec, std::vector<double> values);
  static SliceScalar torus_constant(const TorusGridSpec& spec, double v);

  SliceKind kind() const { return kind_; }
  const TorusGridSpec& grid() const { return grid_; }
  std::size_t size() const { return kind_ == SliceKind::SphericalScalar ? 1 : data_.size(); }
  double operator[](std::size_t i) const {
    return kind_ == SliceKind::SphericalScalar ? value_ : data_[i];
  }
  double& at(std::size_t i) { return kind_ == SliceKind::SphericalScalar ? value_ : data_[i]; }
  double scalar() const { return value_; }
  const std::vector<double>& data() const { return data_; }

  double sup_abs() const;
  double min() const;
  double max() const;

  SliceScalar operator+(const SliceScalar& o) const;
  SliceScalar operator-(const SliceScalar& o) const;
  SliceScalar operator*(double c) const;
  SliceScalar operator*(const SliceScalar& o) const;  // pointwise
  SliceScalar map(const std::function<double(double)>& f) const;

 private:
  SliceKind kind_ = SliceKind::SphericalScalar;
  double value_ = 0.0;
  TorusGridSpec grid_;
  std::vector<double> data_;
};

/// Symmetric (0,2) tensor field on the hypersurface grid.
class SliceTensor {
 public:
  SliceTensor() = default;
  static SliceTensor spherical(double coeff);
  static SliceTensor torus(const TorusGridSpec& spec, std::vector<double> c11,
                           std::vector<double> c12, std::vector<double> c22);
  /// Sample a closed-form field f(x, y) -> (c11, c12, c22).
  static SliceTensor torus_from_fn(
      const TorusGridSpec& spec,
      const std::function<void(double, double, double&, double&, double&)>& f);

  SliceKind kind() const { return kind_; }
  const TorusGridSpec& grid() const { return grid_; }
  double coeff() const { return coeff_; }
  const std::vector<double>& c11() const { return c11_; }
  const std::vector<double>& c12() const { return c12_; }
  const std::vector<double>& c22() const { return c22_; }

  SliceTensor operator+(const SliceTensor& o) const;
  SliceTensor operator-(const SliceTensor& o) const;
  SliceTensor operator*(double c) const;

  /// Max absolute component over all nodes.
  double inf_norm() const;
  /// Smallest eigenvalue over all nodes (coefficient itself in spherical mode).
  double min_eigenvalue() const;
  bool is_positive_definite() const { return min_eigenvalue() > 0.0; }

  /// gamma^{ij} T_ij with this = T and `metric` = gamma.
  SliceScalar trace_with(const SliceTensor& metric) const;
  /// gamma^{ik} gamma^{jl} T_ij S_kl.
  SliceScalar inner_with(const SliceTensor& metric, const SliceTensor& other) const;

 private:
  void check_compatible(const SliceTensor& o) const;

  SliceKind kind_ = SliceKind::SphericalScalar;
  double coeff_ = 0.0;
  TorusGridSpec grid_;
  std::vector<double> c11_, c12_, c22_;
};

inline double quadrature_magnitude(const SliceScalar& s) { return s.sup_abs(); }
inline double quadrature_magnitude(const SliceTensor& t) { return t.inf_norm(); }

}  // namespace cornermass
