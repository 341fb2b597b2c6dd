#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace cornermass {

/// Side of the corner hypersurface used when a quantity is one-sided at t = 0.
enum class Side { minus, plus };

struct geometry_error : std::runtime_error {
  explicit geometry_error(const std::string& what) : std::runtime_error(what) {}
};

struct stencil_error : std::runtime_error {
  explicit stencil_error(const std::string& what) : std::runtime_error(what) {}
};

struct quadrature_error : std::runtime_error {
  explicit quadrature_error(const std::string& what) : std::runtime_error(what) {}
};

struct solver_error : std::runtime_error {
  explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

struct config_error : std::runtime_error {
  explicit config_error(const std::string& what) : std::runtime_error(what) {}
};

/// Conformal Laplacian coupling constant (n-2)/(4(n-1)).
inline double conformal_coupling(int n_dim) {
  return double(n_dim - 2) / (4.0 * double(n_dim - 1));
}

/// Volume of the unit (n-1)-sphere in R^n; 4*pi for n = 3.
inline double unit_sphere_volume(int n_dim) {
  // omega_n = 2 pi^{n/2} / Gamma(n/2)
  return 2.0 * std::pow(std::numbers::pi, 0.5 * n_dim) / std::tgamma(0.5 * n_dim);
}

}  // namespace cornermass
