#pragma once

#include <cstddef>
#include <vector>

namespace cornermass {

/// Uniform grid of n nodes on [a, b], endpoints included.
std::vector<double> uniform_grid(double a, double b, std::size_t n);

/// Piecewise-uniform grid assembled from breakpoints and per-zone node counts.
/// breakpoints has size zones+1; counts[i] is the number of intervals in zone i.
/// Shared breakpoints appear once.
std::vector<double> zoned_grid(const std::vector<double>& breakpoints,
                               const std::vector<std::size_t>& counts);

/// Index of the grid node closest to x (grid ascending).
std::size_t nearest_index(const std::vector<double>& grid, double x);

/// Trapezoid rule on a (possibly nonuniform) ascending grid.
double trapezoid(const std::vector<double>& x, const std::vector<double>& f);

/// Cumulative trapezoid integral, same length as x, starting at 0.
std::vector<double> cumulative_trapezoid(const std::vector<double>& x,
                                         const std::vector<double>& f);

// Finite-difference first and second derivatives of samples f on a uniform
// grid with spacing h. order: 2 or 4 for the interior stencil; boundary nodes
// fall back to one-sided second order. `side_split` marks an index at which
// differentiation must not cross (one-sided stencils are used on both sides);
// pass a negative value for none. At the split index itself the minus-side
// value is produced; use the *_at helpers for the plus side.
std::vector<double> fd_derivative(const std::vector<double>& f, double h, int order,
                                  long side_split = -1);
std::vector<double> fd_second_derivative(const std::vector<double>& f, double h, int order,
                                         long side_split = -1);

/// One-sided derivatives of f at index i using nodes at i, i+dir, i+2*dir (2nd order).
double one_sided_derivative(const std::vector<double>& f, double h, std::size_t i, int dir);
double one_sided_second_derivative(const std::vector<double>& f, double h, std::size_t i,
                                   int dir);

/// Periodic central differences (for torus grids), order 2 or 4.
double periodic_derivative(const std::vector<double>& f, double h, std::size_t i, int order);
double periodic_second_derivative(const std::vector<double>& f, double h, std::size_t i,
                                  int order);

/// 4-point piecewise-cubic Lagrange interpolation of samples f on a uniform
/// grid starting at x0 with spacing h, restricted to index range [lo, hi].
double cubic_interpolate(const std::vector<double>& f, double x0, double h, double x,
                         std::size_t lo, std::size_t hi);

}  // namespace cornermass
