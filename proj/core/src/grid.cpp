#include "cornermass/grid.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>

#include "cornermass/types.hpp"

namespace cornermass {

std::vector<double> uniform_grid(double a, double b, std::size_t n) {
  if (n < 2) throw config_error("uniform_grid: need at least 2 nodes");
  std::vector<double> g(n);
  const double h = (b - a) / double(n - 1);
  for (std::size_t i = 0; i < n; ++i) g[i] = a + h * double(i);
  g.back() = b;
  return g;
}

std::vector<double> zoned_grid(const std::vector<double>& breakpoints,
                               const std::vector<std::size_t>& counts) {
  if (breakpoints.size() != counts.size() + 1)
    throw config_error("zoned_grid: breakpoints/counts size mismatch");
  std::vector<double> g;
  g.push_back(breakpoints.front());
  for (std::size_t z = 0; z < counts.size(); ++z) {
    const double a = breakpoints[z];
    const double b = breakpoints[z + 1];
    const std::size_t m = std::max<std::size_t>(counts[z], 1);
    for (std::size_t i = 1; i <= m; ++i) g.push_back(a + (b - a) * double(i) / double(m));
  }
  return g;
}

std::size_t nearest_index(const std::vector<double>& grid, double x) {
  auto it = std::lower_bound(grid.begin(), grid.end(), x);
  if (it == grid.begin()) return 0;
  if (it == grid.end()) return grid.size() - 1;
  std::size_t i = std::size_t(it - grid.begin());
  return (x - grid[i - 1] <= grid[i] - x) ? i - 1 : i;
}

double trapezoid(const std::vector<double>& x, const std::vector<double>& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i + 1 < x.size(); ++i)
    sum += 0.5 * (f[i] + f[i + 1]) * (x[i + 1] - x[i]);
  return sum;
}

std::vector<double> cumulative_trapezoid(const std::vector<double>& x,
                                         const std::vector<double>& f) {
  std::vector<double> out(x.size(), 0.0);
  for (std::size_t i = 1; i < x.size(); ++i)
    out[i] = out[i - 1] + 0.5 * (f[i] + f[i - 1]) * (x[i] - x[i - 1]);
  return out;
}

namespace {

// Derivative at node i from samples restricted to [lo, hi].
double d1_at(const std::vector<double>& f, double h, long i, long lo, long hi, int order) {
  const long nl = i - lo;
  const long nr = hi - i;
  if (order >= 4 && nl >= 2 && nr >= 2)
    return (-f[i + 2] + 8 * f[i + 1] - 8 * f[i - 1] + f[i - 2]) / (12 * h);
  if (nl >= 1 && nr >= 1) return (f[i + 1] - f[i - 1]) / (2 * h);
  if (nr >= 2) return (-3 * f[i] + 4 * f[i + 1] - f[i + 2]) / (2 * h);
  if (nl >= 2) return (3 * f[i] - 4 * f[i - 1] + f[i - 2]) / (2 * h);
  throw stencil_error("fd_derivative: not enough stencil points");
}

double d2_at(const std::vector<double>& f, double h, long i, long lo, long hi, int order) {
  const long nl = i - lo;
  const long nr = hi - i;
  if (order >= 4 && nl >= 2 && nr >= 2)
    return (-f[i + 2] + 16 * f[i + 1] - 30 * f[i] + 16 * f[i - 1] - f[i - 2]) / (12 * h * h);
  if (nl >= 1 && nr >= 1) return (f[i + 1] - 2 * f[i] + f[i - 1]) / (h * h);
  if (nr >= 3) return (2 * f[i] - 5 * f[i + 1] + 4 * f[i + 2] - f[i + 3]) / (h * h);
  if (nl >= 3) return (2 * f[i] - 5 * f[i - 1] + 4 * f[i - 2] - f[i - 3]) / (h * h);
  throw stencil_error("fd_second_derivative: not enough stencil points");
}

}  // namespace

std::vector<double> fd_derivative(const std::vector<double>& f, double h, int order,
                                  long side_split) {
  const long n = long(f.size());
  std::vector<double> out(f.size());
  for (long i = 0; i < n; ++i) {
    long lo = 0, hi = n - 1;
    if (side_split >= 0) {
      if (i <= side_split) hi = side_split;
      else lo = side_split;
    }
    out[i] = d1_at(f, h, i, lo, hi, order);
  }
  return out;
}

std::vector<double> fd_second_derivative(const std::vector<double>& f, double h, int order,
                                         long side_split) {
  const long n = long(f.size());
  std::vector<double> out(f.size());
  for (long i = 0; i < n; ++i) {
    long lo = 0, hi = n - 1;
    if (side_split >= 0) {
      if (i <= side_split) hi = side_split;
      else lo = side_split;
    }
    out[i] = d2_at(f, h, i, lo, hi, order);
  }
  return out;
}

double one_sided_derivative(const std::vector<double>& f, double h, std::size_t i, int dir) {
  const long n = long(f.size());
  const long j = long(i);
  if (j + 2 * dir < 0 || j + 2 * dir >= n)
    throw stencil_error("one_sided_derivative: stencil outside grid");
  return dir * (-3 * f[j] + 4 * f[j + dir] - f[j + 2 * dir]) / (2 * h);
}

double one_sided_second_derivative(const std::vector<double>& f, double h, std::size_t i,
                                   int dir) {
  const long n = long(f.size());
  const long j = long(i);
  if (j + 3 * dir < 0 || j + 3 * dir >= n)
    throw stencil_error("one_sided_second_derivative: stencil outside grid");
  return (2 * f[j] - 5 * f[j + dir] + 4 * f[j + 2 * dir] - f[j + 3 * dir]) / (h * h);
}

double periodic_derivative(const std::vector<double>& f, double h, std::size_t i, int order) {
  const long n = long(f.size());
  auto at = [&](long k) { return f[std::size_t(((k % n) + n) % n)]; };
  const long j = long(i);
  if (order >= 4)
    return (-at(j + 2) + 8 * at(j + 1) - 8 * at(j - 1) + at(j - 2)) / (12 * h);
  return (at(j + 1) - at(j - 1)) / (2 * h);
}

double periodic_second_derivative(const std::vector<double>& f, double h, std::size_t i,
                                  int order) {
  const long n = long(f.size());
  auto at = [&](long k) { return f[std::size_t(((k % n) + n) % n)]; };
  const long j = long(i);
  if (order >= 4)
    return (-at(j + 2) + 16 * at(j + 1) - 30 * at(j) + 16 * at(j - 1) - at(j - 2)) /
           (12 * h * h);
  return (at(j + 1) - 2 * at(j) + at(j - 1)) / (h * h);
}

double cubic_interpolate(const std::vector<double>& f, double x0, double h, double x,
                         std::size_t lo, std::size_t hi) {
  if (hi < lo + 1) throw stencil_error("cubic_interpolate: empty range");
  const long nlo = long(lo), nhi = long(hi);
  long i = long(std::floor((x - x0) / h));
  // choose a 4-node window [i-1, i+2] clamped to [lo, hi]
  long a = i - 1;
  a = std::max(a, nlo);
  a = std::min(a, nhi - 3);
  if (a < nlo) {  // fewer than 4 nodes available: fall back to linear on 2 nodes
    long b = std::clamp(i, nlo, nhi - 1);
    const double xl = x0 + h * double(b);
    const double w = (x - xl) / h;
    return (1 - w) * f[b] + w * f[b + 1];
  }
  double result = 0.0;
  for (long k = a; k < a + 4; ++k) {
    double lk = 1.0;
    const double xk = x0 + h * double(k);
    for (long m = a; m < a + 4; ++m) {
      if (m == k) continue;
      const double xm = x0 + h * double(m);
      lk *= (x - xm) / (xk - xm);
    }
    result += lk * f[k];
  }
  return result;
}

}  // namespace cornermass
