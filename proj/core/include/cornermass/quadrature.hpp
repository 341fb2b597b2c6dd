#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "cornermass/types.hpp"

namespace cornermass {

/// Nodes and weights of the k-point Gauss-Legendre rule on [-1, 1].
const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int k);

inline double quadrature_magnitude(double v) { return std::fabs(v); }

template <class F>
auto gauss_panel(F&& f, double a, double b, int k = 15) {
  const auto& [x, w] = gauss_legendre(k);
  const double mid = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  auto acc = f(mid + half * x[0]) * (half * w[0]);
  for (std::size_t i = 1; i < x.size(); ++i)
    acc = acc + f(mid + half * x[i]) * (half * w[i]);
  return acc;
}

namespace detail {

template <class F, class V>
V adaptive_rec(F& f, double a, double b, double tol, int depth, const V& fine,
               const V& coarse) {
  const double err = quadrature_magnitude(fine + coarse * (-1.0));
  if (err <= tol) return fine;
  if (depth <= 0) {
    if (err > 100.0 * tol)
      throw quadrature_error("adaptive quadrature: recursion limit with error above tolerance");
    return fine;
  }
  const double m = 0.5 * (a + b);
  const V cl = gauss_panel(f, a, m);
  const V cr = gauss_panel(f, m, b);
  const V fl = gauss_panel(f, a, 0.5 * (a + m)) + gauss_panel(f, 0.5 * (a + m), m);
  const V fr = gauss_panel(f, m, 0.5 * (m + b)) + gauss_panel(f, 0.5 * (m + b), b);
  return adaptive_rec(f, a, m, 0.5 * tol, depth - 1, fl, cl) +
         adaptive_rec(f, m, b, 0.5 * tol, depth - 1, fr, cr);
}

}  // namespace detail

/// Adaptive Gauss-Legendre integration with absolute target tolerance.
/// Works for any value type with +, scalar * and quadrature_magnitude().
template <class F>
auto integrate_adaptive(F&& f, double a, double b, double tol = 1e-10, int depth = 24) {
  using V = decltype(f(a) * 1.0);
  if (a == b) return f(a) * 0.0;
  V coarse = gauss_panel(f, a, b);
  const double m = 0.5 * (a + b);
  V fine = gauss_panel(f, a, m) + gauss_panel(f, m, b);
  return detail::adaptive_rec<std::remove_reference_t<F>, V>(f, a, b, tol, depth, fine,
                                                             coarse);
}

/// Adaptive integration over [a, b] split at the given interior points
/// (the integrand may have kinks there).
template <class F>
auto integrate_adaptive_split(F&& f, double a, double b, std::vector<double> splits,
                              double tol = 1e-10, int depth = 24) {
  std::vector<double> pts{a};
  std::sort(splits.begin(), splits.end());
  for (double s : splits)
    if (s > a && s < b) pts.push_back(s);
  pts.push_back(b);
  auto acc = integrate_adaptive(f, pts[0], pts[1], tol, depth);
  for (std::size_t i = 1; i + 1 < pts.size(); ++i)
    acc = acc + integrate_adaptive(f, pts[i], pts[i + 1], tol, depth);
  return acc;
}

}  // namespace cornermass
