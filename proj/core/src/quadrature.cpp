#include "cornermass/quadrature.hpp"

#include <map>
#include <mutex>
#include <numbers>

namespace cornermass {

namespace {

// Legendre P_k and P_k' by recurrence.
std::pair<double, double> legendre(int k, double x) {
  double p0 = 1.0, p1 = x;
  if (k == 0) return {1.0, 0.0};
  for (int j = 2; j <= k; ++j) {
    const double p2 = ((2 * j - 1) * x * p1 - (j - 1) * p0) / j;
    p0 = p1;
    p1 = p2;
  }
  const double dp = k * (x * p1 - p0) / (x * x - 1.0);
  return {p1, dp};
}

std::pair<std::vector<double>, std::vector<double>> compute_rule(int k) {
  std::vector<double> x(k), w(k);
  for (int i = 0; i < k; ++i) {
    // Newton from the Chebyshev-like initial guess
    double xi = std::cos(std::numbers::pi * (i + 0.75) / (k + 0.5));
    for (int it = 0; it < 100; ++it) {
      auto [p, dp] = legendre(k, xi);
      const double dx = p / dp;
      xi -= dx;
      if (std::fabs(dx) < 1e-16) break;
    }
    auto [p, dp] = legendre(k, xi);
    (void)p;
    x[i] = xi;
    w[i] = 2.0 / ((1.0 - xi * xi) * dp * dp);
  }
  return {x, w};
}

}  // namespace

const std::pair<std::vector<double>, std::vector<double>>& gauss_legendre(int k) {
  static std::map<int, std::pair<std::vector<double>, std::vector<double>>> cache;
  static std::mutex mtx;
  std::lock_guard<std::mutex> lock(mtx);
  auto it = cache.find(k);
  if (it == cache.end()) it = cache.emplace(k, compute_rule(k)).first;
  return it->second;
}

}  // namespace cornermass
