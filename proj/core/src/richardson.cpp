#include "cornermass/richardson.hpp"

#include <cmath>

#include "cornermass/types.hpp"

namespace cornermass {

ExtrapolationResult richardson_extrapolate(const std::vector<double>& values,
                                           double assumed_order) {
  if (values.size() < 2) throw config_error("richardson_extrapolate: need >= 2 values");
  ExtrapolationResult res;
  res.raw = values;

  // Estimate the order from three consecutive terms when possible:
  // (f(d) - f(d/2)) / (f(d/2) - f(d/4)) = 2^p for f = limit + c d^p.
  double order = assumed_order;
  res.monotone = true;
  if (values.size() >= 3) {
    const std::size_t k = values.size();
    const double num = values[k - 3] - values[k - 2];
    const double den = values[k - 2] - values[k - 1];
    if (num * den > 0.0) {
      const double ratio = num / den;
      if (ratio > 1.05) order = std::log2(ratio);
    } else if (den != 0.0 || num != 0.0) {
      res.monotone = false;
    }
  }
  for (std::size_t i = 2; i < values.size(); ++i) {
    const double a = values[i - 2] - values[i - 1];
    const double b = values[i - 1] - values[i];
    if (a * b < 0.0) res.monotone = false;
  }
  res.observed_order = order;

  const double f = std::pow(2.0, order);
  const double coarse = values[values.size() - 2];
  const double fine = values.back();
  res.limit = (f * fine - coarse) / (f - 1.0);
  return res;
}

double fit_order(const std::vector<double>& h, const std::vector<double>& err) {
  if (h.size() != err.size() || h.size() < 2) throw config_error("fit_order: bad input");
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    if (err[i] <= 0.0 || h[i] <= 0.0) continue;
    const double x = std::log(h[i]);
    const double y = std::log(err[i]);
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
    ++n;
  }
  if (n < 2) return 0.0;
  const double dn = double(n);
  return (dn * sxy - sx * sy) / (dn * sxx - sx * sx);
}

}  // namespace cornermass
