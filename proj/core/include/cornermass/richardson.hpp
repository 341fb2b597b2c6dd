#pragma once

#include <vector>

namespace cornermass {

struct ExtrapolationResult {
  double limit = 0.0;           // extrapolated value
  double observed_order = 0.0;  // order estimated from successive differences
  bool monotone = true;         // successive differences have a consistent sign
  std::vector<double> raw;      // input sequence, largest parameter first
};

/// Extrapolate f(delta) -> f(0) from values at a delta-halving sweep
/// (values[i] corresponds to delta_0 / 2^i). assumed_order is used when the
/// observed order cannot be estimated reliably from the sequence.
ExtrapolationResult richardson_extrapolate(const std::vector<double>& values,
                                           double assumed_order = 1.0);

/// Least-squares slope of log(err) vs log(h): the observed convergence order.
double fit_order(const std::vector<double>& h, const std::vector<double>& err);

}  // namespace cornermass
