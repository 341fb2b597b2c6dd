#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>

#include "cornermass/grid.hpp"
#include "cornermass/kernels.hpp"
#include "cornermass/quadrature.hpp"
#include "cornermass/richardson.hpp"

using namespace cornermass;

TEST_CASE("uniform and zoned grids") {
  const auto g = uniform_grid(0.0, 1.0, 5);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == doctest::Approx(0.0));
  CHECK(g.back() == doctest::Approx(1.0));
  CHECK(g[2] == doctest::Approx(0.5));

  const auto z = zoned_grid({0.0, 1.0, 3.0}, {2, 4});
  REQUIRE(z.size() == 7);  // shared breakpoint appears once
  CHECK(z[2] == doctest::Approx(1.0));
  CHECK(z[3] == doctest::Approx(1.5));
  CHECK(z.back() == doctest::Approx(3.0));
  for (std::size_t i = 1; i < z.size(); ++i) CHECK(z[i] > z[i - 1]);
}

TEST_CASE("trapezoid integrates linear functions exactly") {
  const auto x = zoned_grid({0.0, 0.3, 1.0}, {3, 7});
  std::vector<double> f(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) f[i] = 2.0 * x[i] + 1.0;
  CHECK(trapezoid(x, f) == doctest::Approx(2.0).epsilon(1e-14));
}

TEST_CASE("adaptive quadrature") {
  const double v = integrate_adaptive([](double t) { return std::sin(t); }, 0.0,
                                      std::numbers::pi, 1e-12);
  CHECK(v == doctest::Approx(2.0).epsilon(1e-12));

  // kinked integrand with an interior split
  const double k = integrate_adaptive_split([](double t) { return std::fabs(t); }, -1.0,
                                            2.0, {0.0}, 1e-12);
  CHECK(k == doctest::Approx(2.5).epsilon(1e-12));
}

TEST_CASE("finite difference stencils reach design order") {
  const double h = 1e-3;
  std::vector<double> f(21);
  for (int i = 0; i < 21; ++i) {
    const double x = double(i - 10) * h;
    f[std::size_t(i)] = std::exp(x);
  }
  const auto d1 = fd_derivative(f, h, 4);
  const auto d2 = fd_second_derivative(f, h, 4);
  CHECK(d1[10] == doctest::Approx(1.0).epsilon(1e-11));
  CHECK(d2[10] == doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("cubic interpolation is exact on cubics") {
  std::vector<double> f(9);
  auto p = [](double x) { return 1.0 + x - 2.0 * x * x + 0.5 * x * x * x; };
  for (int i = 0; i < 9; ++i) f[std::size_t(i)] = p(0.1 * double(i));
  CHECK(cubic_interpolate(f, 0.0, 0.1, 0.234, 0, 8) ==
        doctest::Approx(p(0.234)).epsilon(1e-13));
}

TEST_CASE("richardson extrapolation recovers first order limits") {
  // v(d) = 3 + 2 d at d = 0.1, 0.05, 0.025
  const ExtrapolationResult r = richardson_extrapolate({3.2, 3.1, 3.05}, 1.0);
  CHECK(r.limit == doctest::Approx(3.0).epsilon(1e-12));
  CHECK(r.observed_order == doctest::Approx(1.0).epsilon(1e-6));
  CHECK(r.monotone);
}

TEST_CASE("order fit on a synthetic second order sequence") {
  const std::vector<double> h = {0.1, 0.05, 0.025};
  const std::vector<double> err = {4e-2, 1e-2, 2.5e-3};
  CHECK(fit_order(h, err) == doctest::Approx(2.0).epsilon(1e-10));
}

TEST_CASE("bump kernel is normalized with compact support") {
  BumpKernel phi;
  CHECK(phi.normalization() == doctest::Approx(0.44399381616807865).epsilon(1e-10));
  CHECK(phi(0.0) == doctest::Approx(0.8285688398691067).epsilon(1e-10));
  CHECK(phi(1.0) == 0.0);
  CHECK(phi(-1.2) == 0.0);
  CHECK(phi(0.5) == doctest::Approx(phi(-0.5)).epsilon(1e-15));
  const double mass = integrate_adaptive([&](double t) { return phi(t); }, -1.0, 1.0, 1e-13);
  CHECK(mass == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("cutoff profile: plateau, support, closed form derivatives") {
  CutoffProfile sigma(0.01);
  CHECK(sigma(0.0) == doctest::Approx(0.01).epsilon(1e-15));
  CHECK(sigma(0.2) == doctest::Approx(0.01).epsilon(1e-15));
  CHECK(sigma(-0.24) == doctest::Approx(0.01).epsilon(1e-15));
  CHECK(sigma(0.5) == 0.0);
  CHECK(sigma(0.7) == 0.0);
  const double mid = sigma(0.35);
  CHECK(mid > 0.0);
  CHECK(mid < 0.01);

  // derivatives against central differences in the transition region
  const double h = 1e-6;
  for (double t : {0.3, 0.35, -0.42, 0.45}) {
    const double d1_fd = (sigma(t + h) - sigma(t - h)) / (2.0 * h);
    const double d2_fd = (sigma(t + h) - 2.0 * sigma(t) + sigma(t - h)) / (h * h);
    CHECK(sigma.derivative(t) == doctest::Approx(d1_fd).epsilon(1e-6));
    CHECK(sigma.second_derivative(t) == doctest::Approx(d2_fd).epsilon(1e-4));
  }
  CHECK(sigma.derivative(0.1) == 0.0);
  CHECK(sigma.derivative(0.6) == 0.0);
}
