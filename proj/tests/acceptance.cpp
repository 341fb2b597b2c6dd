// Acceptance gate: one line per criterion, nonzero exit iff any fails.

#include <cmath>
#include <cstdio>
#include <memory>
#include <vector>

#include "cornermass/conformal.hpp"
#include "cornermass/grid.hpp"
#include "cornermass/json_io.hpp"
#include "cornermass/scenario.hpp"

using namespace cornermass;

namespace {

int failures = 0;

void report(int idx, const char* what, bool pass, const std::string& detail) {
  std::printf("criterion %d (%s): %s%s%s\n", idx, what, pass ? "PASS" : "FAIL",
              detail.empty() ? "" : " ", detail.c_str());
  if (!pass) ++failures;
}

bool check_named(const ScenarioReport& rep, const std::string& name, double* value = nullptr) {
  for (const CheckResult& c : rep.checks)
    if (c.name == name) {
      if (value) *value = c.value;
      return c.pass;
    }
  return false;
}

std::shared_ptr<MetricPath> kinked_scalar_path() {
  auto side = [](double a) {
    return scalar_side([a](double t) { return (2.0 + a * t) * (2.0 + a * t); },
                       [a](double t) { return 2.0 * a * (2.0 + a * t); },
                       [a](double) { return 2.0 * a * a; });
  };
  return std::make_shared<MetricPath>(
      MetricPath::from_sides(side(0.3), side(0.1), 1.0, 401));
}

double manufactured_error(bool fd) {
  auto y_ex = [](double s) { return std::exp(-s * s / 4.0); };
  RadialBVPSpec spec;
  spec.s = uniform_grid(0.0, 4.0, 20001);
  spec.smooth_center = true;
  spec.p = [](double s) { return 2.0 / s; };
  spec.q = [](double) { return 1.0; };
  spec.f = [y_ex](double s) { return (s * s / 4.0 - 0.5) * y_ex(s); };
  spec.robin_beta = 1.0;
  spec.robin_rhs = -2.0 * y_ex(4.0) + y_ex(4.0);
  const std::vector<double> y = fd ? solve_bvp_fd(spec) : solve_bvp_shooting(spec);
  double err = 0.0;
  for (std::size_t i = 0; i < spec.s.size(); ++i)
    err = std::max(err, std::fabs(y[i] - y_ex(spec.s[i])));
  return err;  // relative: max |y_exact| = 1
}

}  // namespace

int main() {
  const std::vector<Scenario> list = shipped_scenarios();
  const ScenarioReport strict = run_scenario(*find_scenario(list, "flat_in_schwarzschild"));
  const ScenarioReport smooth = run_scenario(*find_scenario(list, "equal_H"));

  // 1. smoothing lemmas on the kinked scalar path and the strict-jump collar
  {
    bool pass = true;
    auto path = kinked_scalar_path();
    for (double delta : {0.1, 0.05, 0.025}) {
      MollifiedPath m(path, MollifierConfig::make(delta));
      const LemmaReport lr = verify_lemmas(m);
      const DerivativeCheck dc = check_derivative_consistency(m);
      pass = pass && lr.agrees_outside && lr.c0_within_bound && dc.d1_order >= 1.5 &&
             dc.d2_order >= 1.5;
    }
    pass = pass && check_named(strict, "lemma_outside_band") &&
           check_named(strict, "lemma_c0_bound") &&
           check_named(strict, "lemma_derivative_order");
    report(1, "mollifier lemma suite", pass, "");
  }

  // 2. uniform band bounds across the delta halvings
  {
    const bool pass =
        check_named(strict, "band_sup_uniform") && check_named(smooth, "band_sup_uniform");
    report(2, "band sup uniformity", pass, "");
  }

  // 3. distributional limit of the line integrals
  {
    const double err_strict = std::fabs(strict.dist_limit - 0.1339745962155614);
    const double err_smooth = std::fabs(smooth.dist_limit);
    const bool pass = err_strict <= 1e-3 && err_smooth <= 1e-3;
    report(3, "distributional limit", pass,
           "strict=" + format_double(strict.dist_limit) +
               " smooth=" + format_double(smooth.dist_limit));
  }

  // 4. conformal corrections: decay/integral identity, shrinking u, vanishing A
  {
    double a_err = 0.0;
    const bool pass = check_named(strict, "a_identity", &a_err) &&
                      check_named(strict, "u_sup_decreasing") &&
                      check_named(strict, "a_decay_order") &&
                      check_named(strict, "mass_limit");
    report(4, "conformal corrections", pass,
           "|A_decay-A_integral|=" + format_double(a_err) +
               " a_order=" + format_double(strict.a_order));
  }

  // 5. mass positivity under condition (H)
  {
    const bool floors = check_named(strict, "pmt_floor") && check_named(smooth, "pmt_floor");
    const bool limit = strict.mass_extrapolated >= 0.5 - 1e-3;
    report(5, "positive mass", floors && limit,
           "extrapolated=" + format_double(strict.mass_extrapolated));
  }

  // 6. energy dichotomy between strict jump and smooth cut
  {
    const bool pass =
        check_named(strict, "energy_floor") && check_named(smooth, "energy_smooth");
    double e_last = smooth.records.empty()
                        ? 0.0
                        : smooth.records.back().pipe->second.energy;
    report(6, "energy dichotomy", pass, "smooth_energy=" + format_double(e_last));
  }

  // 7. independent curvature oracle
  {
    const OracleCheckReport sph = oracle_check(*find_scenario(list, "flat_in_schwarzschild"));
    const OracleCheckReport tor = oracle_check(*find_scenario(list, "torus_kink"));
    const bool pass = sph.pass && tor.pass;
    report(7, "oracle equivalence", pass,
           "rel_err=" + format_double(std::max(sph.max_rel_R_err, tor.max_rel_R_err)) +
               " order=" + format_double(std::min(sph.observed_order, tor.observed_order)));
  }

  // 8. manufactured solutions for both solvers
  {
    const double e_fd = manufactured_error(true);
    const double e_sh = manufactured_error(false);
    const bool pass = e_fd <= 1e-8 && e_sh <= 1e-8;
    report(8, "manufactured solutions", pass,
           "fd=" + format_double(e_fd) + " shooting=" + format_double(e_sh));
  }

  if (failures) std::printf("%d criterion(s) failed\n", failures);
  return failures == 0 ? 0 : 1;
}
