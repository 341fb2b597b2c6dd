#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cornermass/concentration.hpp"
#include "cornermass/conformal.hpp"
#include "cornermass/corner_metric.hpp"
#include "cornermass/spherical.hpp"

namespace cornermass {

/// Every tolerance used by the shipped checks, explicit and overridable.
struct Tolerances {
  double outside_band = 1e-10;       // smoothing must not touch |s| > delta/2
  double growth_factor = 1.5;        // allowed growth of band sups across halvings
  double distributional = 1e-3;      // extrapolated line integral vs 2 (H_- - H_+)
  double a_identity = 1e-6;          // |A_decay - A_integral|
  double pmt_floor = -1e-6;          // corrected masses must stay above this
  double mass_limit = 1e-3;          // extrapolated mass vs exact exterior mass
  double energy_smooth = 1e-4;       // second-stage energy bound, smooth scenarios
  double energy_floor_factor = 0.5;  // min energy over sweep vs largest-delta value
  double oracle_rel = 1e-6;          // collar curvature vs FD oracle, relative
};

struct Scenario {
  std::string name;
  Family family = Family::Spherical;

  double R = 4.0;          // corner areal radius
  double m = 0.0;          // exterior Schwarzschild parameter
  double epsilon = 1.0;    // collar half-width parameter
  std::size_t n_t = 801;   // collar sample nodes
  double s_max_t = 16.0;   // outer boundary, collar coordinate
  double wall_t = 0.0;     // reflecting wall position (< 0), wall scenarios only

  bool smooth = false;           // jump expected to vanish
  bool expect_dominance = true;  // condition H_- >= H_+ expected to hold
  bool run_pipeline = true;      // run the conformal/mass stages
  bool curvature_only = false;   // torus rig: curvature and oracle checks only

  std::vector<double> delta_sweep = {0.1, 0.05, 0.025};
  TorusKinkParams torus;
  Tolerances tol;
  SphericalGridParams grid;

  void validate() const;
  CornerMetric build() const;
};

std::vector<Scenario> shipped_scenarios();
const Scenario* find_scenario(const std::vector<Scenario>& list, const std::string& name);

struct CheckResult {
  std::string name;
  bool pass = false;
  double value = 0.0;
  double bound = 0.0;
};

struct DeltaRecord {
  double delta = 0.0;
  LemmaReport lemmas;
  DerivativeCheck deriv;
  ConcentrationReport conc;
  std::optional<PipelineResult> pipe;
};

/// Comparison of the algebraic collar curvature against the finite-difference
/// oracle, plus the Gauss and evolution identities mixing the two.
struct OracleCheckReport {
  std::string scenario;
  double max_rel_R_err = 0.0;    // finest stencil, Richardson-improved
  double observed_order = 0.0;   // from the raw h sweep
  double gauss_residual = 0.0;   // 2K - (R - 2 Ric(nu,nu) + H^2 - |A|^2)
  double evolution_residual = 0.0;  // dH/dt + Ric(nu,nu) + |A|^2
  bool pass = false;
};

OracleCheckReport oracle_check(const Scenario& sc);

struct ScenarioReport {
  Scenario scenario;
  double h_jump = 0.0;
  bool dominance = false;
  std::vector<DeltaRecord> records;

  // sweep summary
  double dist_limit = 0.0, dist_target = 0.0;
  double c0_order = 0.0;        // fitted order of the C^0 deviation in delta
  double a_order = 0.0;         // fitted decay order of A_delta
  double mass_extrapolated = 0.0;
  std::optional<OracleCheckReport> oracle;

  std::vector<CheckResult> checks;
  bool all_pass = false;
};

ScenarioReport run_scenario(const Scenario& sc);

/// Cross-scenario convergence summary (needs >= 3 sweep members per scenario).
struct SweepSummary {
  std::vector<CheckResult> checks;
  bool all_pass = false;
};

SweepSummary sweep_report(const std::vector<ScenarioReport>& reports);

}  // namespace cornermass
