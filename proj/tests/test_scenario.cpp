#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "cornermass/json_io.hpp"
#include "cornermass/scenario.hpp"

using namespace cornermass;

TEST_CASE("shipped scenario catalogue") {
  const std::vector<Scenario> list = shipped_scenarios();
  REQUIRE(list.size() == 7);
  for (const Scenario& s : list) CHECK_NOTHROW(s.validate());

  const Scenario* fs = find_scenario(list, "flat_in_schwarzschild");
  REQUIRE(fs != nullptr);
  CHECK(fs->R == 4.0);
  CHECK(fs->m == 0.5);
  CHECK(fs->delta_sweep == std::vector<double>{0.1, 0.05, 0.025});

  const Scenario* neg = find_scenario(list, "negative_mass");
  REQUIRE(neg != nullptr);
  CHECK_FALSE(neg->expect_dominance);
  CHECK_FALSE(neg->run_pipeline);

  const Scenario* eq = find_scenario(list, "equal_H");
  REQUIRE(eq != nullptr);
  CHECK(eq->smooth);
  CHECK(eq->wall_t < 0.0);

  const Scenario* tk = find_scenario(list, "torus_kink");
  REQUIRE(tk != nullptr);
  CHECK(tk->curvature_only);

  CHECK(find_scenario(list, "no_such") == nullptr);
}

TEST_CASE("scenario validation rejects bad sweeps") {
  Scenario s;
  s.name = "x";
  s.delta_sweep = {0.05, 0.1};
  CHECK_THROWS_AS(s.validate(), config_error);
  s.delta_sweep = {0.5};
  CHECK_THROWS_AS(s.validate(), config_error);
  s.delta_sweep = {};
  CHECK_THROWS_AS(s.validate(), config_error);
  s.delta_sweep = {0.1, 0.05};
  CHECK_NOTHROW(s.validate());
}

TEST_CASE("torus scenario report: curvature checks only") {
  const std::vector<Scenario> list = shipped_scenarios();
  const ScenarioReport rep = run_scenario(*find_scenario(list, "torus_kink"));
  CHECK(rep.records.empty());
  REQUIRE(bool(rep.oracle));
  CHECK(rep.oracle->pass);
  CHECK(rep.dominance);  // c_minus > c_plus
  CHECK(rep.h_jump == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(rep.all_pass);
}

TEST_CASE("negative mass scenario: hypothesis (H) flagged, no mass stages") {
  const std::vector<Scenario> list = shipped_scenarios();
  const ScenarioReport rep = run_scenario(*find_scenario(list, "negative_mass"));
  CHECK_FALSE(rep.dominance);
  CHECK(rep.h_jump == doctest::Approx(-0.0590169943749474).epsilon(1e-10));
  CHECK(rep.dist_target == doctest::Approx(-0.1180339887498949).epsilon(1e-10));
  CHECK(std::fabs(rep.dist_limit - rep.dist_target) < 1e-3);
  for (const DeltaRecord& r : rep.records) CHECK_FALSE(bool(r.pipe));
  CHECK(rep.all_pass);

  const ordered_json j = scenario_report_json(rep);
  CHECK(j.contains("annotation"));
  CHECK(j["dominance"] == false);
}

TEST_CASE("report serialization is deterministic") {
  const std::vector<Scenario> list = shipped_scenarios();
  const ScenarioReport rep = run_scenario(*find_scenario(list, "torus_kink"));
  const std::string a = scenario_report_json(rep).dump(2);
  const std::string b = scenario_report_json(rep).dump(2);
  CHECK(a == b);
  CHECK(checks_csv(rep.checks) == checks_csv(rep.checks));
}

TEST_CASE("full precision double formatting round-trips") {
  for (double v : {0.1, 1.0 / 3.0, 0.1339745962155614, -2.5e-17, 0.0}) {
    CHECK(std::stod(format_double(v)) == v);
  }
}

TEST_CASE("sweep report needs three members") {
  ScenarioReport rep;
  rep.scenario.name = "short";
  rep.records.resize(2);
  CHECK_THROWS_AS(sweep_report({rep}), config_error);
}
