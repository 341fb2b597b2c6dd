#include "cornermass/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace cornermass {

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

ordered_json slice_tensor_json(const SliceTensor& t) {
  ordered_json j;
  if (t.kind() == SliceKind::SphericalScalar) {
    j["kind"] = "spherical";
    j["coeff"] = t.coeff();
  } else {
    j["kind"] = "torus";
    j["nx"] = t.grid().nx;
    j["ny"] = t.grid().ny;
    j["c11"] = t.c11();
    j["c12"] = t.c12();
    j["c22"] = t.c22();
  }
  return j;
}

ordered_json metric_path_json(const MetricPath& path, const std::string& family) {
  ordered_json j;
  j["schema_version"] = 1;
  j["family"] = family;
  j["epsilon"] = path.epsilon();
  j["n_t"] = path.size();
  j["t_grid"] = path.t_grid();
  ordered_json slices = ordered_json::array();
  for (const SliceTensor& g : path.values()) slices.push_back(slice_tensor_json(g));
  j["slices"] = std::move(slices);
  return j;
}

ordered_json mollified_samples_json(const MollifiedPath& m) {
  ordered_json j;
  j["schema_version"] = 1;
  j["delta"] = m.delta();
  j["epsilon"] = m.base().epsilon();
  j["s_grid"] = m.s_grid();
  ordered_json g = ordered_json::array(), d1 = ordered_json::array(),
               d2 = ordered_json::array();
  for (double s : m.s_grid()) {
    g.push_back(slice_tensor_json(m.gamma(s)));
    d1.push_back(slice_tensor_json(m.d1(s)));
    d2.push_back(slice_tensor_json(m.d2(s)));
  }
  j["gamma"] = std::move(g);
  j["d1"] = std::move(d1);
  j["d2"] = std::move(d2);
  return j;
}

ordered_json lemma_report_json(const LemmaReport& r) {
  return ordered_json{{"delta", r.delta},
                      {"lipschitz_L", r.lipschitz_L},
                      {"max_outside_band_dev", r.max_outside_band_dev},
                      {"max_c0_dev", r.max_c0_dev},
                      {"c0_bound", r.c0_bound},
                      {"c1_modulus", r.c1_modulus},
                      {"min_eigenvalue", r.min_eigenvalue},
                      {"agrees_outside", r.agrees_outside},
                      {"c0_within_bound", r.c0_within_bound}};
}

ordered_json derivative_check_json(const DerivativeCheck& r) {
  return ordered_json{{"d1_err_h", r.d1_err_h},   {"d1_err_h2", r.d1_err_h2},
                      {"d2_err_h", r.d2_err_h},   {"d2_err_h2", r.d2_err_h2},
                      {"d1_order", r.d1_order},   {"d2_order", r.d2_order}};
}

ordered_json concentration_json(const ConcentrationReport& r) {
  return ordered_json{{"delta", r.delta},
                      {"h_jump_min", r.h_jump_min},
                      {"h_jump_max", r.h_jump_max},
                      {"sup_outside_inner", r.sup_outside_inner},
                      {"sup_inner_residual", r.sup_inner_residual},
                      {"line_integral_min", r.line_integral_min},
                      {"line_integral_max", r.line_integral_max},
                      {"kernel_mass", r.kernel_mass},
                      {"target_min", r.target_min},
                      {"target_max", r.target_max}};
}

namespace {

ordered_json stage_json(const ConformalStage& s) {
  return ordered_json{{"A_decay", s.A_decay},
                      {"A_integral", s.A_integral},
                      {"energy", s.energy},
                      {"u_min", s.u_min},
                      {"u_max", s.u_max},
                      {"solver_mismatch", s.solver_mismatch}};
}

}  // namespace

ordered_json pipeline_json(const PipelineResult& r) {
  return ordered_json{{"delta", r.delta},
                      {"mass_smoothed", r.mass_smoothed},
                      {"mass_tilde", r.mass_tilde},
                      {"mass_hat", r.mass_hat},
                      {"smallness", r.smallness},
                      {"h_jump", r.h_jump},
                      {"dominance", r.dominance},
                      {"first", stage_json(r.first)},
                      {"second", stage_json(r.second)}};
}

ordered_json oracle_check_json(const OracleCheckReport& r) {
  return ordered_json{{"scenario", r.scenario},
                      {"max_rel_R_err", r.max_rel_R_err},
                      {"observed_order", r.observed_order},
                      {"gauss_residual", r.gauss_residual},
                      {"evolution_residual", r.evolution_residual},
                      {"pass", r.pass}};
}

ordered_json scenario_report_json(const ScenarioReport& r) {
  ordered_json j;
  j["schema_version"] = 1;
  j["scenario"] = r.scenario.name;
  j["h_jump"] = r.h_jump;
  j["dominance"] = r.dominance;
  if (!r.dominance)
    j["annotation"] = "hypothesis (H) fails; mass positivity not asserted";
  ordered_json recs = ordered_json::array();
  for (const DeltaRecord& rec : r.records) {
    ordered_json e;
    e["delta"] = rec.delta;
    e["lemmas"] = lemma_report_json(rec.lemmas);
    e["derivatives"] = derivative_check_json(rec.deriv);
    e["concentration"] = concentration_json(rec.conc);
    if (rec.pipe) e["pipeline"] = pipeline_json(*rec.pipe);
    recs.push_back(std::move(e));
  }
  j["records"] = std::move(recs);
  j["dist_limit"] = r.dist_limit;
  j["dist_target"] = r.dist_target;
  j["c0_order"] = r.c0_order;
  j["a_order"] = r.a_order;
  j["mass_extrapolated"] = r.mass_extrapolated;
  if (r.oracle) j["oracle"] = oracle_check_json(*r.oracle);
  ordered_json checks = ordered_json::array();
  for (const CheckResult& c : r.checks)
    checks.push_back(ordered_json{
        {"name", c.name}, {"pass", c.pass}, {"value", c.value}, {"bound", c.bound}});
  j["checks"] = std::move(checks);
  j["all_pass"] = r.all_pass;
  return j;
}

ordered_json sweep_summary_json(const SweepSummary& r) {
  ordered_json checks = ordered_json::array();
  for (const CheckResult& c : r.checks)
    checks.push_back(ordered_json{
        {"name", c.name}, {"pass", c.pass}, {"value", c.value}, {"bound", c.bound}});
  return ordered_json{{"schema_version", 1}, {"checks", std::move(checks)},
                      {"all_pass", r.all_pass}};
}

std::string checks_csv(const std::vector<CheckResult>& checks) {
  std::ostringstream os;
  os << "check,pass,value,bound\n";
  for (const CheckResult& c : checks)
    os << c.name << ',' << (c.pass ? 1 : 0) << ',' << format_double(c.value) << ','
       << format_double(c.bound) << '\n';
  return os.str();
}

std::string records_csv(const ScenarioReport& r) {
  std::ostringstream os;
  os << "delta,max_c0_dev,c0_bound,outside_band_dev,d1_order,d2_order,"
        "sup_outside_inner,sup_inner_residual,line_integral,kernel_mass,"
        "mass_smoothed,mass_tilde,mass_hat,A1,A2,energy2,u_sup\n";
  for (const DeltaRecord& rec : r.records) {
    os << format_double(rec.delta) << ',' << format_double(rec.lemmas.max_c0_dev) << ','
       << format_double(rec.lemmas.c0_bound) << ','
       << format_double(rec.lemmas.max_outside_band_dev) << ','
       << format_double(rec.deriv.d1_order) << ',' << format_double(rec.deriv.d2_order)
       << ',' << format_double(rec.conc.sup_outside_inner) << ','
       << format_double(rec.conc.sup_inner_residual) << ','
       << format_double(rec.conc.line_integral_max) << ','
       << format_double(rec.conc.kernel_mass);
    if (rec.pipe) {
      const PipelineResult& p = *rec.pipe;
      os << ',' << format_double(p.mass_smoothed) << ',' << format_double(p.mass_tilde)
         << ',' << format_double(p.mass_hat) << ',' << format_double(p.first.A_integral)
         << ',' << format_double(p.second.A_integral) << ','
         << format_double(p.second.energy) << ','
         << format_double(std::max(p.first.u_max - 1.0, 1.0 - p.first.u_min));
    } else {
      os << ",,,,,,,";
    }
    os << '\n';
  }
  return os.str();
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw config_error("cannot open for writing: " + path);
  f << content;
}

}  // namespace cornermass
