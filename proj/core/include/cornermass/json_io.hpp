#pragma once

#include <string>

#include <json.hpp>

#include "cornermass/mollifier.hpp"
#include "cornermass/scenario.hpp"

namespace cornermass {

using ordered_json = nlohmann::ordered_json;

/// Full-precision decimal rendering (round-trips doubles exactly).
std::string format_double(double v);

ordered_json slice_tensor_json(const SliceTensor& t);
ordered_json metric_path_json(const MetricPath& path, const std::string& family);

/// Sampled gamma_delta, d1, d2 on the refined band grid.
ordered_json mollified_samples_json(const MollifiedPath& m);

ordered_json lemma_report_json(const LemmaReport& r);
ordered_json derivative_check_json(const DerivativeCheck& r);
ordered_json concentration_json(const ConcentrationReport& r);
ordered_json pipeline_json(const PipelineResult& r);
ordered_json oracle_check_json(const OracleCheckReport& r);
ordered_json scenario_report_json(const ScenarioReport& r);
ordered_json sweep_summary_json(const SweepSummary& r);

/// Deterministic CSV tables (fixed column order, full precision).
std::string checks_csv(const std::vector<CheckResult>& checks);
std::string records_csv(const ScenarioReport& r);

void write_text_file(const std::string& path, const std::string& content);

}  // namespace cornermass
