#pragma once

#include <string>

#include <json.hpp>

#include "tsrmb/evaluate.hpp"
#include "tsrmb/model.hpp"

namespace tsrmb {

// Canonical form: compact, object keys sorted, doubles printed with 17
// significant digits, forbidden distances as null. Re-serializing a parsed
// document is byte-identical.
std::string to_canonical_json(const nlohmann::json& j);

// Instance schema (version 1): {d, dist, r1, r2, scenarios, version} with the
// distance table as a lower-triangular row-major array (diagonal included).
nlohmann::json instance_to_json(const MetricInstance& inst);
MetricInstance instance_from_json(const nlohmann::json& j);

void save_instance(const std::string& path, const MetricInstance& inst);
MetricInstance load_instance(const std::string& path);

nlohmann::json decision_to_json(const FirstStageDecision& d1);
// Accepts either a bare decision object or a solve report containing one.
FirstStageDecision decision_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const SolveReport& report, const FirstStageDecision& d1,
                              double wall_ms);
nlohmann::json opt_to_json(const OptDecomposition& opt);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& text);

}  // namespace tsrmb
