#include "tsrmb/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace tsrmb {

namespace {

using nlohmann::json;

void emit(const json& j, std::string& out) {
  switch (j.type()) {
    case json::value_t::null:
      out += "null";
      break;
    case json::value_t::boolean:
      out += j.get<bool>() ? "true" : "false";
      break;
    case json::value_t::number_integer:
      out += std::to_string(j.get<std::int64_t>());
      break;
    case json::value_t::number_unsigned:
      out += std::to_string(j.get<std::uint64_t>());
      break;
    case json::value_t::number_float: {
      double v = j.get<double>();
      char buf[40];
      std::snprintf(buf, sizeof(buf), "%.17g", v);
      out += buf;
      break;
    }
    case json::value_t::string:
      out += json(j.get<std::string>()).dump();  // reuse the library's escaping
      break;
    case json::value_t::array: {
      out += '[';
      bool first = true;
      for (const auto& e : j) {
        if (!first) out += ',';
        first = false;
        emit(e, out);
      }
      out += ']';
      break;
    }
    case json::value_t::object: {
      out += '{';
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {  // std::map order: sorted keys
        if (!first) out += ',';
        first = false;
        out += json(it.key()).dump();
        out += ':';
        emit(it.value(), out);
      }
      out += '}';
      break;
    }
    default:
      fail("IoError", "unserializable JSON value");
  }
}

double number_or_forbidden(const json& v, const char* what) {
  if (v.is_null()) return DistanceMatrix::kForbidden;
  if (!v.is_number()) fail("ParseError", std::string(what) + " must be a number or null");
  return v.get<double>();
}

}  // namespace

std::string to_canonical_json(const nlohmann::json& j) {
  std::string out;
  emit(j, out);
  out += '\n';
  return out;
}

nlohmann::json instance_to_json(const MetricInstance& inst) {
  json j;
  j["version"] = 1;
  j["r1"] = inst.n_r1;
  j["r2"] = inst.r2_labels;
  j["d"] = inst.n_d;
  json dist = json::array();
  for (int i = 0; i < inst.n_vertices(); ++i)
    for (int k = 0; k <= i; ++k) {
      double v = inst.dist.at(i, k);
      if (v == DistanceMatrix::kForbidden)
        dist.push_back(nullptr);
      else
        dist.push_back(v);
    }
  j["dist"] = std::move(dist);
  if (inst.scenarios.is_explicit())
    j["scenarios"] = json{{"explicit", inst.scenarios.sets}};
  else
    j["scenarios"] = json{{"implicit_k", inst.scenarios.k}};
  return j;
}

MetricInstance instance_from_json(const nlohmann::json& j) {
  try {
    if (j.at("version").get<int>() != 1) fail("ParseError", "unsupported instance version");
    MetricInstance inst;
    inst.n_r1 = j.at("r1").get<int>();
    inst.r2_labels = j.at("r2").get<std::vector<std::string>>();
    inst.n_d = j.at("d").get<int>();
    if (inst.n_r1 < 1 || inst.n_d < 1) fail("ParseError", "counts must be positive");

    const int nv = inst.n_vertices();
    const auto& dist = j.at("dist");
    if (static_cast<int>(dist.size()) != nv * (nv + 1) / 2)
      fail("ParseError", "dist length does not match the vertex count");
    inst.dist = DistanceMatrix(nv);
    size_t idx = 0;
    for (int i = 0; i < nv; ++i)
      for (int k = 0; k <= i; ++k)
        inst.dist.set_sym(i, k, number_or_forbidden(dist[idx++], "dist entry"));

    const auto& sc = j.at("scenarios");
    if (sc.contains("explicit"))
      inst.scenarios = ScenarioSet::explicit_sets(sc.at("explicit").get<std::vector<std::vector<int>>>());
    else if (sc.contains("implicit_k"))
      inst.scenarios = ScenarioSet::implicit(sc.at("implicit_k").get<int>());
    else
      fail("ParseError", "scenarios must carry 'explicit' or 'implicit_k'");
    for (const auto& s : inst.scenarios.sets)
      for (int r : s)
        if (r < 0 || r >= inst.n_r2()) fail("ParseError", "scenario rider index out of range");
    if (!inst.scenarios.is_explicit() &&
        (inst.scenarios.k < 1 || inst.scenarios.k > inst.n_r2()))
      fail("ParseError", "implicit k outside [1, |R2|]");
    return inst;
  } catch (const json::exception& e) {
    fail("ParseError", std::string("malformed instance JSON: ") + e.what());
  }
}

void save_instance(const std::string& path, const MetricInstance& inst) {
  write_text_file(path, to_canonical_json(instance_to_json(inst)));
}

MetricInstance load_instance(const std::string& path) {
  json j;
  try {
    j = json::parse(read_text_file(path));
  } catch (const json::exception& e) {
    fail("ParseError", path + ": " + e.what());
  }
  MetricInstance inst = instance_from_json(j);
  // Non-metric instances are rejected, not supported.
  auto violations = validate(inst);
  if (!violations.empty())
    fail("ParseError", path + ": invalid instance: " + violations.front() +
                           (violations.size() > 1
                                ? " (+" + std::to_string(violations.size() - 1) + " more)"
                                : ""));
  return inst;
}

nlohmann::json decision_to_json(const FirstStageDecision& d1) {
  json m = json::array();
  for (auto [i, t] : d1.matching.pairs) m.push_back(json::array({i, t}));
  return json{{"drivers", d1.drivers}, {"matching", std::move(m)}};
}

FirstStageDecision decision_from_json(const nlohmann::json& j) {
  try {
    const json& d = j.contains("decision") ? j.at("decision") : j;
    FirstStageDecision out;
    out.drivers = d.at("drivers").get<std::vector<int>>();
    if (d.contains("matching"))
      for (const auto& pair : d.at("matching"))
        out.matching.pairs.emplace_back(pair.at(0).get<int>(), pair.at(1).get<int>());
    return out;
  } catch (const json::exception& e) {
    fail("ParseError", std::string("malformed decision JSON: ") + e.what());
  }
}

nlohmann::json report_to_json(const SolveReport& report, const FirstStageDecision& d1,
                              double wall_ms) {
  json j;
  j["solver"] = report.solver_name;
  j["cost1"] = report.cost1;
  j["per_scenario_cost2"] = report.per_scenario_cost2;
  j["worst_cost2"] = report.worst_cost2;
  j["worst_scenario"] = report.worst_scenario;
  j["total"] = report.total;
  if (report.opt2_guess)
    j["opt2_guess"] = *report.opt2_guess;
  else
    j["opt2_guess"] = nullptr;
  j["decision"] = decision_to_json(d1);
  j["wall_ms"] = wall_ms;
  return j;
}

nlohmann::json opt_to_json(const OptDecomposition& opt) {
  return nlohmann::json{{"opt1", opt.opt1},
                        {"opt2", opt.opt2},
                        {"total", opt.total()},
                        {"d1", decision_to_json(opt.optimal_d1)}};
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail("IoError", "cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) fail("IoError", "cannot open " + path + " for writing");
  out << text;
  if (!out) fail("IoError", "failed writing " + path);
}

}  // namespace tsrmb
