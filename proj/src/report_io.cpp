#include "chkit/report_io.hpp"

#include <nlohmann/json.hpp>

namespace chkit {
namespace {

using nlohmann::ordered_json;

ordered_json to_json(const ClaimReport& r) {
  ordered_json j;
  j["claim"] = r.claim;
  j["outcome"] = outcome_name(r.outcome());
  j["preconditions_ok"] = r.preconditions_ok;
  if (!r.preconditions_ok) j["precondition_failure"] = r.precondition_failure;
  j["instances"] = r.instances;
  if (!r.layer_instances.empty()) {
    ordered_json layers = ordered_json::object();
    for (const auto& [name, count] : r.layer_instances) layers[name] = count;
    j["layer_instances"] = layers;
  }
  ordered_json violations = ordered_json::array();
  for (const auto& v : r.violations) {
    ordered_json item;
    item["tuple"] = v.tuple;
    item["witness"] = v.witness.empty() ? ordered_json(nullptr) : ordered_json(v.witness);
    item["detail"] = v.detail;
    violations.push_back(std::move(item));
  }
  j["violations"] = std::move(violations);
  return j;
}

}  // namespace

const char* outcome_name(ClaimOutcome outcome) {
  switch (outcome) {
    case ClaimOutcome::kPass: return "pass";
    case ClaimOutcome::kFail: return "fail";
    case ClaimOutcome::kPrecondition: return "precondition";
  }
  return "unknown";
}

std::string format_report(const ClaimReport& report) { return to_json(report).dump(); }

std::string format_reports(const std::vector<ClaimReport>& reports) {
  std::string out = "[\n";
  for (std::size_t i = 0; i < reports.size(); ++i) {
    out += "  " + format_report(reports[i]);
    out += i + 1 < reports.size() ? ",\n" : "\n";
  }
  return out + "]\n";
}

ClaimReport parse_report(std::string_view text) {
  const auto j = ordered_json::parse(text);
  ClaimReport r;
  r.claim = j.at("claim").get<std::string>();
  r.preconditions_ok = j.at("preconditions_ok").get<bool>();
  if (j.contains("precondition_failure")) r.precondition_failure = j["precondition_failure"].get<std::string>();
  r.instances = j.at("instances").get<std::int64_t>();
  if (j.contains("layer_instances")) {
    for (const auto& [name, count] : j["layer_instances"].items()) r.layer_instances[name] = count.get<std::int64_t>();
  }
  for (const auto& item : j.at("violations")) {
    Violation v;
    v.tuple = item.at("tuple").get<std::vector<int>>();
    if (!item.at("witness").is_null()) v.witness = item["witness"].get<std::vector<int>>();
    v.detail = item.at("detail").get<std::string>();
    r.violations.push_back(std::move(v));
  }
  return r;
}

}  // namespace chkit
