// Copyright 2026 The capelli-lab Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "capelli_cli/report_json.hpp"

#include <algorithm>
#include <set>

#include <capelli/errors.hpp>

namespace capelli::cli {

const std::string& tool_version() {
  static const std::string v = CAPELLI_VERSION;
  return v;
}

bool Report::any_failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const ReportEntry& e) { return e.status == Status::Fail; });
}

void Report::sort() {
  std::stable_sort(checks.begin(), checks.end(), [](const ReportEntry& a, const ReportEntry& b) {
    if (a.irrep != b.irrep) return a.irrep < b.irrep;
    return a.name < b.name;
  });
}

json report_to_json(const Report& report) {
  json checks = json::array();
  for (const auto& e : report.checks)
    checks.push_back({{"name", e.name},
                      {"irrep", e.irrep},
                      {"status", std::string(to_string(e.status))},
                      {"detail", e.detail},
                      {"runtime_ms", e.runtime_ms}});
  return {{"tool_version", report.tool_version}, {"group", report.group}, {"checks", std::move(checks)}};
}

std::vector<std::string> report_schema_errors(const json& j) {
  std::vector<std::string> errors;
  if (!j.is_object()) return {"report is not an object"};
  const std::set<std::string> top{"tool_version", "group", "checks"};
  for (const auto& [key, value] : j.items())
    if (!top.contains(key)) errors.push_back("unexpected key '" + key + "'");
  for (const char* key : {"tool_version", "group"})
    if (!j.contains(key) || !j[key].is_string()) errors.push_back(std::string("'") + key + "' must be a string");
  if (!j.contains("checks") || !j["checks"].is_array()) {
    errors.push_back("'checks' must be an array");
    return errors;
  }
  const std::set<std::string> entry_keys{"name", "irrep", "status", "detail", "runtime_ms"};
  std::size_t index = 0;
  for (const auto& e : j["checks"]) {
    const std::string where = "checks[" + std::to_string(index++) + "]";
    if (!e.is_object()) {
      errors.push_back(where + " is not an object");
      continue;
    }
    for (const auto& [key, value] : e.items())
      if (!entry_keys.contains(key)) errors.push_back(where + ": unexpected key '" + key + "'");
    for (const char* key : {"name", "irrep", "detail"})
      if (!e.contains(key) || !e[key].is_string()) errors.push_back(where + ": '" + key + "' must be a string");
    if (!e.contains("status") || !e["status"].is_string()) {
      errors.push_back(where + ": 'status' must be a string");
    } else {
      const auto s = e["status"].get<std::string>();
      if (s != "pass" && s != "fail" && s != "measured" && s != "skipped")
        errors.push_back(where + ": unknown status '" + s + "'");
    }
    if (!e.contains("runtime_ms") || !e["runtime_ms"].is_number() || e["runtime_ms"].get<double>() < 0)
      errors.push_back(where + ": 'runtime_ms' must be a non-negative number");
  }
  return errors;
}

Report report_from_json(const json& j) {
  const auto errors = report_schema_errors(j);
  if (!errors.empty()) {
    std::string msg = "report does not match the schema:";
    for (const auto& e : errors) msg += " " + e + ";";
    throw ParseError(msg);
  }
  Report r{j["tool_version"].get<std::string>(), j["group"].get<std::string>(), {}};
  for (const auto& e : j["checks"])
    r.checks.push_back({e["name"].get<std::string>(), e["irrep"].get<std::string>(),
                        parse_status(e["status"].get<std::string>()), e["detail"].get<std::string>(),
                        e["runtime_ms"].get<double>()});
  return r;
}

}  // namespace capelli::cli
