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

#pragma once

#include <string>
#include <vector>

#include <capelli/report.hpp>
#include <capelli/serialize.hpp>

namespace capelli::cli {

struct ReportEntry {
  std::string name;
  std::string irrep;
  Status status = Status::Pass;
  std::string detail;
  double runtime_ms = 0;

  friend bool operator==(const ReportEntry&, const ReportEntry&) = default;
};

struct Report {
  std::string tool_version;
  std::string group;
  std::vector<ReportEntry> checks;

  bool any_failed() const;
  /// Orders entries by group, irrep, then check name.
  void sort();

  friend bool operator==(const Report&, const Report&) = default;
};

const std::string& tool_version();

json report_to_json(const Report& report);

/// Problems with the report shape; empty when the document conforms.
std::vector<std::string> report_schema_errors(const json& j);

/// Throws ParseError listing the schema errors.
Report report_from_json(const json& j);

}  // namespace capelli::cli
