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

#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <capelli/irrep.hpp>

#include "capelli_cli/report_json.hpp"

namespace capelli::cli {

struct CheckContext {
  GroupPtr group;
  IrrepSet irreps;
  /// Evaluation point for basis-415; the default -1 when empty.
  std::optional<Rational> k;
};

/// A named verifier. Group-level checks run once with irrep "*"; the others
/// run once per irrep. A SizeLimit thrown by `run` is reported as skipped.
struct CheckSpec {
  std::string name;
  bool per_irrep;
  std::function<CheckResult(const CheckContext&, const Irrep*)> run;
};

const std::vector<CheckSpec>& check_registry();

/// Comma-separated names; "all" expands to the registry order. Throws
/// UnknownName before anything runs.
std::vector<std::string> parse_check_list(std::string_view list);

/// Runs the checks (optionally on one irrep) and returns a sorted report.
Report run_checks(const CheckContext& ctx, const std::vector<std::string>& names,
                  const std::optional<std::string>& irrep_label = std::nullopt);

}  // namespace capelli::cli
