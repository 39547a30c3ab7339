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

#include <filesystem>
#include <vector>

#include <nlohmann/json.hpp>

#include "capelli/cyclo.hpp"
#include "capelli/group.hpp"
#include "capelli/group_algebra.hpp"
#include "capelli/irrep.hpp"

namespace capelli {

using nlohmann::json;

/// {"conductor": N, "coeffs": ["p/q", ...]} with deg Φ_N entries.
json cyclo_to_json(const Cyclo& c);
/// Throws ParseError.
Cyclo cyclo_from_json(const json& j);

/// {"name", "order", "elements": [...], "table": [[...]]}.
json group_to_json(const Group& g);
/// Throws ParseError on shape errors and NotAGroup from table validation.
GroupPtr group_from_json(const json& j);

/// {"label", "group", "degree", "conductor", "matrices": [[[Cyclo]]]}.
json irrep_to_json(const Irrep& irrep);
/// Parses and validates against `group`. Every problem, including malformed
/// JSON, throws InvalidIrrep.
Irrep irrep_from_json(const json& j, const GroupPtr& group);

/// Element name ↦ Cyclo, zero coefficients omitted.
json algebra_to_json(const AlgebraElement& a);
/// Throws ParseError; unknown element names throw UnknownName.
AlgebraElement algebra_from_json(const json& j, const GroupPtr& group);

/// Reads a group file. Throws ParseError when unreadable or malformed.
GroupPtr load_group_file(const std::filesystem::path& path);
/// Reads one irrep object or an array of them. Throws InvalidIrrep.
std::vector<Irrep> load_irrep_file(const std::filesystem::path& path, const GroupPtr& group);

}  // namespace capelli
