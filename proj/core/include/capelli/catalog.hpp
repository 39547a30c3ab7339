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

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "capelli/group.hpp"

namespace capelli {

/// A built-in group. Permutation groups keep their permutations so the
/// irrep catalog can act on points; Q8 is table-only.
struct CatalogGroup {
  GroupPtr group;
  std::optional<PermutationGroup> permutations;
};

/// C1..C8, V4, S3, D4, Q8, A4, S4 in that order.
const std::vector<std::string>& catalog_names();

/// Built once and shared, so repeated lookups return the same GroupPtr.
/// Throws UnknownName.
const CatalogGroup& catalog_group(std::string_view name);

/// Q8 element indices: 2*unit + (negative ? 1 : 0) with units 1, i, j, k,
/// i.e. order 1, -1, i, -i, j, -j, k, -k.
enum class QuaternionUnit { One = 0, I = 1, J = 2, K = 3 };
constexpr ElementIndex quaternion_index(QuaternionUnit unit, bool negative) {
  return 2 * static_cast<ElementIndex>(unit) + (negative ? 1 : 0);
}

}  // namespace capelli
