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

#include "capelli/catalog.hpp"

#include <map>

#include "capelli/errors.hpp"

namespace capelli {

namespace {

CatalogGroup from_generators(const std::string& name, std::size_t degree,
                             const std::vector<std::string>& cycles) {
  std::vector<Permutation> gens;
  for (const auto& c : cycles) gens.push_back(parse_cycles(c, degree));
  // Fixed bound: the catalog must not depend on the user's order limit.
  PermutationGroup pg = build_group_from_permutations(name, degree, gens, 1000);
  CatalogGroup out;
  out.group = pg.group;
  out.permutations = std::move(pg);
  return out;
}

CatalogGroup cyclic(std::size_t n) {
  std::vector<std::string> gens;
  if (n > 1) {
    std::string c = "(";
    for (std::size_t k = 1; k <= n; ++k) c += std::to_string(k);
    gens.push_back(c + ")");
  }
  return from_generators("C" + std::to_string(n), n, gens);
}

// Quaternion units multiply as 1, i, j, k with i² = j² = k² = ijk = -1.
CatalogGroup quaternion() {
  struct Signed {
    int unit;
    bool negative;
  };
  const Signed unit_table[4][4] = {
      {{0, false}, {1, false}, {2, false}, {3, false}},
      {{1, false}, {0, true}, {3, false}, {2, true}},
      {{2, false}, {3, true}, {0, true}, {1, false}},
      {{3, false}, {2, false}, {1, true}, {0, true}},
  };
  const char* unit_names[4] = {"1", "i", "j", "k"};
  std::vector<std::string> names;
  CayleyTable table(8, std::vector<ElementIndex>(8));
  for (ElementIndex a = 0; a < 8; ++a) {
    names.push_back(std::string(a % 2 ? "-" : "") + unit_names[a / 2]);
    for (ElementIndex b = 0; b < 8; ++b) {
      const Signed s = unit_table[a / 2][b / 2];
      const bool negative = (s.negative != (a % 2 == 1)) != (b % 2 == 1);
      table[a][b] = 2 * static_cast<ElementIndex>(s.unit) + (negative ? 1 : 0);
    }
  }
  CatalogGroup out;
  out.group = build_group_from_table("Q8", std::move(names), std::move(table));
  return out;
}

const std::map<std::string, CatalogGroup, std::less<>>& registry() {
  static const auto groups = [] {
    std::map<std::string, CatalogGroup, std::less<>> m;
    for (std::size_t n = 1; n <= 8; ++n) m.emplace("C" + std::to_string(n), cyclic(n));
    m.emplace("V4", from_generators("V4", 4, {"(12)", "(34)"}));
    m.emplace("S3", from_generators("S3", 3, {"(12)", "(123)"}));
    m.emplace("D4", from_generators("D4", 4, {"(1234)", "(13)"}));
    m.emplace("Q8", quaternion());
    m.emplace("A4", from_generators("A4", 4, {"(123)", "(12)(34)"}));
    m.emplace("S4", from_generators("S4", 4, {"(12)", "(1234)"}));
    return m;
  }();
  return groups;
}

}  // namespace

const std::vector<std::string>& catalog_names() {
  static const std::vector<std::string> names{"C1", "C2", "C3", "C4", "C5", "C6", "C7",
                                              "C8", "V4", "S3", "D4", "Q8", "A4", "S4"};
  return names;
}

const CatalogGroup& catalog_group(std::string_view name) {
  const auto& groups = registry();
  auto it = groups.find(name);
  if (it == groups.end()) throw UnknownName("no catalog group named '" + std::string(name) + "'");
  return it->second;
}

}  // namespace capelli
