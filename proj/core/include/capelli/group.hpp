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

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace capelli {

/// Elements are addressed by dense indices 0..|G|-1.
using ElementIndex = std::size_t;
using CayleyTable = std::vector<std::vector<ElementIndex>>;

/// Conjugacy classes, ordered by their smallest element index (so the
/// identity class comes first whenever the identity is element 0).
struct ClassPartition {
  std::vector<std::vector<ElementIndex>> classes;
  /// class_of[g] is the position of g's class in `classes`.
  std::vector<std::size_t> class_of;

  std::size_t size() const noexcept { return classes.size(); }
};

/// A validated finite group given by its multiplication table
/// (row g, column h holds g·h). Immutable once built.
class Group {
 public:
  const std::string& name() const noexcept { return name_; }
  std::size_t order() const noexcept { return names_.size(); }
  const std::vector<std::string>& element_names() const noexcept { return names_; }
  const std::string& element_name(ElementIndex g) const { return names_.at(g); }
  const CayleyTable& table() const noexcept { return table_; }
  ElementIndex mul(ElementIndex g, ElementIndex h) const { return table_[g][h]; }
  ElementIndex identity() const noexcept { return identity_; }
  ElementIndex inverse(ElementIndex g) const { return inverses_[g]; }
  const std::vector<ElementIndex>& inverses() const noexcept { return inverses_; }
  std::optional<ElementIndex> find(std::string_view element_name) const;

  /// Cached results of conjugacy_classes() and exponent().
  const ClassPartition& classes() const noexcept { return classes_; }
  int exponent() const noexcept { return exponent_; }

 private:
  friend std::shared_ptr<const Group> build_group_from_table(std::string, std::vector<std::string>,
                                                             CayleyTable);
  Group() = default;

  std::string name_;
  std::vector<std::string> names_;
  CayleyTable table_;
  ElementIndex identity_ = 0;
  std::vector<ElementIndex> inverses_;
  ClassPartition classes_;
  int exponent_ = 1;
};

using GroupPtr = std::shared_ptr<const Group>;

/// Validates the table (shape, Latin square, identity, inverses, full
/// associativity scan) and throws NotAGroup with a witness on failure.
GroupPtr build_group_from_table(std::string name, std::vector<std::string> element_names,
                                CayleyTable table);

ClassPartition conjugacy_classes(const Group& group);

/// Least common multiple of the element orders.
int exponent(const Group& group);

std::size_t element_order(const Group& group, ElementIndex g);

// ---------------------------------------------------------------------------
// Permutation groups

/// Images of the points 0..degree-1.
using Permutation = std::vector<std::size_t>;

Permutation identity_permutation(std::size_t degree);
/// (f∘g)(x) = f(g(x)).
Permutation compose(const Permutation& f, const Permutation& g);
Permutation invert(const Permutation& p);
int permutation_sign(const Permutation& p);

/// Parses 1-based cycle notation such as "(1 2 3)(4 5)", "(1,2)" or, for
/// degree below 10, the compact "(123)(45)". "()" and "e" are the identity.
Permutation parse_cycles(std::string_view text, std::size_t degree);
/// 1-based cycle notation; compact when every point is a single digit, "e"
/// for the identity.
std::string cycle_notation(const Permutation& p);

/// The limit from CAPELLI_LAB_MAX_ORDER, or 10000 when unset.
std::size_t default_order_limit();

struct PermutationGroup {
  GroupPtr group;
  std::size_t degree = 0;
  /// elements[g] is the permutation of element index g.
  std::vector<Permutation> elements;
};

/// Breadth-first closure of the generators (identity first, then in
/// discovery order); table[g][h] is the index of elements[g]∘elements[h].
/// Throws ClosureTooLarge past order_limit.
PermutationGroup build_group_from_permutations(std::string name, std::size_t degree,
                                               const std::vector<Permutation>& generators,
                                               std::optional<std::size_t> order_limit = std::nullopt);

}  // namespace capelli
