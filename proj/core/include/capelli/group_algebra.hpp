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
#include <vector>

#include "capelli/cyclo.hpp"
#include "capelli/group.hpp"

namespace capelli {

class Irrep;

/// Element Σ_g x_g g of the group algebra over Q(ζ_N), N = exponent(G),
/// stored densely by element index.
class AlgebraElement {
 public:
  /// The zero element of the algebra of `group`.
  explicit AlgebraElement(GroupPtr group);
  /// Coefficients with conductor dividing exponent(G) are promoted.
  AlgebraElement(GroupPtr group, std::vector<Cyclo> coeffs);

  static AlgebraElement basis(GroupPtr group, ElementIndex g);
  static AlgebraElement identity(GroupPtr group);

  const GroupPtr& group() const noexcept { return group_; }
  int conductor() const noexcept { return group_->exponent(); }
  const std::vector<Cyclo>& coeffs() const noexcept { return coeffs_; }
  const Cyclo& coeff(ElementIndex g) const { return coeffs_.at(g); }
  void set_coeff(ElementIndex g, Cyclo c);

  bool is_zero() const noexcept;
  AlgebraElement zero_like() const { return AlgebraElement(group_); }
  AlgebraElement one_like() const { return identity(group_); }

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  AlgebraElement operator-() const;
  /// Convolution product.
  friend AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b);
  friend AlgebraElement operator*(const AlgebraElement& a, const Rational& q);
  friend AlgebraElement operator*(const AlgebraElement& a, const Cyclo& c);
  friend AlgebraElement operator*(const Cyclo& c, const AlgebraElement& a) { return a * c; }
  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b);
  friend bool operator!=(const AlgebraElement& a, const AlgebraElement& b) { return !(a == b); }

 private:
  void require_same_group(const AlgebraElement& other) const;

  GroupPtr group_;
  std::vector<Cyclo> coeffs_;
};

/// Coefficient of k is Σ_{g·h=k} a_g b_h. Throws GroupMismatch.
AlgebraElement convolve(const AlgebraElement& a, const AlgebraElement& b);

/// True iff a commutes with every group element.
bool is_central(const AlgebraElement& a);
/// A group element g with g·a != a·g, if any.
std::optional<ElementIndex> non_central_witness(const AlgebraElement& a);

/// Sum of the basis elements of `cls`; throws NotAClass unless cls is
/// exactly one conjugacy class of G.
AlgebraElement class_sum(const GroupPtr& group, const std::vector<ElementIndex>& cls);

/// Coordinates over the class sums in G's class order. Throws NotCentral
/// when coefficients differ inside a class.
std::vector<Cyclo> coordinates_in_class_sums(const AlgebraElement& a);

/// Σ_g Tr(φ(g)) g.
AlgebraElement character_element(const Irrep& irrep);

/// Human readable form using the group's element names, e.g.
/// "6e - (123) - (132)". Names that start with a sign or digit are
/// bracketed.
std::string to_string(const AlgebraElement& a);

/// Joins "coefficient·name" terms, skipping zero coefficients: integers glue
/// to the name ("6e"), fractions and irrational scalars are parenthesised
/// ("(1/2)e", "(1 + ζ3)e"). An empty name stands for the scalar itself.
/// Returns "0" when every coefficient vanishes.
std::string render_combination(const std::vector<std::pair<Cyclo, std::string>>& terms);

/// Wraps element names that start with a sign or digit in brackets.
std::string display_name(const std::string& name);

}  // namespace capelli
