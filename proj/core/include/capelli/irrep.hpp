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
#include <string_view>
#include <vector>

#include "capelli/group.hpp"
#include "capelli/group_algebra.hpp"
#include "capelli/linalg.hpp"
#include "capelli/nc_linalg.hpp"
#include "capelli/report.hpp"

namespace capelli {

/// A matrix representation g ↦ φ(g) with entries in Q(ζ_N), N = exponent(G).
/// Construction only checks shapes; use validate() for the algebra.
class Irrep {
 public:
  /// One m×m matrix per element index. Matrices whose conductor divides
  /// exponent(G) are promoted; anything else throws InvalidIrrep.
  Irrep(std::string label, GroupPtr group, std::vector<ScalarMatrix> matrices);

  const std::string& label() const noexcept { return label_; }
  const GroupPtr& group() const noexcept { return group_; }
  std::size_t degree() const noexcept { return degree_; }
  int conductor() const noexcept { return group_->exponent(); }
  const ScalarMatrix& matrix(ElementIndex g) const { return matrices_.at(g); }
  const std::vector<ScalarMatrix>& matrices() const noexcept { return matrices_; }
  Cyclo character(ElementIndex g) const { return matrices_.at(g).trace(); }

  /// |G| / deg φ, exact.
  Rational alpha() const;

 private:
  std::string label_;
  GroupPtr group_;
  std::size_t degree_;
  std::vector<ScalarMatrix> matrices_;
};

/// Each entry names a failed check and carries a witness.
struct ValidationReport {
  std::vector<std::string> failures;

  bool ok() const noexcept { return failures.empty(); }
  std::string summary() const;
};

/// Checks φ(e) = I, φ(g)φ(h) = φ(gh), unitarity φ(g)φ(g)* = I and
/// ⟨χ, χ⟩ = 1. Reports the first witness of each failed check.
ValidationReport validate(const Irrep& irrep);

/// Same character, which for irreducibles means equivalent.
bool equivalent(const Irrep& a, const Irrep& b);

/// (1/|G|) Σ_g χ_a(g) conj(χ_b(g)).
Cyclo character_inner_product(const Irrep& a, const Irrep& b);

struct IrrepSet {
  GroupPtr group;
  std::vector<Irrep> irreps;

  /// Throws UnknownName.
  const Irrep& find(std::string_view label) const;
};

/// Σ deg² = |G| and pairwise orthogonal characters.
ValidationReport validate_complete(const IrrepSet& set);

/// E^φ with (i, j) entry Σ_g φ(g)_ij g.
RingMatrix<AlgebraElement> E_matrix(const Irrep& irrep);

/// E^φ_ij E^φ_kl = α δ_jk E^φ_il, E^φ_ij E^ψ_st = 0 for ψ ≠ φ, and the
/// commutator relations
///   [E^φ_ij, E^φ_kl] = α (δ_jk E^φ_il - δ_il E^φ_kj),  [E^φ_ij, E^ψ_kl] = 0.
CheckResult verify_schur_products(const IrrepSet& set);

/// The group-basis coordinates of all E^φ_ij have exact rank |G|.
CheckResult verify_E_basis(const IrrepSet& set);

}  // namespace capelli
