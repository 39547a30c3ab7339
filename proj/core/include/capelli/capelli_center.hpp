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
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "capelli/group_algebra.hpp"
#include "capelli/irrep.hpp"
#include "capelli/linalg.hpp"
#include "capelli/nc_linalg.hpp"
#include "capelli/report.hpp"

namespace capelli {

using CapelliPoly = ZPoly<AlgebraElement>;

/// C̄^φ(z) = coldet(E^φ + α♮_m - zI_m), a z-polynomial with group-algebra
/// coefficients.
struct CapelliElement {
  std::string irrep;
  CapelliPoly poly;
};

/// u_i(z) = α(m - i) - z for 1 ≤ i ≤ m. Throws IndexRange.
ZPoly<Rational> u_factor(const Irrep& irrep, std::size_t i);

/// u^(i)(z) = u_m(z) u_{m-1}(z) ··· u_{m-i+1}(z) for 0 ≤ i ≤ m.
ZPoly<Rational> u_product(const Irrep& irrep, std::size_t i);

CapelliElement capelli_element(const Irrep& irrep, std::size_t limit = kDefaultDeterminantLimit);

/// Σ_{T ⊆ [m]} (-α)^{|T|-1} E_{tt} Π_{s ∉ T} u_s(z), t = max T, with the
/// empty subset contributing u^(m)(z)·e.
CapelliElement capelli_via_subsets(const Irrep& irrep);

/// C̄^φ(z) = u^(m)(z)·e + χ_φ·u^(m-1)(z).
CheckResult verify_theorem_415(const Irrep& irrep);

/// Central z-coefficients and [E^ψ_kl, C̄^φ(z)] = 0 for every ψ in `set`.
CheckResult verify_centrality(const Irrep& irrep, const IrrepSet& set);

/// All m×m permutation matrices followed by the transvection I + e_12.
std::vector<ScalarMatrix> conjugation_family(std::size_t m, int conductor);

/// coldet(P E^φ P⁻¹ + α♮_m - zI) = C̄^φ(z). Throws SingularMatrix.
CheckResult verify_conjugation_invariance(const Irrep& irrep, const ScalarMatrix& p);
/// The above over conjugation_family, stopping at the first failure.
CheckResult verify_conjugation_invariance(const Irrep& irrep);

/// Returns k (default -1) when u^(m-1)(k) ≠ 0; throws BadK otherwise.
Rational choose_k(const Irrep& irrep, const std::optional<Rational>& k = std::nullopt);

struct BasisResult {
  std::vector<std::string> labels;
  std::vector<AlgebraElement> elements;
  std::size_t rank = 0;
  CheckResult report;
};

/// {C̄^φ(k_φ)}; irreps absent from `k` use the default.
BasisResult center_basis(const IrrepSet& set, const std::map<std::string, Rational>& k = {});

/// {Σ_g χ_φ(g) g}.
BasisResult character_basis(const IrrepSet& set);

/// Outcome of the row and double determinant comparisons for one irrep.
struct DetVariantResult {
  bool rowdet_equal = false;
  /// Per σ (0-based images): the candidate shifts c ∈ {1, α}, without
  /// duplicates, for which Det(E^φ + α♮_σ - (z + c)I) = C̄^φ(z).
  std::vector<std::pair<std::vector<std::size_t>, std::vector<Rational>>> shifts;
  /// A shift that works for every σ, if one exists.
  std::optional<Rational> consistent_shift;
  CheckResult report;
};

/// Compares rowdet(E^φ + α♮* - zI) and the double determinants for every
/// σ in `sigmas` (all of S_m when empty) against C̄^φ(z).
DetVariantResult verify_det_variants(const Irrep& irrep, std::vector<std::vector<std::size_t>> sigmas = {});

/// Groups terms by element: "(z^2 - 5z)e + z(123) + z(132)".
std::string to_string(const CapelliPoly& poly);

/// Scalar z-polynomial, highest power first: "z^2 - 3z".
std::string to_string(const ZPoly<Rational>& poly);

/// "id", "(12)", "(123)" for 0-based permutation images.
std::string permutation_label(const std::vector<std::size_t>& sigma);

}  // namespace capelli
