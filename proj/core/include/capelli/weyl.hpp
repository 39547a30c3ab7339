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

#include <cstdint>
#include <cstring>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "capelli/cyclo.hpp"
#include "capelli/irrep.hpp"
#include "capelli/nc_linalg.hpp"
#include "capelli/report.hpp"

namespace capelli {

/// Variables x_v, ∂_v (v = 0..n-1) with [∂_v, x_w] = α δ_vw, all other
/// pairs commuting. Coefficients live in Q(ζ_N).
class WeylContext {
 public:
  WeylContext(std::vector<std::string> names, Rational alpha, int conductor);

  /// Variables x_ij, 1 ≤ i,j ≤ m, row-major, named "11", "12", ...
  static std::shared_ptr<const WeylContext> matrix(std::size_t m, const Rational& alpha, int conductor = 1);
  /// One variable per group element, α = 1.
  static std::shared_ptr<const WeylContext> group(const Group& group, int conductor);

  std::size_t size() const noexcept { return names_.size(); }
  const Rational& alpha() const noexcept { return alpha_; }
  int conductor() const noexcept { return conductor_; }
  const std::string& name(std::size_t v) const { return names_.at(v); }

 private:
  std::vector<std::string> names_;
  Rational alpha_;
  int conductor_;
};

using WeylContextPtr = std::shared_ptr<const WeylContext>;

/// Exponents of x_0..x_{n-1} followed by those of ∂_0..∂_{n-1}, each < 256.
using WeylMonomial = std::vector<std::uint8_t>;

/// Lexicographic order on equal-length exponent vectors.
struct MonomialLess {
  bool operator()(const WeylMonomial& a, const WeylMonomial& b) const noexcept {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::memcmp(a.data(), b.data(), a.size()) < 0;
  }
};

using WeylTerms = std::map<WeylMonomial, Cyclo, MonomialLess>;

/// Normal-ordered operator Σ c · x^A ∂^B with no zero coefficients.
class WeylOp {
 public:
  explicit WeylOp(WeylContextPtr ctx);

  static WeylOp x(const WeylContextPtr& ctx, std::size_t v);
  static WeylOp d(const WeylContextPtr& ctx, std::size_t v);
  static WeylOp scalar(const WeylContextPtr& ctx, const Cyclo& c);

  const WeylContextPtr& context() const noexcept { return ctx_; }
  const WeylTerms& terms() const noexcept { return terms_; }
  /// Adds c · x^A ∂^B.
  void add_term(const WeylMonomial& mono, const Cyclo& c);

  bool is_zero() const noexcept { return terms_.empty(); }
  WeylOp zero_like() const { return WeylOp(ctx_); }
  WeylOp one_like() const;

  WeylOp& operator+=(const WeylOp& other);
  WeylOp& operator-=(const WeylOp& other);
  friend WeylOp operator+(WeylOp a, const WeylOp& b) { return a += b; }
  friend WeylOp operator-(WeylOp a, const WeylOp& b) { return a -= b; }
  WeylOp operator-() const;
  friend WeylOp operator*(const WeylOp& a, const WeylOp& b);
  friend WeylOp operator*(const WeylOp& a, const Rational& q);
  friend WeylOp operator*(const WeylOp& a, const Cyclo& c);
  friend WeylOp operator*(const Cyclo& c, const WeylOp& a) { return a * c; }
  friend bool operator==(const WeylOp& a, const WeylOp& b);
  friend bool operator!=(const WeylOp& a, const WeylOp& b) { return !(a == b); }

 private:
  void require_same_context(const WeylOp& other) const;

  WeylContextPtr ctx_;
  WeylTerms terms_;
};

/// Product in normal-ordered form. Throws ContextMismatch.
WeylOp weyl_mul(const WeylOp& a, const WeylOp& b);

/// Commutative polynomial in the x variables: exponent vector ↦ coefficient.
using WeylPolynomial = std::map<std::vector<unsigned>, Cyclo>;

/// op acting on p, with ∂_v acting as α ∂/∂x_v.
WeylPolynomial apply_to_polynomial(const WeylOp& op, const WeylPolynomial& p);

/// X, ∂ and Π = ᵗX ∂, with `alpha` the constant in [∂_ij, X_kl] = α δ_ik δ_jl.
struct WeylMatrices {
  WeylContextPtr ctx;
  std::string label;
  Rational alpha;
  /// True for build_generic, false for build_rep.
  bool generic;
  RingMatrix<WeylOp> X;
  RingMatrix<WeylOp> D;
  RingMatrix<WeylOp> Pi;

  std::size_t size() const noexcept { return X.size(); }
};

inline constexpr std::size_t kMaxGenericWeylSize = 3;
inline constexpr std::size_t kMaxRepWeylDegree = 2;
/// Upper bound on monomial products one verify_C_properties call may spend.
inline constexpr std::size_t kWeylProductBudget = 20'000'000;

/// Throws SizeLimit for m > 3.
WeylMatrices build_generic(std::size_t m, const Rational& alpha);

/// X^φ = Σ_g conj(φ(g)) x_g and ∂^φ = Σ_g φ(g) ∂_g over variables with α = 1;
/// the resulting constant is |G|/deg φ.
WeylMatrices build_rep(const Irrep& irrep);

/// [X_ij, X_kl] = 0, [∂_ij, ∂_kl] = 0 and [∂_ij, X_kl] = α δ_ik δ_jl.
CheckResult verify_rep_relations(const WeylMatrices& w);

/// [Π_ij, Π_kl] = α (δ_jk Π_il - δ_il Π_kj).
CheckResult verify_pi_relations(const WeylMatrices& w);

/// coldet(Π + α♮) = det X det ∂. Throws SizeLimit past the expansion budget.
CheckResult verify_capelli(const WeylMatrices& w);

/// C(z) = coldet(Π + α♮ - zI).
ZPoly<WeylOp> capelli_element_weyl(const WeylMatrices& w);

/// [Π_ij, C(z)] = 0 coefficientwise and coldet(PΠP⁻¹ + α♮ - zI) = C(z) over
/// the permutation and transvection family. Throws SizeLimit when the
/// commutator expansion would exceed kWeylProductBudget.
CheckResult verify_C_properties(const WeylMatrices& w);

/// For E with [E_ij, E_kl] = δ_jk E_il - δ_il E_kj: compares coldet(E + ♮ - z),
/// rowdet(E + ♮* - z) and Det(E + ♮_σ - (z + 1)) for every σ ∈ S_m.
CheckResult verify_theorem_M(const RingMatrix<WeylOp>& E, const std::string& label);
/// E = Π of the generic context with α = 1; m ≤ 2.
CheckResult verify_theorem_M(std::size_t m);
/// E = Π^φ / α; deg φ ≤ 2.
CheckResult verify_theorem_M(const Irrep& irrep);

/// Highest degree first, e.g. "x_11 ∂_11 + x_21 ∂_21".
std::string to_string(const WeylOp& op);
std::string to_string(const ZPoly<WeylOp>& poly);

}  // namespace capelli
