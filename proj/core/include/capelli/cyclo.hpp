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
#include <span>
#include <string>
#include <vector>

#include "capelli/rational.hpp"

namespace capelli {

/// Dense integer polynomial, coefficient of x^i at index i.
using IntPoly = std::vector<long>;

/// The N-th cyclotomic polynomial, obtained by dividing x^N - 1 by Φ_d for
/// every proper divisor d of N.
IntPoly cyclotomic_polynomial(int n);

/// Euler's totient, i.e. deg Φ_N.
int euler_phi(int n);

/// Shared per-conductor data: Φ_N and the reductions of x^k mod Φ_N for
/// 0 <= k < 2N. Instances live for the whole program.
class CycloField {
 public:
  static const CycloField& of(int conductor);

  int conductor() const noexcept { return conductor_; }
  std::size_t degree() const noexcept { return degree_; }
  const IntPoly& modulus() const noexcept { return modulus_; }
  /// x^k reduced mod Φ_N, as a length-degree() vector; k < 2N.
  const IntPoly& power(std::size_t k) const { return powers_.at(k); }

 private:
  explicit CycloField(int conductor);

  int conductor_;
  std::size_t degree_;
  IntPoly modulus_;
  std::vector<IntPoly> powers_;
};

/// An element of Q(ζ_N), stored as its unique representative of degree
/// < deg Φ_N in the power basis 1, ζ, ..., ζ^{deg-1}. Equality is
/// coefficient-wise.
class Cyclo {
 public:
  /// Zero of Q (conductor 1).
  Cyclo();
  /// Zero of Q(ζ_N).
  explicit Cyclo(int conductor);
  Cyclo(int conductor, const Rational& value);
  Cyclo(int conductor, long value) : Cyclo(conductor, Rational(value)) {}

  /// ζ_N^k for any integer k.
  static Cyclo zeta(int conductor, long k);
  /// Builds from exactly deg Φ_N coefficients; throws ParseError otherwise.
  static Cyclo from_coeffs(int conductor, std::vector<Rational> coeffs);

  int conductor() const noexcept { return field_->conductor(); }
  std::span<const Rational> coeffs() const noexcept { return coeffs_; }

  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  /// True if the element lies in Q.
  bool is_rational() const noexcept;
  /// The rational value; only meaningful when is_rational().
  const Rational& rational_part() const noexcept { return coeffs_[0]; }

  Cyclo zero_like() const { return Cyclo(conductor()); }
  Cyclo one_like() const { return Cyclo(conductor(), 1L); }

  Cyclo& operator+=(const Cyclo& other);
  Cyclo& operator-=(const Cyclo& other);
  Cyclo& operator*=(const Rational& q);

  friend Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
  friend Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }
  friend Cyclo operator*(const Cyclo& a, const Cyclo& b);
  friend Cyclo operator*(Cyclo a, const Rational& q) { return a *= q; }
  friend Cyclo operator*(const Rational& q, Cyclo a) { return a *= q; }
  Cyclo operator-() const;

  friend bool operator==(const Cyclo& a, const Cyclo& b);
  friend bool operator!=(const Cyclo& a, const Cyclo& b) { return !(a == b); }

  /// Multiplicative inverse by the extended Euclidean algorithm against Φ_N.
  Cyclo inverse() const;
  /// Complex conjugation ζ_N -> ζ_N^{N-1}.
  Cyclo conjugate() const;
  /// The same field element re-expressed with conductor M (N must divide M).
  Cyclo promote(int target_conductor) const;

  /// Text in ζ power notation, e.g. "1 - 2*ζ6 + 1/3*ζ6^2".
  std::string to_string() const;

 private:
  Cyclo(const CycloField* field, std::vector<Rational> coeffs)
      : field_(field), coeffs_(std::move(coeffs)) {}
  void require_same_field(const Cyclo& other) const;

  const CycloField* field_;
  std::vector<Rational> coeffs_;
};

inline Cyclo operator*(const Cyclo& a, long q) { return a * Rational(q); }

}  // namespace capelli
