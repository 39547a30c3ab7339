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

// Matrices and determinants over noncommutative unital rings that contain
// the rationals. Products are always formed strictly left to right in the
// order given by each determinant's definition.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <mutex>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "capelli/errors.hpp"
#include "capelli/rational.hpp"

namespace capelli {

/// How generic kernels obtain 0, 1 and zero tests from a sample element.
/// The default forwards to members; Rational is specialised below.
template <class R>
struct ring_traits {
  static R zero_like(const R& a) { return a.zero_like(); }
  static R one_like(const R& a) { return a.one_like(); }
  static bool is_zero(const R& a) { return a.is_zero(); }
};

template <>
struct ring_traits<Rational> {
  static Rational zero_like(const Rational&) { return Rational(0); }
  static Rational one_like(const Rational&) { return Rational(1); }
  static bool is_zero(const Rational& a) { return a == 0; }
};

/// Associative unital ring with commutative addition, exact equality and a
/// scalar action of Q.
template <class R>
concept Ring = std::copyable<R> && requires(const R& a, const R& b, const Rational& q) {
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { a * q } -> std::convertible_to<R>;
  { a == b } -> std::convertible_to<bool>;
  { ring_traits<R>::zero_like(a) } -> std::convertible_to<R>;
  { ring_traits<R>::one_like(a) } -> std::convertible_to<R>;
  { ring_traits<R>::is_zero(a) } -> std::convertible_to<bool>;
};

template <Ring R>
R commutator(const R& a, const R& b) {
  R ab = a * b;
  R ba = b * a;
  return R(ab - ba);
}

// ---------------------------------------------------------------------------

template <Ring R>
class RingMatrix {
 public:
  RingMatrix(std::size_t size, const R& fill) : size_(size), entries_(size * size, fill) {}

  static RingMatrix identity(std::size_t size, const R& sample) {
    RingMatrix m(size, ring_traits<R>::zero_like(sample));
    for (std::size_t i = 0; i < size; ++i) m(i, i) = ring_traits<R>::one_like(sample);
    return m;
  }

  static RingMatrix diagonal(std::span<const Rational> values, const R& sample) {
    RingMatrix m(values.size(), ring_traits<R>::zero_like(sample));
    const R one = ring_traits<R>::one_like(sample);
    for (std::size_t i = 0; i < values.size(); ++i) m(i, i) = R(one * values[i]);
    return m;
  }

  std::size_t size() const noexcept { return size_; }
  R& operator()(std::size_t i, std::size_t j) { return entries_[i * size_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }

  RingMatrix transpose() const {
    RingMatrix out = *this;
    for (std::size_t i = 0; i < size_; ++i)
      for (std::size_t j = 0; j < size_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  friend RingMatrix operator+(const RingMatrix& a, const RingMatrix& b) {
    RingMatrix out = a;
    for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] = R(a.entries_[k] + b.entries_[k]);
    return out;
  }

  friend RingMatrix operator-(const RingMatrix& a, const RingMatrix& b) {
    RingMatrix out = a;
    for (std::size_t k = 0; k < out.entries_.size(); ++k) out.entries_[k] = R(a.entries_[k] - b.entries_[k]);
    return out;
  }

  /// (AB)_ij = Σ_k A_ik B_kj with A-factors on the left.
  friend RingMatrix operator*(const RingMatrix& a, const RingMatrix& b) {
    if (a.size_ != b.size_) throw IndexRange("matrix size mismatch");
    RingMatrix out(a.size_, ring_traits<R>::zero_like(a.entries_.front()));
    for (std::size_t i = 0; i < a.size_; ++i)
      for (std::size_t j = 0; j < a.size_; ++j) {
        R acc = ring_traits<R>::zero_like(a(i, 0));
        for (std::size_t k = 0; k < a.size_; ++k) acc = R(acc + R(a(i, k) * b(k, j)));
        out(i, j) = std::move(acc);
      }
    return out;
  }

  friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
    if (a.size_ != b.size_) return false;
    for (std::size_t k = 0; k < a.entries_.size(); ++k)
      if (!(a.entries_[k] == b.entries_[k])) return false;
    return true;
  }

  template <class F>
  auto map(F f) const -> RingMatrix<std::decay_t<decltype(f(std::declval<const R&>()))>> {
    using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
    RingMatrix<S> out(size_, f(entries_.front()));
    for (std::size_t i = 0; i < size_; ++i)
      for (std::size_t j = 0; j < size_; ++j) out(i, j) = f((*this)(i, j));
    return out;
  }

 private:
  std::size_t size_;
  std::vector<R> entries_;
};

// ---------------------------------------------------------------------------
// Polynomials in a central variable z.

template <Ring R>
class ZPoly {
 public:
  /// The zero polynomial; `sample` only fixes the coefficient ring context.
  explicit ZPoly(const R& sample) : zero_(ring_traits<R>::zero_like(sample)) {}
  ZPoly(const R& sample, std::vector<R> coeffs)
      : zero_(ring_traits<R>::zero_like(sample)), coeffs_(std::move(coeffs)) {
    trim();
  }

  static ZPoly constant(const R& c) { return ZPoly(c, {c}); }
  /// The polynomial z.
  static ZPoly variable(const R& sample) {
    return ZPoly(sample, {ring_traits<R>::zero_like(sample), ring_traits<R>::one_like(sample)});
  }

  const std::vector<R>& coefficients() const noexcept { return coeffs_; }
  /// -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const R& coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : zero_; }
  const R& zero_coefficient() const noexcept { return zero_; }

  R evaluate(const Rational& z) const {
    R acc = zero_;
    for (std::size_t k = coeffs_.size(); k-- > 0;) acc = R(R(acc * z) + coeffs_[k]);
    return acc;
  }

  bool is_zero() const noexcept { return coeffs_.empty(); }
  ZPoly zero_like() const { return ZPoly(zero_); }
  ZPoly one_like() const { return constant(ring_traits<R>::one_like(zero_)); }

  friend ZPoly operator+(const ZPoly& a, const ZPoly& b) {
    std::vector<R> out(std::max(a.coeffs_.size(), b.coeffs_.size()), a.zero_);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = R(a.coeff(k) + b.coeff(k));
    return ZPoly(a.zero_, std::move(out));
  }

  friend ZPoly operator-(const ZPoly& a, const ZPoly& b) {
    std::vector<R> out(std::max(a.coeffs_.size(), b.coeffs_.size()), a.zero_);
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = R(a.coeff(k) - b.coeff(k));
    return ZPoly(a.zero_, std::move(out));
  }

  ZPoly operator-() const {
    std::vector<R> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) out.push_back(R(-c));
    return ZPoly(zero_, std::move(out));
  }

  /// z is central, so (Σ a_i z^i)(Σ b_j z^j) = Σ a_i b_j z^{i+j}.
  friend ZPoly operator*(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero() || b.is_zero()) return ZPoly(a.zero_);
    std::vector<R> out(a.coeffs_.size() + b.coeffs_.size() - 1, a.zero_);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (ring_traits<R>::is_zero(a.coeffs_[i])) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        if (ring_traits<R>::is_zero(b.coeffs_[j])) continue;
        out[i + j] = R(out[i + j] + R(a.coeffs_[i] * b.coeffs_[j]));
      }
    }
    return ZPoly(a.zero_, std::move(out));
  }

  friend ZPoly operator*(const ZPoly& a, const Rational& q) {
    std::vector<R> out;
    out.reserve(a.coeffs_.size());
    for (const auto& c : a.coeffs_) out.push_back(R(c * q));
    return ZPoly(a.zero_, std::move(out));
  }

  friend bool operator==(const ZPoly& a, const ZPoly& b) {
    if (a.coeffs_.size() != b.coeffs_.size()) return false;
    for (std::size_t k = 0; k < a.coeffs_.size(); ++k)
      if (!(a.coeffs_[k] == b.coeffs_[k])) return false;
    return true;
  }

  template <class F>
  auto map(F f) const -> ZPoly<std::decay_t<decltype(f(std::declval<const R&>()))>> {
    using S = std::decay_t<decltype(f(std::declval<const R&>()))>;
    std::vector<S> out;
    for (const auto& c : coeffs_) out.push_back(f(c));
    return ZPoly<S>(f(zero_), std::move(out));
  }

 private:
  void trim() {
    while (!coeffs_.empty() && ring_traits<R>::is_zero(coeffs_.back())) coeffs_.pop_back();
  }

  R zero_;
  std::vector<R> coeffs_;
};

/// Embeds a scalar polynomial into ZPoly<R> via q ↦ q·1_R.
template <Ring R>
ZPoly<R> lift(const ZPoly<Rational>& p, const R& sample) {
  const R one = ring_traits<R>::one_like(sample);
  std::vector<R> out;
  for (const auto& c : p.coefficients()) out.push_back(R(one * c));
  return ZPoly<R>(sample, std::move(out));
}

/// Multiplies every coefficient by the ring element r on the right.
template <Ring R>
ZPoly<R> times_right(const ZPoly<R>& p, const R& r) {
  std::vector<R> out;
  for (const auto& c : p.coefficients()) out.push_back(R(c * r));
  return ZPoly<R>(r, std::move(out));
}

// ---------------------------------------------------------------------------
// Permutations of 0..m-1 with their signs.

struct SignedPermutation {
  std::vector<std::size_t> images;
  int sign;
};

inline constexpr std::size_t kMaxEnumeratedDegree = 8;
inline constexpr std::size_t kDefaultDeterminantLimit = 6;

/// All m! permutations in lexicographic order, cached.
inline const std::vector<SignedPermutation>& signed_permutations(std::size_t m) {
  if (m > kMaxEnumeratedDegree) throw SizeLimit("permutation enumeration limited to degree 8");
  static std::mutex mutex;
  static std::vector<std::vector<SignedPermutation>> cache(kMaxEnumeratedDegree + 1);
  std::lock_guard lock(mutex);
  auto& perms = cache[m];
  if (perms.empty()) {
    std::vector<std::size_t> p(m);
    std::iota(p.begin(), p.end(), std::size_t{0});
    do {
      int inversions = 0;
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = i + 1; j < m; ++j)
          if (p[i] > p[j]) ++inversions;
      perms.push_back({p, inversions % 2 ? -1 : 1});
    } while (std::next_permutation(p.begin(), p.end()));
  }
  return perms;
}

namespace detail {

inline void check_size(std::size_t m, std::size_t limit) {
  if (m == 0) throw IndexRange("determinant of an empty matrix");
  if (m > limit)
    throw SizeLimit("determinant of size " + std::to_string(m) + " exceeds limit " + std::to_string(limit));
}

}  // namespace detail

/// Column determinant Σ_σ sgn(σ) a_{σ(1)1} a_{σ(2)2} ··· a_{σ(m)m}.
template <Ring R>
R coldet(const RingMatrix<R>& a, std::size_t limit = kDefaultDeterminantLimit) {
  const std::size_t m = a.size();
  detail::check_size(m, limit);
  R sum = ring_traits<R>::zero_like(a(0, 0));
  for (const auto& sp : signed_permutations(m)) {
    R prod = a(sp.images[0], 0);
    for (std::size_t c = 1; c < m && !ring_traits<R>::is_zero(prod); ++c) prod = R(prod * a(sp.images[c], c));
    if (ring_traits<R>::is_zero(prod)) continue;
    sum = sp.sign > 0 ? R(sum + prod) : R(sum - prod);
  }
  return sum;
}

/// Row determinant Σ_σ sgn(σ) a_{1σ(1)} a_{2σ(2)} ··· a_{mσ(m)}.
template <Ring R>
R rowdet(const RingMatrix<R>& a, std::size_t limit = kDefaultDeterminantLimit) {
  const std::size_t m = a.size();
  detail::check_size(m, limit);
  R sum = ring_traits<R>::zero_like(a(0, 0));
  for (const auto& sp : signed_permutations(m)) {
    R prod = a(0, sp.images[0]);
    for (std::size_t r = 1; r < m && !ring_traits<R>::is_zero(prod); ++r) prod = R(prod * a(r, sp.images[r]));
    if (ring_traits<R>::is_zero(prod)) continue;
    sum = sp.sign > 0 ? R(sum + prod) : R(sum - prod);
  }
  return sum;
}

/// Double determinant (1/m!) Σ_{σ,τ} sgn(στ) a_{σ(1)τ(1)} ··· a_{σ(m)τ(m)}.
template <Ring R>
R doubledet(const RingMatrix<R>& a, std::size_t limit = kDefaultDeterminantLimit) {
  const std::size_t m = a.size();
  detail::check_size(m, limit);
  const auto& perms = signed_permutations(m);
  R sum = ring_traits<R>::zero_like(a(0, 0));
  for (const auto& s : perms)
    for (const auto& t : perms) {
      R prod = a(s.images[0], t.images[0]);
      for (std::size_t k = 1; k < m && !ring_traits<R>::is_zero(prod); ++k)
        prod = R(prod * a(s.images[k], t.images[k]));
      if (ring_traits<R>::is_zero(prod)) continue;
      sum = s.sign * t.sign > 0 ? R(sum + prod) : R(sum - prod);
    }
  Rational factorial = 1;
  for (std::size_t k = 2; k <= m; ++k) factorial *= static_cast<long>(k);
  return R(sum * Rational(1 / factorial));
}

// ---------------------------------------------------------------------------
// Diagonal shift matrices.

/// diag(m-1, m-2, ..., 0).
inline std::vector<Rational> natural_shift_values(std::size_t m) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < m; ++i) v.emplace_back(static_cast<long>(m - 1 - i));
  return v;
}

/// diag(0, 1, ..., m-1).
inline std::vector<Rational> natural_star_values(std::size_t m) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < m; ++i) v.emplace_back(static_cast<long>(i));
  return v;
}

/// diag(σ(m), σ(m-1), ..., σ(1)) for a 0-based permutation σ, with 1-based
/// values on the diagonal.
inline std::vector<Rational> natural_sigma_values(const std::vector<std::size_t>& sigma) {
  const std::size_t m = sigma.size();
  std::vector<Rational> v;
  for (std::size_t i = 0; i < m; ++i) v.emplace_back(static_cast<long>(sigma[m - 1 - i] + 1));
  return v;
}

template <Ring R>
RingMatrix<R> natural_shift(std::size_t m, const R& sample) {
  const auto v = natural_shift_values(m);
  return RingMatrix<R>::diagonal(v, sample);
}

template <Ring R>
RingMatrix<R> natural_star(std::size_t m, const R& sample) {
  const auto v = natural_star_values(m);
  return RingMatrix<R>::diagonal(v, sample);
}

template <Ring R>
RingMatrix<R> natural_sigma(const std::vector<std::size_t>& sigma, const R& sample) {
  const auto v = natural_sigma_values(sigma);
  return RingMatrix<R>::diagonal(v, sample);
}

/// The z-matrix A + diag(shift) - (z + offset)·I over ZPoly<R>.
template <Ring R>
RingMatrix<ZPoly<R>> shifted_z_matrix(const RingMatrix<R>& a, std::span<const Rational> shift,
                                      const Rational& offset = Rational(0)) {
  const std::size_t m = a.size();
  if (shift.size() != m) throw IndexRange("shift length does not match matrix size");
  const R& sample = a(0, 0);
  const R one = ring_traits<R>::one_like(sample);
  RingMatrix<ZPoly<R>> out(m, ZPoly<R>(sample));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      if (i != j) {
        out(i, j) = ZPoly<R>::constant(a(i, j));
      } else {
        const Rational c = shift[i] - offset;
        out(i, j) = ZPoly<R>(sample, {R(a(i, j) + R(one * c)), R(-one)});
      }
    }
  return out;
}

}  // namespace capelli
