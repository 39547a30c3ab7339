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

#include "capelli/cyclo.hpp"

#include <map>
#include <memory>
#include <mutex>

#include "capelli/errors.hpp"

namespace capelli {

namespace {

// Exact quotient of monic-divisor long division; the remainder must vanish.
IntPoly divide_exact(IntPoly num, const IntPoly& den) {
  const std::size_t dn = den.size() - 1;
  if (num.size() < den.size()) return {0};
  IntPoly quot(num.size() - dn, 0);
  for (std::size_t k = num.size(); k-- > dn;) {
    const long c = num[k];
    if (c == 0) continue;
    quot[k - dn] = c;
    for (std::size_t t = 0; t <= dn; ++t) num[k - dn + t] -= c * den[t];
  }
  return quot;
}

using QPoly = std::vector<Rational>;

void trim(QPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

// Quotient and remainder over Q; den must be nonzero and trimmed.
std::pair<QPoly, QPoly> divmod(QPoly num, const QPoly& den) {
  trim(num);
  if (num.size() < den.size()) return {QPoly{}, num};
  QPoly quot(num.size() - den.size() + 1);
  const Rational& lead = den.back();
  for (std::size_t k = num.size(); k-- >= den.size();) {
    if (num[k] == 0) continue;
    const Rational c = num[k] / lead;
    quot[k - den.size() + 1] = c;
    for (std::size_t t = 0; t < den.size(); ++t) num[k - den.size() + 1 + t] -= c * den[t];
  }
  trim(num);
  trim(quot);
  return {quot, num};
}

QPoly mul(const QPoly& a, const QPoly& b) {
  if (a.empty() || b.empty()) return {};
  QPoly out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  trim(out);
  return out;
}

QPoly sub(QPoly a, const QPoly& b) {
  if (a.size() < b.size()) a.resize(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  trim(a);
  return a;
}

}  // namespace

IntPoly cyclotomic_polynomial(int n) {
  if (n < 1) throw IndexRange("cyclotomic polynomial needs N >= 1");
  IntPoly p(static_cast<std::size_t>(n) + 1, 0);
  p[0] = -1;
  p[static_cast<std::size_t>(n)] = 1;
  for (int d = 1; d < n; ++d)
    if (n % d == 0) p = divide_exact(std::move(p), cyclotomic_polynomial(d));
  return p;
}

int euler_phi(int n) {
  int result = n;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p != 0) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

CycloField::CycloField(int conductor)
    : conductor_(conductor), modulus_(cyclotomic_polynomial(conductor)) {
  degree_ = modulus_.size() - 1;
  const std::size_t count = 2 * static_cast<std::size_t>(conductor);
  powers_.reserve(count);
  IntPoly cur(degree_, 0);
  cur[0] = 1;
  for (std::size_t k = 0; k < count; ++k) {
    powers_.push_back(cur);
    // multiply by x and fold the x^degree term back using Φ_N (monic)
    const long top = cur[degree_ - 1];
    for (std::size_t t = degree_ - 1; t > 0; --t) cur[t] = cur[t - 1];
    cur[0] = 0;
    if (top != 0)
      for (std::size_t t = 0; t < degree_; ++t) cur[t] -= top * modulus_[t];
  }
}

const CycloField& CycloField::of(int conductor) {
  if (conductor < 1) throw IndexRange("conductor must be positive");
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const CycloField>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[conductor];
  if (!slot) slot.reset(new CycloField(conductor));
  return *slot;
}

Cyclo::Cyclo() : Cyclo(1) {}

Cyclo::Cyclo(int conductor)
    : field_(&CycloField::of(conductor)), coeffs_(field_->degree()) {}

Cyclo::Cyclo(int conductor, const Rational& value) : Cyclo(conductor) { coeffs_[0] = value; }

Cyclo Cyclo::zeta(int conductor, long k) {
  const CycloField& f = CycloField::of(conductor);
  long r = k % conductor;
  if (r < 0) r += conductor;
  const IntPoly& p = f.power(static_cast<std::size_t>(r));
  std::vector<Rational> coeffs(p.begin(), p.end());
  return Cyclo(&f, std::move(coeffs));
}

Cyclo Cyclo::from_coeffs(int conductor, std::vector<Rational> coeffs) {
  const CycloField& f = CycloField::of(conductor);
  if (coeffs.size() != f.degree())
    throw ParseError("conductor " + std::to_string(conductor) + " needs " +
                     std::to_string(f.degree()) + " coefficients, got " +
                     std::to_string(coeffs.size()));
  for (auto& c : coeffs) c.canonicalize();
  return Cyclo(&f, std::move(coeffs));
}

bool Cyclo::is_zero() const noexcept {
  for (const auto& c : coeffs_)
    if (c != 0) return false;
  return true;
}

bool Cyclo::is_rational() const noexcept {
  for (std::size_t i = 1; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0) return false;
  return true;
}

bool Cyclo::is_one() const noexcept { return is_rational() && coeffs_[0] == 1; }

void Cyclo::require_same_field(const Cyclo& other) const {
  if (field_ != other.field_)
    throw ConductorMismatch("conductor " + std::to_string(conductor()) + " vs " +
                            std::to_string(other.conductor()));
}

Cyclo& Cyclo::operator+=(const Cyclo& other) {
  require_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (other.coeffs_[i] != 0) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& other) {
  require_same_field(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (other.coeffs_[i] != 0) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Cyclo& Cyclo::operator*=(const Rational& q) {
  for (auto& c : coeffs_)
    if (c != 0) c *= q;
  return *this;
}

Cyclo Cyclo::operator-() const {
  Cyclo out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

Cyclo operator*(const Cyclo& a, const Cyclo& b) {
  a.require_same_field(b);
  if (b.is_rational()) return a * b.coeffs_[0];
  if (a.is_rational()) return b * a.coeffs_[0];
  const std::size_t d = a.coeffs_.size();
  std::vector<Rational> prod(2 * d - 1);
  for (std::size_t i = 0; i < d; ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j)
      if (b.coeffs_[j] != 0) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  std::vector<Rational> out(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(d));
  for (std::size_t k = d; k < prod.size(); ++k) {
    if (prod[k] == 0) continue;
    const IntPoly& p = a.field_->power(k);
    for (std::size_t t = 0; t < d; ++t)
      if (p[t] != 0) out[t] += prod[k] * p[t];
  }
  return Cyclo(a.field_, std::move(out));
}

bool operator==(const Cyclo& a, const Cyclo& b) {
  a.require_same_field(b);
  return a.coeffs_ == b.coeffs_;
}

Cyclo Cyclo::inverse() const {
  if (is_zero()) throw DivisionByZero("inverse of zero in Q(ζ" + std::to_string(conductor()) + ")");
  if (is_rational()) return Cyclo(conductor(), 1 / coeffs_[0]);
  // Invariant: s_k * a ≡ r_k (mod Φ_N).
  QPoly r0(field_->modulus().begin(), field_->modulus().end());
  QPoly r1 = coeffs_;
  trim(r1);
  QPoly s0, s1{Rational(1)};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    QPoly s2 = sub(s0, mul(q, s1));
    s0 = std::move(s1);
    s1 = std::move(s2);
  }
  // Φ_N is irreducible, so the gcd r0 is a nonzero constant.
  const Rational c = r0[0];
  std::vector<Rational> out(field_->degree());
  auto [unused, rem] = divmod(s0, QPoly(field_->modulus().begin(), field_->modulus().end()));
  for (std::size_t i = 0; i < rem.size(); ++i) out[i] = rem[i] / c;
  return Cyclo(field_, std::move(out));
}

Cyclo Cyclo::conjugate() const {
  if (is_rational()) return *this;
  const auto n = static_cast<std::size_t>(conductor());
  std::vector<Rational> out(field_->degree());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const IntPoly& p = field_->power((n - j) % n);
    for (std::size_t t = 0; t < out.size(); ++t)
      if (p[t] != 0) out[t] += coeffs_[j] * p[t];
  }
  return Cyclo(field_, std::move(out));
}

Cyclo Cyclo::promote(int target_conductor) const {
  if (target_conductor < 1 || target_conductor % conductor() != 0)
    throw NotDivisible("conductor " + std::to_string(conductor()) + " does not divide " +
                       std::to_string(target_conductor));
  const CycloField& target = CycloField::of(target_conductor);
  const auto step = static_cast<std::size_t>(target_conductor / conductor());
  std::vector<Rational> out(target.degree());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    if (coeffs_[j] == 0) continue;
    const IntPoly& p = target.power(j * step);
    for (std::size_t t = 0; t < out.size(); ++t)
      if (p[t] != 0) out[t] += coeffs_[j] * p[t];
  }
  return Cyclo(&target, std::move(out));
}

std::string Cyclo::to_string() const {
  std::string out;
  const std::string root = "ζ" + std::to_string(conductor());
  for (std::size_t j = 0; j < coeffs_.size(); ++j) {
    const Rational& c = coeffs_[j];
    if (c == 0) continue;
    const bool negative = c < 0;
    const Rational mag = abs(c);
    std::string term;
    if (j == 0) {
      term = mag.get_str();
    } else {
      if (mag != 1) term = mag.get_str() + "*";
      term += root;
      if (j > 1) term += "^" + std::to_string(j);
    }
    if (out.empty())
      out = negative ? "-" + term : term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

}  // namespace capelli
