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

#include "capelli/group_algebra.hpp"

#include <algorithm>
#include <cctype>

#include "capelli/errors.hpp"
#include "capelli/irrep.hpp"

namespace capelli {

AlgebraElement::AlgebraElement(GroupPtr group)
    : group_(std::move(group)), coeffs_(group_->order(), Cyclo(group_->exponent())) {}

AlgebraElement::AlgebraElement(GroupPtr group, std::vector<Cyclo> coeffs)
    : group_(std::move(group)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != group_->order())
    throw IndexRange("expected " + std::to_string(group_->order()) + " coefficients");
  for (auto& c : coeffs_)
    if (c.conductor() != group_->exponent()) c = c.promote(group_->exponent());
}

AlgebraElement AlgebraElement::basis(GroupPtr group, ElementIndex g) {
  AlgebraElement a(std::move(group));
  a.coeffs_.at(g) = Cyclo(a.conductor(), 1L);
  return a;
}

AlgebraElement AlgebraElement::identity(GroupPtr group) {
  const ElementIndex e = group->identity();
  return basis(std::move(group), e);
}

void AlgebraElement::set_coeff(ElementIndex g, Cyclo c) {
  if (c.conductor() != conductor()) c = c.promote(conductor());
  coeffs_.at(g) = std::move(c);
}

bool AlgebraElement::is_zero() const noexcept {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Cyclo& c) { return c.is_zero(); });
}

void AlgebraElement::require_same_group(const AlgebraElement& other) const {
  if (group_ != other.group_)
    throw GroupMismatch("elements of " + group_->name() + " and " + other.group_->name());
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  require_same_group(other);
  for (std::size_t g = 0; g < coeffs_.size(); ++g)
    if (!other.coeffs_[g].is_zero()) coeffs_[g] += other.coeffs_[g];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  require_same_group(other);
  for (std::size_t g = 0; g < coeffs_.size(); ++g)
    if (!other.coeffs_[g].is_zero()) coeffs_[g] -= other.coeffs_[g];
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement out = *this;
  for (auto& c : out.coeffs_) c = -c;
  return out;
}

AlgebraElement operator*(const AlgebraElement& a, const AlgebraElement& b) { return convolve(a, b); }

AlgebraElement operator*(const AlgebraElement& a, const Rational& q) {
  AlgebraElement out = a;
  for (auto& c : out.coeffs_) c *= q;
  return out;
}

AlgebraElement operator*(const AlgebraElement& a, const Cyclo& c) {
  const Cyclo s = c.conductor() == a.conductor() ? c : c.promote(a.conductor());
  AlgebraElement out = a;
  for (auto& x : out.coeffs_)
    if (!x.is_zero()) x = x * s;
  return out;
}

bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
  a.require_same_group(b);
  return a.coeffs_ == b.coeffs_;
}

AlgebraElement convolve(const AlgebraElement& a, const AlgebraElement& b) {
  if (a.group() != b.group())
    throw GroupMismatch("convolution of elements of " + a.group()->name() + " and " + b.group()->name());
  const Group& G = *a.group();
  std::vector<Cyclo> out(G.order(), Cyclo(G.exponent()));
  for (ElementIndex g = 0; g < G.order(); ++g) {
    const Cyclo& ag = a.coeffs()[g];
    if (ag.is_zero()) continue;
    for (ElementIndex h = 0; h < G.order(); ++h) {
      const Cyclo& bh = b.coeffs()[h];
      if (bh.is_zero()) continue;
      out[G.mul(g, h)] += ag * bh;
    }
  }
  return AlgebraElement(a.group(), std::move(out));
}

std::optional<ElementIndex> non_central_witness(const AlgebraElement& a) {
  // g·a = a·g  iff  a_{g k g⁻¹} = a_k for every k.
  const Group& G = *a.group();
  for (ElementIndex g = 0; g < G.order(); ++g)
    for (ElementIndex k = 0; k < G.order(); ++k) {
      const ElementIndex conj = G.mul(G.mul(g, k), G.inverse(g));
      if (a.coeffs()[conj] != a.coeffs()[k]) return g;
    }
  return std::nullopt;
}

bool is_central(const AlgebraElement& a) { return !non_central_witness(a).has_value(); }

AlgebraElement class_sum(const GroupPtr& group, const std::vector<ElementIndex>& cls) {
  std::vector<ElementIndex> sorted = cls;
  std::sort(sorted.begin(), sorted.end());
  const auto& classes = group->classes().classes;
  if (std::find(classes.begin(), classes.end(), sorted) == classes.end())
    throw NotAClass("element set is not a conjugacy class of " + group->name());
  AlgebraElement out(group);
  for (ElementIndex g : sorted) out.set_coeff(g, Cyclo(group->exponent(), 1L));
  return out;
}

std::vector<Cyclo> coordinates_in_class_sums(const AlgebraElement& a) {
  const Group& G = *a.group();
  std::vector<Cyclo> out;
  for (const auto& cls : G.classes().classes) {
    const Cyclo& c = a.coeffs()[cls.front()];
    for (ElementIndex g : cls)
      if (a.coeffs()[g] != c)
        throw NotCentral("coefficients of " + G.element_name(cls.front()) + " and " + G.element_name(g) +
                         " differ inside one class");
    out.push_back(c);
  }
  return out;
}

AlgebraElement character_element(const Irrep& irrep) {
  AlgebraElement out(irrep.group());
  for (ElementIndex g = 0; g < irrep.group()->order(); ++g) out.set_coeff(g, irrep.character(g));
  return out;
}

std::string display_name(const std::string& name) {
  if (name.empty()) return name;
  const unsigned char c = static_cast<unsigned char>(name.front());
  if (c == '-' || c == '+' || std::isdigit(c)) return "[" + name + "]";
  return name;
}

std::string render_combination(const std::vector<std::pair<Cyclo, std::string>>& terms) {
  std::string out;
  for (const auto& [c, name] : terms) {
    if (c.is_zero()) continue;
    bool negative = false;
    std::string body;
    if (c.is_rational()) {
      negative = c.rational_part() < 0;
      const Rational mag = abs(c.rational_part());
      if (name.empty())
        body = mag.get_str();
      else if (mag == 1)
        body = name;
      else if (mag.get_den() == 1)
        body = mag.get_str() + name;
      else
        body = "(" + mag.get_str() + ")" + name;
    } else {
      body = name.empty() ? c.to_string() : "(" + c.to_string() + ")" + name;
      if (name.empty() && !out.empty()) body = "(" + body + ")";
    }
    if (out.empty())
      out = negative ? "-" + body : body;
    else
      out += (negative ? " - " : " + ") + body;
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const AlgebraElement& a) {
  std::vector<std::pair<Cyclo, std::string>> terms;
  for (ElementIndex g = 0; g < a.group()->order(); ++g)
    terms.emplace_back(a.coeffs()[g], display_name(a.group()->element_name(g)));
  return render_combination(terms);
}

}  // namespace capelli
