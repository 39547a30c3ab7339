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

#include "oracles.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace capelli::oracle {

std::complex<double> numeric(const Cyclo& c) {
  const int n = c.conductor();
  std::complex<double> acc = 0;
  const auto coeffs = c.coeffs();
  for (std::size_t k = 0; k < coeffs.size(); ++k) {
    const double angle = 2 * std::numbers::pi * static_cast<double>(k) / n;
    acc += coeffs[k].get_d() * std::polar(1.0, angle);
  }
  return acc;
}

bool near(std::complex<double> a, std::complex<double> b, double tol) { return std::abs(a - b) < tol; }

AlgebraElement convolve_by_permutations(const PermutationGroup& pg, const AlgebraElement& a,
                                        const AlgebraElement& b) {
  std::map<Permutation, ElementIndex> index;
  for (ElementIndex g = 0; g < pg.elements.size(); ++g) index[pg.elements[g]] = g;
  std::vector<Cyclo> out(pg.elements.size(), Cyclo(a.conductor()));
  for (ElementIndex g = 0; g < pg.elements.size(); ++g)
    for (ElementIndex h = 0; h < pg.elements.size(); ++h) {
      const ElementIndex k = index.at(compose(pg.elements[g], pg.elements[h]));
      out[k] += a.coeff(g) * b.coeff(h);
    }
  return AlgebraElement(pg.group, std::move(out));
}

// ---------------------------------------------------------------------------

FreeAlg FreeAlg::letter(char c) {
  FreeAlg a;
  a.terms_[std::string(1, c)] = 1;
  return a;
}

FreeAlg FreeAlg::scalar(const Rational& q) {
  FreeAlg a;
  if (q != 0) a.terms_[""] = q;
  return a;
}

void FreeAlg::add(const std::string& word, const Rational& q) {
  Rational& slot = terms_[word];
  slot += q;
  if (slot == 0) terms_.erase(word);
}

FreeAlg operator+(const FreeAlg& a, const FreeAlg& b) {
  FreeAlg out = a;
  for (const auto& [w, q] : b.terms_) out.add(w, q);
  return out;
}

FreeAlg operator-(const FreeAlg& a, const FreeAlg& b) { return a + (-b); }

FreeAlg FreeAlg::operator-() const {
  FreeAlg out;
  for (const auto& [w, q] : terms_) out.terms_[w] = -q;
  return out;
}

FreeAlg operator*(const FreeAlg& a, const FreeAlg& b) {
  FreeAlg out;
  for (const auto& [u, p] : a.terms_)
    for (const auto& [v, q] : b.terms_) out.add(u + v, p * q);
  return out;
}

FreeAlg operator*(const FreeAlg& a, const Rational& q) { return a * FreeAlg::scalar(q); }

// ---------------------------------------------------------------------------

namespace {

void accumulate(WeylPolynomial& p, const std::vector<unsigned>& e, const Cyclo& c) {
  auto [it, inserted] = p.try_emplace(e, c);
  if (!inserted) it->second += c;
  if (it->second.is_zero()) p.erase(it);
}

}  // namespace

WeylPolynomial apply_word(const std::vector<WeylLetter>& word, const Rational& alpha, const WeylPolynomial& p) {
  WeylPolynomial cur = p;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    WeylPolynomial next;
    for (const auto& [e, c] : cur) {
      std::vector<unsigned> f = e;
      if (!it->derivative) {
        ++f[it->var];
        accumulate(next, f, c);
      } else if (f[it->var] > 0) {
        const long power = f[it->var]--;
        accumulate(next, f, c * Rational(alpha * power));
      }
    }
    cur = std::move(next);
  }
  return cur;
}

WeylOp word_operator(const WeylContextPtr& ctx, const std::vector<WeylLetter>& word) {
  WeylOp op = WeylOp::scalar(ctx, Cyclo(ctx->conductor(), 1L));
  for (const auto& l : word) op = weyl_mul(op, l.derivative ? WeylOp::d(ctx, l.var) : WeylOp::x(ctx, l.var));
  return op;
}

// ---------------------------------------------------------------------------

Rational random_rational(Rng& rng, long range) {
  std::uniform_int_distribution<long> num(-range, range), den(1, 3);
  Rational q(num(rng), den(rng));
  q.canonicalize();
  return q;
}

Cyclo random_cyclo(Rng& rng, int conductor, long range) {
  std::vector<Rational> coeffs;
  for (int k = 0; k < euler_phi(conductor); ++k) coeffs.push_back(random_rational(rng, range));
  return Cyclo::from_coeffs(conductor, std::move(coeffs));
}

AlgebraElement random_algebra(Rng& rng, const GroupPtr& group, long range) {
  std::vector<Cyclo> coeffs;
  for (ElementIndex g = 0; g < group->order(); ++g) coeffs.push_back(random_cyclo(rng, group->exponent(), range));
  return AlgebraElement(group, std::move(coeffs));
}

std::vector<WeylLetter> random_word(Rng& rng, std::size_t vars, std::size_t length) {
  std::uniform_int_distribution<std::size_t> var(0, vars - 1);
  std::bernoulli_distribution deriv(0.5);
  std::vector<WeylLetter> w;
  for (std::size_t k = 0; k < length; ++k) w.push_back({deriv(rng), var(rng)});
  return w;
}

WeylOp random_weyl(Rng& rng, const WeylContextPtr& ctx, std::size_t terms, unsigned max_exp) {
  std::uniform_int_distribution<unsigned> ex(0, max_exp);
  WeylOp op(ctx);
  for (std::size_t t = 0; t < terms; ++t) {
    WeylMonomial mono(2 * ctx->size());
    for (auto& e : mono) e = static_cast<std::uint8_t>(ex(rng));
    op.add_term(mono, random_cyclo(rng, ctx->conductor(), 4));
  }
  return op;
}

WeylPolynomial random_polynomial(Rng& rng, std::size_t vars, int conductor, std::size_t terms, unsigned max_exp) {
  std::uniform_int_distribution<unsigned> ex(0, max_exp);
  WeylPolynomial p;
  for (std::size_t t = 0; t < terms; ++t) {
    std::vector<unsigned> e(vars);
    for (auto& v : e) v = ex(rng);
    accumulate(p, e, random_cyclo(rng, conductor, 4));
  }
  return p;
}

}  // namespace capelli::oracle
