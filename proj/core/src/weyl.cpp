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

#include "capelli/weyl.hpp"

#include <algorithm>

#include "capelli/capelli_center.hpp"
#include "capelli/errors.hpp"

namespace capelli {

WeylContext::WeylContext(std::vector<std::string> names, Rational alpha, int conductor)
    : names_(std::move(names)), alpha_(std::move(alpha)), conductor_(conductor) {}

WeylContextPtr WeylContext::matrix(std::size_t m, const Rational& alpha, int conductor) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = 1; j <= m; ++j) names.push_back(std::to_string(i) + std::to_string(j));
  return std::make_shared<const WeylContext>(std::move(names), alpha, conductor);
}

WeylContextPtr WeylContext::group(const Group& group, int conductor) {
  return std::make_shared<const WeylContext>(group.element_names(), Rational(1), conductor);
}

// ---------------------------------------------------------------------------

WeylOp::WeylOp(WeylContextPtr ctx) : ctx_(std::move(ctx)) {}

WeylOp WeylOp::x(const WeylContextPtr& ctx, std::size_t v) {
  if (v >= ctx->size()) throw IndexRange("no Weyl variable " + std::to_string(v));
  WeylOp op(ctx);
  WeylMonomial mono(2 * ctx->size(), 0);
  mono[v] = 1;
  op.terms_.emplace(std::move(mono), Cyclo(ctx->conductor(), 1L));
  return op;
}

WeylOp WeylOp::d(const WeylContextPtr& ctx, std::size_t v) {
  if (v >= ctx->size()) throw IndexRange("no Weyl variable " + std::to_string(v));
  WeylOp op(ctx);
  WeylMonomial mono(2 * ctx->size(), 0);
  mono[ctx->size() + v] = 1;
  op.terms_.emplace(std::move(mono), Cyclo(ctx->conductor(), 1L));
  return op;
}

WeylOp WeylOp::scalar(const WeylContextPtr& ctx, const Cyclo& c) {
  WeylOp op(ctx);
  op.add_term(WeylMonomial(2 * ctx->size(), 0), c);
  return op;
}

WeylOp WeylOp::one_like() const { return scalar(ctx_, Cyclo(ctx_->conductor(), 1L)); }

void WeylOp::add_term(const WeylMonomial& mono, const Cyclo& c) {
  if (c.is_zero()) return;
  if (c.conductor() != ctx_->conductor()) {
    add_term(mono, c.promote(ctx_->conductor()));
    return;
  }
  auto it = terms_.find(mono);
  if (it == terms_.end()) {
    terms_.emplace(mono, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void WeylOp::require_same_context(const WeylOp& other) const {
  if (ctx_ != other.ctx_) throw ContextMismatch("Weyl operators from different contexts");
}

WeylOp& WeylOp::operator+=(const WeylOp& other) {
  require_same_context(other);
  for (const auto& [mono, c] : other.terms_) add_term(mono, c);
  return *this;
}

WeylOp& WeylOp::operator-=(const WeylOp& other) {
  require_same_context(other);
  for (const auto& [mono, c] : other.terms_) add_term(mono, -c);
  return *this;
}

WeylOp WeylOp::operator-() const {
  WeylOp out = *this;
  for (auto& [mono, c] : out.terms_) c = -c;
  return out;
}

WeylOp operator*(const WeylOp& a, const Rational& q) {
  WeylOp out(a.ctx_);
  if (q == 0) return out;
  out = a;
  for (auto& [mono, c] : out.terms_) c *= q;
  return out;
}

WeylOp operator*(const WeylOp& a, const Cyclo& c) {
  WeylOp out(a.ctx_);
  for (const auto& [mono, coeff] : a.terms_)
    out.add_term(mono, coeff * (c.conductor() == a.ctx_->conductor() ? c : c.promote(a.ctx_->conductor())));
  return out;
}

bool operator==(const WeylOp& a, const WeylOp& b) {
  a.require_same_context(b);
  return a.terms_ == b.terms_;
}

WeylOp operator*(const WeylOp& a, const WeylOp& b) { return weyl_mul(a, b); }

namespace {

Rational binomial(unsigned n, unsigned k) {
  Rational r = 1;
  for (unsigned i = 1; i <= k; ++i) r = r * static_cast<long>(n - k + i) / static_cast<long>(i);
  return r;
}

Rational factorial(unsigned n) {
  Rational r = 1;
  for (unsigned i = 2; i <= n; ++i) r *= static_cast<long>(i);
  return r;
}

/// Expands x^{A1} ∂^{B1} · x^{A2} ∂^{B2} into `out`, one variable at a time,
/// using ∂^b x^c = Σ_k C(b,k) C(c,k) k! α^k x^{c-k} ∂^{b-k}.
void multiply_monomials(const WeylMonomial& a, const WeylMonomial& b, const Cyclo& coeff,
                        const Rational& alpha, std::size_t n, WeylOp& out) {
  thread_local WeylMonomial base;
  thread_local std::vector<std::size_t> active;
  base.resize(2 * n);
  active.clear();
  for (std::size_t v = 0; v < n; ++v) {
    const unsigned xs = a[v] + b[v], ds = a[n + v] + b[n + v];
    if (xs > 255 || ds > 255) throw SizeLimit("Weyl exponent exceeds 255");
    base[v] = static_cast<std::uint8_t>(xs);
    base[n + v] = static_cast<std::uint8_t>(ds);
    if (a[n + v] && b[v]) active.push_back(v);
  }
  if (active.empty()) {
    out.add_term(base, coeff);
    return;
  }
  // Depth-first over the contraction counts k_v of the active variables.
  std::vector<unsigned> k(active.size(), 0);
  WeylMonomial mono;
  while (true) {
    mono = base;
    Rational scale = 1;
    for (std::size_t t = 0; t < active.size(); ++t) {
      const std::size_t v = active[t];
      const unsigned dv = a[n + v], xv = b[v];
      mono[v] -= k[t];
      mono[n + v] -= k[t];
      if (k[t]) {
        scale *= binomial(dv, k[t]) * binomial(xv, k[t]) * factorial(k[t]);
        for (unsigned i = 0; i < k[t]; ++i) scale *= alpha;
      }
    }
    if (scale == 1)
      out.add_term(mono, coeff);
    else
      out.add_term(mono, coeff * scale);
    std::size_t t = 0;
    for (; t < active.size(); ++t) {
      const std::size_t v = active[t];
      const unsigned limit = std::min(a[n + v], b[v]);
      if (k[t] < limit) {
        ++k[t];
        break;
      }
      k[t] = 0;
    }
    if (t == active.size()) break;
  }
}

}  // namespace

WeylOp weyl_mul(const WeylOp& a, const WeylOp& b) {
  if (a.context() != b.context()) throw ContextMismatch("Weyl operators from different contexts");
  const auto& ctx = a.context();
  WeylOp out(ctx);
  for (const auto& [ma, ca] : a.terms())
    for (const auto& [mb, cb] : b.terms()) multiply_monomials(ma, mb, ca * cb, ctx->alpha(), ctx->size(), out);
  return out;
}

WeylPolynomial apply_to_polynomial(const WeylOp& op, const WeylPolynomial& p) {
  const auto& ctx = op.context();
  const std::size_t n = ctx->size();
  WeylPolynomial out;
  for (const auto& [mono, c] : op.terms())
    for (const auto& [expo, pc] : p) {
      if (expo.size() != n) throw IndexRange("polynomial has the wrong number of variables");
      std::vector<unsigned> e = expo;
      Rational scale = 1;
      bool vanishes = false;
      for (std::size_t v = 0; v < n && !vanishes; ++v) {
        const unsigned b = mono[n + v];
        if (b > e[v]) {
          vanishes = true;
          break;
        }
        for (unsigned i = 0; i < b; ++i) scale *= ctx->alpha() * static_cast<long>(e[v] - i);
        e[v] = e[v] - b + mono[v];
      }
      if (vanishes) continue;
      const Cyclo term = c * pc * scale;
      auto [it, inserted] = out.try_emplace(e, term);
      if (!inserted) {
        it->second += term;
        if (it->second.is_zero()) out.erase(it);
      } else if (term.is_zero()) {
        out.erase(it);
      }
    }
  return out;
}

// ---------------------------------------------------------------------------

namespace {

RingMatrix<WeylOp> pi_from(const RingMatrix<WeylOp>& X, const RingMatrix<WeylOp>& D) {
  return X.transpose() * D;
}

std::string index_pair(std::size_t i, std::size_t j) { return std::to_string(i + 1) + std::to_string(j + 1); }

Rational inverse(const Rational& q) { return Rational(1 / q); }

}  // namespace

WeylMatrices build_generic(std::size_t m, const Rational& alpha) {
  if (m == 0) throw IndexRange("generic Weyl matrices need m >= 1");
  if (m > kMaxGenericWeylSize) throw SizeLimit("generic Weyl matrices limited to m <= 3");
  auto ctx = WeylContext::matrix(m, alpha);
  RingMatrix<WeylOp> X(m, WeylOp(ctx)), D(m, WeylOp(ctx));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      X(i, j) = WeylOp::x(ctx, i * m + j);
      D(i, j) = WeylOp::d(ctx, i * m + j);
    }
  auto Pi = pi_from(X, D);
  return {ctx, "generic m=" + std::to_string(m) + " α=" + alpha.get_str(), alpha, true, std::move(X), std::move(D),
          std::move(Pi)};
}

WeylMatrices build_rep(const Irrep& irrep) {
  const Group& G = *irrep.group();
  const std::size_t m = irrep.degree();
  auto ctx = WeylContext::group(G, irrep.conductor());
  RingMatrix<WeylOp> X(m, WeylOp(ctx)), D(m, WeylOp(ctx));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (ElementIndex g = 0; g < G.order(); ++g) {
        const Cyclo& c = irrep.matrix(g)(i, j);
        if (c.is_zero()) continue;
        X(i, j) += WeylOp::x(ctx, g) * c.conjugate();
        D(i, j) += WeylOp::d(ctx, g) * c;
      }
  auto Pi = pi_from(X, D);
  return {ctx, irrep.label(), irrep.alpha(), false, std::move(X), std::move(D), std::move(Pi)};
}

CheckResult verify_rep_relations(const WeylMatrices& w) {
  const std::size_t m = w.size();
  const WeylOp zero(w.ctx);
  const WeylOp alpha = WeylOp::scalar(w.ctx, Cyclo(w.ctx->conductor(), w.alpha));
  std::size_t count = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          ++count;
          if (!commutator(w.X(i, j), w.X(k, l)).is_zero())
            return make_result("weyl-relations", w.label, false,
                               "[X_" + index_pair(i, j) + ", X_" + index_pair(k, l) + "] != 0");
          if (!commutator(w.D(i, j), w.D(k, l)).is_zero())
            return make_result("weyl-relations", w.label, false,
                               "[∂_" + index_pair(i, j) + ", ∂_" + index_pair(k, l) + "] != 0");
          const WeylOp got = commutator(w.D(i, j), w.X(k, l));
          const WeylOp& expected = (i == k && j == l) ? alpha : zero;
          if (got != expected)
            return make_result("weyl-relations", w.label, false,
                               "[∂_" + index_pair(i, j) + ", X_" + index_pair(k, l) + "] = " + to_string(got) +
                                   ", expected " + to_string(expected));
        }
  return make_result("weyl-relations", w.label, true,
                     "X, ∂ relations with α = " + w.alpha.get_str() + " on " + std::to_string(count) + " index tuples");
}

CheckResult verify_pi_relations(const WeylMatrices& w) {
  const std::size_t m = w.size();
  std::size_t count = 0;
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < m; ++k)
        for (std::size_t l = 0; l < m; ++l) {
          ++count;
          const WeylOp got = commutator(w.Pi(i, j), w.Pi(k, l));
          WeylOp expected(w.ctx);
          if (j == k) expected += w.Pi(i, l) * w.alpha;
          if (i == l) expected -= w.Pi(k, j) * w.alpha;
          if (got != expected)
            return make_result("weyl-relations", w.label, false,
                               "[Π_" + index_pair(i, j) + ", Π_" + index_pair(k, l) + "] = " + to_string(got) +
                                   ", expected " + to_string(expected));
        }
  return make_result("weyl-relations", w.label, true,
                     "Π relations with α = " + w.alpha.get_str() + " on " + std::to_string(count) + " index tuples");
}

namespace {

void check_capelli_budget(const WeylMatrices& w) {
  if (w.size() > kMaxGenericWeylSize)
    throw SizeLimit("Capelli expansion limited to size " + std::to_string(kMaxGenericWeylSize));
  if (!w.generic && w.size() > kMaxRepWeylDegree)
    throw SizeLimit("representation Capelli expansion limited to degree " + std::to_string(kMaxRepWeylDegree));
}

std::vector<Rational> alpha_natural(const WeylMatrices& w) {
  auto v = natural_shift_values(w.size());
  for (auto& x : v) x *= w.alpha;
  return v;
}

}  // namespace

CheckResult verify_capelli(const WeylMatrices& w) {
  check_capelli_budget(w);
  const auto shift = alpha_natural(w);
  const WeylOp lhs = coldet(w.Pi + RingMatrix<WeylOp>::diagonal(shift, WeylOp(w.ctx)));
  const WeylOp rhs = coldet(w.X) * coldet(w.D);
  if (lhs == rhs)
    return make_result("weyl-capelli", w.label, true,
                       "det(Π + α♮) = det X det ∂, " + std::to_string(lhs.terms().size()) + " terms");
  return make_result("weyl-capelli", w.label, false,
                     "det(Π + α♮) - det X det ∂ = " + to_string(lhs - rhs));
}

ZPoly<WeylOp> capelli_element_weyl(const WeylMatrices& w) {
  check_capelli_budget(w);
  return coldet(shifted_z_matrix(w.Pi, alpha_natural(w)));
}

CheckResult verify_C_properties(const WeylMatrices& w) {
  const auto C = capelli_element_weyl(w);
  const std::size_t m = w.size();
  std::size_t c_terms = 0, pi_terms = 0;
  for (const auto& c : C.coefficients()) c_terms += c.terms().size();
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) pi_terms += w.Pi(i, j).terms().size();
  if (2 * c_terms * pi_terms > kWeylProductBudget)
    throw SizeLimit("commutator expansion needs about " + std::to_string(2 * c_terms * pi_terms) +
                    " monomial products, budget " + std::to_string(kWeylProductBudget));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < C.coefficients().size(); ++k)
        if (!commutator(w.Pi(i, j), C.coefficients()[k]).is_zero())
          return make_result("weyl-central", w.label, false,
                             "[Π_" + index_pair(i, j) + ", coefficient of z^" + std::to_string(k) + "] != 0");

  const auto family = conjugation_family(m, w.ctx->conductor());
  const auto shift = alpha_natural(w);
  for (const auto& p : family) {
    const auto p_inv = *p.inverse();
    RingMatrix<WeylOp> conj(m, WeylOp(w.ctx));
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        for (std::size_t a = 0; a < m; ++a)
          for (std::size_t b = 0; b < m; ++b) {
            const Cyclo c = p(i, a) * p_inv(b, j);
            if (!c.is_zero()) conj(i, j) += w.Pi(a, b) * c;
          }
    if (!(coldet(shifted_z_matrix(conj, shift)) == C))
      return make_result("weyl-central", w.label, false, "coldet(PΠP⁻¹ + α♮ - z) != C(z) for P = " + p.to_string());
  }
  return make_result("weyl-central", w.label, true,
                     "C(z) commutes with all Π_ij; invariant under " + std::to_string(family.size()) +
                         " conjugations");
}

CheckResult verify_theorem_M(const RingMatrix<WeylOp>& E, const std::string& label) {
  const std::size_t m = E.size();
  if (m > 2) throw SizeLimit("three-way determinant check limited to m <= 2");
  const auto col = coldet(shifted_z_matrix(E, natural_shift_values(m)));
  const auto row = rowdet(shifted_z_matrix(E, natural_star_values(m)));
  std::string detail;
  bool ok = true;
  if (row == col) {
    detail = "rowdet(E + ♮* - z) = coldet(E + ♮ - z)";
  } else {
    ok = false;
    detail = "rowdet(E + ♮* - z) - coldet(E + ♮ - z) = " + to_string(row - col);
  }
  for (const auto& sp : signed_permutations(m)) {
    const auto dd = doubledet(shifted_z_matrix(E, natural_sigma_values(sp.images), Rational(1)));
    if (dd == col) {
      detail += "; Det(E + ♮_σ - (z+1)) = coldet for σ = " + permutation_label(sp.images);
    } else {
      ok = false;
      detail += "; σ = " + permutation_label(sp.images) + ": Det(E + ♮_σ - (z+1)) - coldet = " + to_string(dd - col);
    }
  }
  return make_result("thm-M", label, ok, detail);
}

CheckResult verify_theorem_M(std::size_t m) {
  if (m == 0 || m > 2) throw SizeLimit("three-way determinant check limited to 1 <= m <= 2");
  const auto w = build_generic(m, Rational(1));
  return verify_theorem_M(w.Pi, w.label);
}

CheckResult verify_theorem_M(const Irrep& irrep) {
  if (irrep.degree() > 2) throw SizeLimit("three-way determinant check limited to degree <= 2");
  const auto w = build_rep(irrep);
  const Rational inv = inverse(w.alpha);
  return verify_theorem_M(w.Pi.map([&](const WeylOp& op) { return op * inv; }), irrep.label());
}

// ---------------------------------------------------------------------------

std::string to_string(const WeylOp& op) {
  const auto& ctx = op.context();
  const std::size_t n = ctx->size();
  std::vector<std::pair<Cyclo, std::string>> terms;
  // Highest total degree first, ties in descending exponent order (x_11 before x_21).
  std::vector<std::pair<const WeylMonomial*, const Cyclo*>> sorted;
  for (const auto& [mono, c] : op.terms()) sorted.emplace_back(&mono, &c);
  std::sort(sorted.begin(), sorted.end(), [](const auto& a, const auto& b) {
    unsigned da = 0, db = 0;
    for (auto e : *a.first) da += e;
    for (auto e : *b.first) db += e;
    if (da != db) return da > db;
    return MonomialLess{}(*b.first, *a.first);
  });
  for (const auto& [mono, c] : sorted) {
    std::string name;
    for (std::size_t part = 0; part < 2; ++part)
      for (std::size_t v = 0; v < n; ++v) {
        const unsigned e = (*mono)[part * n + v];
        if (!e) continue;
        if (!name.empty()) name += " ";
        name += (part == 0 ? "x_" : "∂_") + ctx->name(v);
        if (e > 1) name += "^" + std::to_string(e);
      }
    if (!name.empty() && !c->is_rational()) name = " " + name;
    else if (!name.empty() && !(abs(c->rational_part()) == 1)) name = " " + name;
    terms.emplace_back(*c, name);
  }
  return render_combination(terms);
}

std::string to_string(const ZPoly<WeylOp>& poly) {
  const auto& c = poly.coefficients();
  if (c.empty()) return "0";
  std::string out;
  for (std::size_t k = c.size(); k-- > 0;) {
    if (c[k].is_zero()) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(c[k]) + ")";
    if (k == 1) out += "z";
    if (k > 1) out += "z^" + std::to_string(k);
  }
  return out;
}

}  // namespace capelli
