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

#include "capelli/irrep.hpp"

#include "capelli/errors.hpp"

namespace capelli {

Irrep::Irrep(std::string label, GroupPtr group, std::vector<ScalarMatrix> matrices)
    : label_(std::move(label)), group_(std::move(group)), matrices_(std::move(matrices)) {
  if (matrices_.size() != group_->order())
    throw InvalidIrrep("irrep '" + label_ + "' needs " + std::to_string(group_->order()) + " matrices, got " +
                       std::to_string(matrices_.size()));
  degree_ = matrices_.front().size();
  if (degree_ == 0) throw InvalidIrrep("irrep '" + label_ + "' has degree 0");
  const int n = group_->exponent();
  for (auto& m : matrices_) {
    if (m.size() != degree_) throw InvalidIrrep("irrep '" + label_ + "' mixes matrix sizes");
    if (m.conductor() == n) continue;
    if (n % m.conductor() != 0)
      throw InvalidIrrep("irrep '" + label_ + "' has entries outside Q(ζ" + std::to_string(n) + ")");
    m = m.promote(n);
  }
}

Rational Irrep::alpha() const {
  Rational a(static_cast<long>(group_->order()), static_cast<long>(degree_));
  a.canonicalize();
  return a;
}

std::string ValidationReport::summary() const {
  if (failures.empty()) return "ok";
  std::string out;
  for (const auto& f : failures) out += (out.empty() ? "" : "; ") + f;
  return out;
}

Cyclo character_inner_product(const Irrep& a, const Irrep& b) {
  const Group& G = *a.group();
  Cyclo sum(G.exponent());
  for (ElementIndex g = 0; g < G.order(); ++g) sum += a.character(g) * b.character(g).conjugate();
  return sum * Rational(1, static_cast<long>(G.order()));
}

ValidationReport validate(const Irrep& irrep) {
  ValidationReport report;
  const Group& G = *irrep.group();
  const std::size_t m = irrep.degree();
  const int n = G.exponent();
  const ScalarMatrix eye = ScalarMatrix::identity(m, n);
  const auto& name = [&](ElementIndex g) { return G.element_name(g); };

  if (!(irrep.matrix(G.identity()) == eye)) report.failures.push_back("identity: φ(e) != I");

  bool hom_ok = true;
  for (ElementIndex g = 0; g < G.order() && hom_ok; ++g)
    for (ElementIndex h = 0; h < G.order() && hom_ok; ++h)
      if (!(irrep.matrix(g) * irrep.matrix(h) == irrep.matrix(G.mul(g, h)))) {
        report.failures.push_back("homomorphism: φ(g)φ(h) != φ(gh) for g=" + name(g) + ", h=" + name(h));
        hom_ok = false;
      }

  for (ElementIndex g = 0; g < G.order(); ++g)
    if (!(irrep.matrix(g) * irrep.matrix(g).conjugate_transpose() == eye)) {
      report.failures.push_back("unitarity: φ(g)φ(g)* != I for g=" + name(g));
      break;
    }

  const Cyclo norm = character_inner_product(irrep, irrep);
  if (!norm.is_one()) report.failures.push_back("irreducibility: <χ,χ> = " + norm.to_string() + " != 1");
  return report;
}

bool equivalent(const Irrep& a, const Irrep& b) {
  if (a.group() != b.group() || a.degree() != b.degree()) return false;
  for (ElementIndex g = 0; g < a.group()->order(); ++g)
    if (a.character(g) != b.character(g)) return false;
  return true;
}

const Irrep& IrrepSet::find(std::string_view label) const {
  for (const auto& r : irreps)
    if (r.label() == label) return r;
  throw UnknownName("no irrep labelled '" + std::string(label) + "' for " + group->name());
}

ValidationReport validate_complete(const IrrepSet& set) {
  ValidationReport report;
  std::size_t sum = 0;
  for (const auto& r : set.irreps) {
    if (r.group() != set.group) report.failures.push_back("irrep '" + r.label() + "' belongs to another group");
    sum += r.degree() * r.degree();
  }
  if (sum != set.group->order())
    report.failures.push_back("sum of squared degrees " + std::to_string(sum) +
                              " != |G| = " + std::to_string(set.group->order()));
  for (std::size_t a = 0; a < set.irreps.size(); ++a)
    for (std::size_t b = a + 1; b < set.irreps.size(); ++b) {
      const Cyclo ip = character_inner_product(set.irreps[a], set.irreps[b]);
      if (!ip.is_zero())
        report.failures.push_back("orthogonality: <χ_" + set.irreps[a].label() + ", χ_" + set.irreps[b].label() +
                                  "> = " + ip.to_string());
    }
  return report;
}

RingMatrix<AlgebraElement> E_matrix(const Irrep& irrep) {
  const std::size_t m = irrep.degree();
  const Group& G = *irrep.group();
  RingMatrix<AlgebraElement> E(m, AlgebraElement(irrep.group()));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      AlgebraElement entry(irrep.group());
      for (ElementIndex g = 0; g < G.order(); ++g) entry.set_coeff(g, irrep.matrix(g)(i, j));
      E(i, j) = std::move(entry);
    }
  return E;
}

namespace {

struct Entry {
  std::size_t irrep;
  std::size_t i, j;
};

std::string entry_name(const IrrepSet& set, const Entry& e) {
  return "E^" + set.irreps[e.irrep].label() + "_" + std::to_string(e.i + 1) + std::to_string(e.j + 1);
}

}  // namespace

CheckResult verify_schur_products(const IrrepSet& set) {
  std::vector<Entry> entries;
  std::vector<AlgebraElement> values;
  for (std::size_t p = 0; p < set.irreps.size(); ++p) {
    const auto E = E_matrix(set.irreps[p]);
    for (std::size_t i = 0; i < E.size(); ++i)
      for (std::size_t j = 0; j < E.size(); ++j) {
        entries.push_back({p, i, j});
        values.push_back(E(i, j));
      }
  }
  const std::size_t count = entries.size();
  auto index_of = [&](std::size_t p, std::size_t i, std::size_t j) {
    for (std::size_t k = 0; k < count; ++k)
      if (entries[k].irrep == p && entries[k].i == i && entries[k].j == j) return k;
    throw IndexRange("no such E entry");
  };

  // Products first; the commutator relations are read off the same table.
  std::vector<AlgebraElement> products;
  products.reserve(count * count);
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) products.push_back(values[a] * values[b]);

  const AlgebraElement zero(set.group);
  std::size_t checked = 0;
  for (std::size_t a = 0; a < count; ++a)
    for (std::size_t b = 0; b < count; ++b) {
      const Entry& x = entries[a];
      const Entry& y = entries[b];
      AlgebraElement expected = zero;
      if (x.irrep == y.irrep && x.j == y.i)
        expected = values[index_of(x.irrep, x.i, y.j)] * set.irreps[x.irrep].alpha();
      ++checked;
      if (products[a * count + b] != expected)
        return make_result("schur", "*", false,
                           entry_name(set, x) + " * " + entry_name(set, y) + " = " +
                               to_string(products[a * count + b]) + ", expected " + to_string(expected));

      AlgebraElement comm = products[a * count + b] - products[b * count + a];
      AlgebraElement expected_comm = zero;
      if (x.irrep == y.irrep) {
        const Rational alpha = set.irreps[x.irrep].alpha();
        if (x.j == y.i) expected_comm += values[index_of(x.irrep, x.i, y.j)] * alpha;
        if (x.i == y.j) expected_comm -= values[index_of(x.irrep, y.i, x.j)] * alpha;
      }
      if (comm != expected_comm)
        return make_result("schur", "*", false,
                           "[" + entry_name(set, x) + ", " + entry_name(set, y) + "] = " + to_string(comm) +
                               ", expected " + to_string(expected_comm));
    }
  return make_result("schur", "*", true,
                     std::to_string(checked) + " products and commutators of " + std::to_string(count) +
                         " E entries");
}

CheckResult verify_E_basis(const IrrepSet& set) {
  std::vector<std::vector<Cyclo>> rows;
  for (const auto& r : set.irreps) {
    const auto E = E_matrix(r);
    for (std::size_t i = 0; i < E.size(); ++i)
      for (std::size_t j = 0; j < E.size(); ++j) rows.push_back(E(i, j).coeffs());
  }
  const std::size_t n = set.group->order();
  const std::size_t count = rows.size();
  const std::size_t rank = exact_rank(std::move(rows));
  const bool ok = rank == n && count == n;
  return make_result("e-basis", "*", ok,
                     "rank " + std::to_string(rank) + " of " + std::to_string(count) + " E entries, |G| = " +
                         std::to_string(n) + (ok ? "" : ", rank deficit " + std::to_string(n - rank)));
}

}  // namespace capelli
