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

#include "capelli/capelli_center.hpp"

#include <algorithm>
#include <numeric>

#include "capelli/errors.hpp"
#include "capelli/group.hpp"

namespace capelli {

namespace {

ZPoly<Rational> scalar_z() { return ZPoly<Rational>::variable(Rational(0)); }

ZPoly<Rational> scalar_constant(const Rational& c) { return ZPoly<Rational>::constant(c); }

/// Scalar polynomial times a fixed algebra element.
CapelliPoly scale(const ZPoly<Rational>& p, const AlgebraElement& a) {
  std::vector<AlgebraElement> out;
  for (const auto& c : p.coefficients()) out.push_back(a * c);
  return CapelliPoly(a, std::move(out));
}

std::vector<Rational> scaled(std::vector<Rational> v, const Rational& alpha) {
  for (auto& x : v) x *= alpha;
  return v;
}

CapelliPoly coldet_shifted(const RingMatrix<AlgebraElement>& E, const Rational& alpha, std::size_t limit) {
  const auto shift = scaled(natural_shift_values(E.size()), alpha);
  return coldet(shifted_z_matrix(E, shift), limit);
}

RingMatrix<AlgebraElement> conjugate_by(const RingMatrix<AlgebraElement>& E, const ScalarMatrix& p,
                                        const ScalarMatrix& p_inv) {
  const std::size_t m = E.size();
  RingMatrix<AlgebraElement> out(m, E(0, 0).zero_like());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      AlgebraElement acc = E(0, 0).zero_like();
      for (std::size_t k = 0; k < m; ++k) {
        if (p(i, k).is_zero()) continue;
        for (std::size_t l = 0; l < m; ++l) {
          if (p_inv(l, j).is_zero()) continue;
          acc += E(k, l) * (p(i, k) * p_inv(l, j));
        }
      }
      out(i, j) = std::move(acc);
    }
  return out;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

std::string z_power(std::size_t k) {
  if (k == 0) return "";
  if (k == 1) return "z";
  return "z^" + std::to_string(k);
}

std::string render_scalar_poly(const std::vector<Cyclo>& coeffs) {
  std::vector<std::pair<Cyclo, std::string>> terms;
  for (std::size_t k = coeffs.size(); k-- > 0;) terms.emplace_back(coeffs[k], z_power(k));
  return render_combination(terms);
}

}  // namespace

ZPoly<Rational> u_factor(const Irrep& irrep, std::size_t i) {
  const std::size_t m = irrep.degree();
  if (i < 1 || i > m) throw IndexRange("u_i needs 1 <= i <= " + std::to_string(m));
  const Rational c = irrep.alpha() * static_cast<long>(m - i);
  return scalar_constant(c) - scalar_z();
}

ZPoly<Rational> u_product(const Irrep& irrep, std::size_t i) {
  const std::size_t m = irrep.degree();
  if (i > m) throw IndexRange("u^(i) needs 0 <= i <= " + std::to_string(m));
  ZPoly<Rational> out = scalar_constant(1);
  for (std::size_t s = m; s > m - i; --s) out = out * u_factor(irrep, s);
  return out;
}

CapelliElement capelli_element(const Irrep& irrep, std::size_t limit) {
  return {irrep.label(), coldet_shifted(E_matrix(irrep), irrep.alpha(), limit)};
}

CapelliElement capelli_via_subsets(const Irrep& irrep) {
  const std::size_t m = irrep.degree();
  const Rational alpha = irrep.alpha();
  const auto E = E_matrix(irrep);
  const AlgebraElement e = AlgebraElement::identity(irrep.group());
  CapelliPoly sum = scale(u_product(irrep, m), e);
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    std::size_t size = 0, top = 0;
    ZPoly<Rational> rest = scalar_constant(1);
    for (std::size_t s = 1; s <= m; ++s) {
      if (mask & (1u << (s - 1))) {
        ++size;
        top = s;
      } else {
        rest = rest * u_factor(irrep, s);
      }
    }
    Rational coeff = 1;
    for (std::size_t k = 1; k < size; ++k) coeff *= -alpha;
    sum = sum + scale(rest * coeff, E(top - 1, top - 1));
  }
  return {irrep.label(), sum};
}

CheckResult verify_theorem_415(const Irrep& irrep) {
  const std::size_t m = irrep.degree();
  const CapelliPoly lhs = capelli_element(irrep).poly;
  const CapelliPoly rhs = scale(u_product(irrep, m), AlgebraElement::identity(irrep.group())) +
                          scale(u_product(irrep, m - 1), character_element(irrep));
  if (lhs == rhs) return make_result("thm415", irrep.label(), true, "C(z) = " + to_string(lhs));
  return make_result("thm415", irrep.label(), false,
                     "coldet gives " + to_string(lhs) + " but u^(m)e + χ u^(m-1) gives " + to_string(rhs));
}

CheckResult verify_centrality(const Irrep& irrep, const IrrepSet& set) {
  const CapelliPoly C = capelli_element(irrep).poly;
  const Group& G = *irrep.group();
  for (std::size_t k = 0; k < C.coefficients().size(); ++k)
    if (auto g = non_central_witness(C.coefficients()[k]))
      return make_result("central", irrep.label(), false,
                         "coefficient of " + (k ? z_power(k) : std::string("z^0")) + " does not commute with " +
                             G.element_name(*g));
  std::size_t count = 0;
  for (const auto& psi : set.irreps) {
    const auto E = E_matrix(psi);
    for (std::size_t i = 0; i < E.size(); ++i)
      for (std::size_t j = 0; j < E.size(); ++j) {
        ++count;
        for (const auto& c : C.coefficients())
          if (!commutator(E(i, j), c).is_zero())
            return make_result("central", irrep.label(), false,
                               "[E^" + psi.label() + "_" + std::to_string(i + 1) + std::to_string(j + 1) +
                                   ", C(z)] != 0");
      }
  }
  return make_result("central", irrep.label(), true,
                     std::to_string(C.coefficients().size()) + " central coefficients, " + std::to_string(count) +
                         " vanishing commutators");
}

std::vector<ScalarMatrix> conjugation_family(std::size_t m, int conductor) {
  std::vector<ScalarMatrix> out;
  for (const auto& sp : signed_permutations(m)) {
    ScalarMatrix p(m, conductor);
    for (std::size_t i = 0; i < m; ++i) p(sp.images[i], i) = Cyclo(conductor, 1L);
    out.push_back(std::move(p));
  }
  if (m >= 2) {
    ScalarMatrix t = ScalarMatrix::identity(m, conductor);
    t(0, 1) = Cyclo(conductor, 1L);
    out.push_back(std::move(t));
  }
  return out;
}

CheckResult verify_conjugation_invariance(const Irrep& irrep, const ScalarMatrix& p) {
  const auto p_inv = p.inverse();
  if (!p_inv) throw SingularMatrix("conjugating matrix is singular");
  const auto E = E_matrix(irrep);
  const CapelliPoly expected = coldet_shifted(E, irrep.alpha(), kDefaultDeterminantLimit);
  const CapelliPoly got = coldet_shifted(conjugate_by(E, p, *p_inv), irrep.alpha(), kDefaultDeterminantLimit);
  if (got == expected) return make_result("conj-inv", irrep.label(), true, "P = " + p.to_string());
  return make_result("conj-inv", irrep.label(), false,
                     "P = " + p.to_string() + " gives " + to_string(got) + ", expected " + to_string(expected));
}

CheckResult verify_conjugation_invariance(const Irrep& irrep) {
  const auto family = conjugation_family(irrep.degree(), irrep.conductor());
  const auto E = E_matrix(irrep);
  const CapelliPoly expected = coldet_shifted(E, irrep.alpha(), kDefaultDeterminantLimit);
  for (const auto& p : family) {
    const CapelliPoly got =
        coldet_shifted(conjugate_by(E, p, *p.inverse()), irrep.alpha(), kDefaultDeterminantLimit);
    if (!(got == expected))
      return make_result("conj-inv", irrep.label(), false,
                         "P = " + p.to_string() + " gives " + to_string(got) + ", expected " + to_string(expected));
  }
  return make_result("conj-inv", irrep.label(), true,
                     std::to_string(family.size()) + " matrices (permutations and a transvection)");
}

Rational choose_k(const Irrep& irrep, const std::optional<Rational>& k) {
  const Rational value = k.value_or(Rational(-1));
  const std::size_t m = irrep.degree();
  for (std::size_t s = m; s > 1; --s)
    if (u_factor(irrep, s).evaluate(value) == 0)
      throw BadK("u_" + std::to_string(s) + "(" + value.get_str() + ") = 0 for irrep '" + irrep.label() + "'", s);
  return value;
}

namespace {

BasisResult finish_basis(const IrrepSet& set, const std::string& check, BasisResult out,
                         const std::string& what) {
  const std::size_t classes = set.group->classes().size();
  std::vector<std::vector<Cyclo>> rows;
  for (std::size_t i = 0; i < out.elements.size(); ++i) {
    if (!is_central(out.elements[i])) {
      out.report = make_result(check, "*", false, what + " for '" + out.labels[i] + "' is not central");
      return out;
    }
    rows.push_back(coordinates_in_class_sums(out.elements[i]));
  }
  out.rank = exact_rank(std::move(rows));
  const bool ok = out.elements.size() == classes && out.rank == classes;
  out.report = make_result(check, "*", ok,
                           std::to_string(out.elements.size()) + " central elements of rank " +
                               std::to_string(out.rank) + ", " + std::to_string(classes) + " classes");
  return out;
}

}  // namespace

BasisResult center_basis(const IrrepSet& set, const std::map<std::string, Rational>& k) {
  BasisResult out;
  std::vector<std::string> points;
  for (const auto& phi : set.irreps) {
    const auto it = k.find(phi.label());
    const Rational kk = choose_k(phi, it == k.end() ? std::nullopt : std::optional<Rational>(it->second));
    out.labels.push_back(phi.label());
    out.elements.push_back(capelli_element(phi).poly.evaluate(kk));
    points.push_back(kk.get_str());
  }
  out = finish_basis(set, "basis-415", std::move(out), "C(k)");
  out.report.detail += ", k = " + join(points, ",");
  return out;
}

BasisResult character_basis(const IrrepSet& set) {
  BasisResult out;
  for (const auto& phi : set.irreps) {
    out.labels.push_back(phi.label());
    out.elements.push_back(character_element(phi));
  }
  return finish_basis(set, "basis-char", std::move(out), "character element");
}

DetVariantResult verify_det_variants(const Irrep& irrep, std::vector<std::vector<std::size_t>> sigmas) {
  DetVariantResult out;
  const std::size_t m = irrep.degree();
  const Rational alpha = irrep.alpha();
  if (sigmas.empty())
    for (const auto& sp : signed_permutations(m)) sigmas.push_back(sp.images);

  const auto E = E_matrix(irrep);
  const CapelliPoly C = coldet_shifted(E, alpha, kDefaultDeterminantLimit);
  const CapelliPoly R = rowdet(shifted_z_matrix(E, scaled(natural_star_values(m), alpha)));
  out.rowdet_equal = R == C;

  std::vector<Rational> candidates{Rational(1)};
  if (alpha != 1) candidates.push_back(alpha);

  std::string first_miss;
  std::vector<Rational> common = candidates;
  std::vector<std::string> sigma_names;
  for (const auto& sigma : sigmas) {
    const auto shift = scaled(natural_sigma_values(sigma), alpha);
    std::vector<Rational> hits;
    for (const auto& c : candidates) {
      const CapelliPoly D = doubledet(shifted_z_matrix(E, shift, c));
      if (D == C)
        hits.push_back(c);
      else if (first_miss.empty() && c == candidates.back())
        first_miss = "at σ = " + permutation_label(sigma) + ", c = " + c.get_str() + ": Det - C(z) = " +
                     to_string(D - C);
    }
    std::erase_if(common, [&](const Rational& c) { return std::find(hits.begin(), hits.end(), c) == hits.end(); });
    sigma_names.push_back(permutation_label(sigma));
    out.shifts.emplace_back(sigma, std::move(hits));
  }
  if (!common.empty()) out.consistent_shift = common.front();

  std::string detail = out.rowdet_equal ? "rowdet = C(z)" : "rowdet != C(z): rowdet - C(z) = " + to_string(R - C);
  std::vector<std::string> cand_names;
  for (const auto& c : candidates) cand_names.push_back(c.get_str());
  if (out.consistent_shift) {
    detail += "; double-det shift c = " + out.consistent_shift->get_str() + " for σ in {" + join(sigma_names, ", ") +
              "}";
  } else {
    detail += "; no shift c in {" + join(cand_names, ", ") + "} gives Det = C(z) for every σ";
    for (const auto& [sigma, hits] : out.shifts) {
      std::vector<std::string> h;
      for (const auto& c : hits) h.push_back(c.get_str());
      detail += "; σ = " + permutation_label(sigma) + ": {" + join(h, ", ") + "}";
    }
    if (!first_miss.empty()) detail += "; " + first_miss;
  }
  out.report = {"det-variants", irrep.label(),
                out.rowdet_equal && out.consistent_shift ? Status::Measured : Status::Fail, detail};
  return out;
}

std::string to_string(const CapelliPoly& poly) {
  const auto& coeffs = poly.coefficients();
  if (coeffs.empty()) return "0";
  const Group& G = *coeffs.front().group();
  std::string out;
  for (ElementIndex g = 0; g < G.order(); ++g) {
    std::vector<Cyclo> scalar;
    bool any = false;
    for (const auto& c : coeffs) {
      scalar.push_back(c.coeff(g));
      any = any || !c.coeff(g).is_zero();
    }
    if (!any) continue;
    std::size_t nonzero = 0, only = 0;
    for (std::size_t k = 0; k < scalar.size(); ++k)
      if (!scalar[k].is_zero()) {
        ++nonzero;
        only = k;
      }
    const std::string name = display_name(G.element_name(g));
    std::string term;
    bool negative = false;
    if (nonzero == 1 && scalar[only].is_rational()) {
      // c z^k g: fold the scalar in front of the z power.
      std::vector<std::pair<Cyclo, std::string>> single{{scalar[only], z_power(only) + name}};
      term = render_combination(single);
    } else {
      term = "(" + render_scalar_poly(scalar) + ")" + name;
    }
    if (!term.empty() && term.front() == '-') {
      negative = true;
      term = term.substr(1);
    }
    if (out.empty())
      out = negative ? "-" + term : term;
    else
      out += (negative ? " - " : " + ") + term;
  }
  return out.empty() ? "0" : out;
}

std::string to_string(const ZPoly<Rational>& poly) {
  std::vector<Cyclo> c;
  for (const auto& q : poly.coefficients()) c.emplace_back(1, q);
  return render_scalar_poly(c);
}

std::string permutation_label(const std::vector<std::size_t>& sigma) {
  const std::string s = cycle_notation(sigma);
  return s == "e" ? "id" : s;
}

}  // namespace capelli
