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

#include <gtest/gtest.h>

#include <algorithm>

#include <capelli/capelli_center.hpp>
#include <capelli/catalog.hpp>
#include <capelli/errors.hpp>
#include <capelli/irrep_catalog.hpp>

#include "oracles.hpp"

namespace capelli {
namespace {

AlgebraElement named(const GroupPtr& g, const std::string& name) { return AlgebraElement::basis(g, *g->find(name)); }

AlgebraElement scalar(const GroupPtr& g, const Rational& q) { return AlgebraElement::identity(g) * q; }

/// coldet of the 2×2 matrix E + α♮ - z, with products by permutation composition.
AlgebraElement capelli_2x2(const PermutationGroup& pg, const Irrep& phi, const Rational& z) {
  const auto E = E_matrix(phi);
  const AlgebraElement a11 = E(0, 0) + scalar(pg.group, phi.alpha() - z);
  const AlgebraElement a22 = E(1, 1) - scalar(pg.group, z);
  return oracle::convolve_by_permutations(pg, a11, a22) - oracle::convolve_by_permutations(pg, E(1, 0), E(0, 1));
}

/// (1/2)(a11 a22 + a22 a11 - a12 a21 - a21 a12) for A = E + α·diag(d1, d2) - (z + c).
AlgebraElement doubledet_2x2(const PermutationGroup& pg, const Irrep& phi, const Rational& d1, const Rational& d2,
                             const Rational& z, const Rational& c) {
  const auto E = E_matrix(phi);
  const Rational a = phi.alpha();
  const AlgebraElement a11 = E(0, 0) + scalar(pg.group, a * d1 - z - c);
  const AlgebraElement a22 = E(1, 1) + scalar(pg.group, a * d2 - z - c);
  auto mul = [&](const AlgebraElement& x, const AlgebraElement& y) { return oracle::convolve_by_permutations(pg, x, y); };
  return (mul(a11, a22) + mul(a22, a11) - mul(E(0, 1), E(1, 0)) - mul(E(1, 0), E(0, 1))) * make_rational(1, 2);
}

const Rational kSamplePoints[] = {Rational(0), Rational(1), Rational(-1), make_rational(5, 2), Rational(7)};

TEST(CapelliElement, SymmetricStandardClosedForm) {
  const CatalogGroup& cg = catalog_group("S3");
  const GroupPtr& G = cg.group;
  const Irrep& phi = catalog_irreps("S3").find("std");
  const CapelliPoly c = capelli_element(phi).poly;
  ASSERT_EQ(c.degree(), 2);
  // (z² - 5z)e + z(123) + z(132).
  EXPECT_EQ(c.coeff(2), AlgebraElement::identity(G));
  EXPECT_EQ(c.coeff(1), scalar(G, -5) + named(G, "(123)") + named(G, "(132)"));
  EXPECT_TRUE(c.coeff(0).is_zero());
  for (const auto& z : kSamplePoints) EXPECT_EQ(c.evaluate(z), capelli_2x2(*cg.permutations, phi, z)) << z;
  EXPECT_EQ(to_string(c), "(z^2 - 5z)e + z(123) + z(132)");
  EXPECT_EQ(to_string(c.evaluate(-1)), "6e - (123) - (132)");
}

TEST(CapelliElement, TwoDimensionalIrrepsMatchHandExpansion) {
  for (const char* name : {"D4", "S4"})
    for (const auto& phi : catalog_irreps(name).irreps) {
      if (phi.degree() != 2) continue;
      const CatalogGroup& cg = catalog_group(name);
      const CapelliPoly c = capelli_element(phi).poly;
      for (const auto& z : kSamplePoints)
        EXPECT_EQ(c.evaluate(z), capelli_2x2(*cg.permutations, phi, z)) << name << " " << phi.label();
    }
}

TEST(CapelliElement, TrivialIsGroupSumMinusZ) {
  const GroupPtr& G = catalog_group("S3").group;
  const CapelliPoly c = capelli_element(catalog_irreps("S3").find("triv")).poly;
  AlgebraElement sum(G);
  for (ElementIndex g = 0; g < G->order(); ++g) sum = sum + AlgebraElement::basis(G, g);
  EXPECT_EQ(c.coeff(0), sum);
  EXPECT_EQ(c.coeff(1), scalar(G, -1));
  EXPECT_EQ(c.degree(), 1);
}

TEST(CapelliElement, ClosedFormFromCharacter) {
  // u^(m)(z) e + χ u^(m-1)(z), with u_i(z) = α(m - i) - z expanded by hand.
  for (const auto& name : catalog_names())
    for (const auto& phi : catalog_irreps(name).irreps) {
      const GroupPtr& G = phi.group();
      const std::size_t m = phi.degree();
      const Rational a = phi.alpha();
      AlgebraElement chi(G);
      for (ElementIndex g = 0; g < G->order(); ++g) chi.set_coeff(g, phi.character(g));
      const CapelliPoly c = capelli_element(phi).poly;
      for (const auto& z : kSamplePoints) {
        Rational um = 1, um1 = 1;
        for (std::size_t i = 1; i <= m; ++i) {
          const Rational u = a * static_cast<long>(m - i) - z;
          um *= u;
          if (i >= 2) um1 *= u;
        }
        const AlgebraElement want = scalar(G, um) + chi * um1;
        EXPECT_EQ(c.evaluate(z), want) << name << " " << phi.label() << " z=" << z;
      }
    }
}

TEST(CapelliElement, CatalogClosedFormAndSubsets) {
  for (const auto& name : catalog_names())
    for (const auto& phi : catalog_irreps(name).irreps) {
      const CheckResult r = verify_theorem_415(phi);
      EXPECT_EQ(r.status, Status::Pass) << name << " " << phi.label() << ": " << r.detail;
      EXPECT_EQ(capelli_via_subsets(phi).poly, capelli_element(phi).poly) << name << " " << phi.label();
    }
}

TEST(UFactors, Values) {
  const Irrep& phi = catalog_irreps("S4").find("std3");  // m = 3, α = 8
  EXPECT_EQ(u_factor(phi, 1).evaluate(0), Rational(16));
  EXPECT_EQ(u_factor(phi, 3).evaluate(2), Rational(-2));
  EXPECT_EQ(u_product(phi, 0), ZPoly<Rational>::constant(Rational(1)));
  // u^(2) = u_3 u_2 = (-z)(8 - z).
  const auto u2 = u_product(phi, 2);
  EXPECT_EQ(u2.evaluate(1), Rational(-7));
  EXPECT_EQ(u2.degree(), 2);
  EXPECT_THROW(u_factor(phi, 0), IndexRange);
  EXPECT_THROW(u_factor(phi, 4), IndexRange);
  EXPECT_THROW(u_product(phi, 4), IndexRange);
  EXPECT_EQ(to_string(u2), "z^2 - 8z");
}

TEST(Centrality, CatalogPasses) {
  for (const auto& name : catalog_names()) {
    const IrrepSet& set = catalog_irreps(name);
    for (const auto& phi : set.irreps) {
      const CheckResult r = verify_centrality(phi, set);
      EXPECT_EQ(r.status, Status::Pass) << name << " " << phi.label() << ": " << r.detail;
      const auto c = capelli_element(phi);
      for (const auto& coeff : c.poly.coefficients()) EXPECT_TRUE(is_central(coeff));
    }
  }
}

TEST(Conjugation, Family) {
  EXPECT_EQ(conjugation_family(1, 1).size(), 1u);
  EXPECT_EQ(conjugation_family(2, 1).size(), 3u);
  const auto f3 = conjugation_family(3, 6);
  ASSERT_EQ(f3.size(), 7u);
  const ScalarMatrix& t = f3.back();
  EXPECT_TRUE(t(0, 1).is_one());
  EXPECT_TRUE(t(0, 0).is_one());
  EXPECT_TRUE(t(1, 0).is_zero());
}

TEST(Conjugation, InvariantForDegreeAtLeastTwo) {
  for (const auto& name : catalog_names())
    for (const auto& phi : catalog_irreps(name).irreps) {
      if (phi.degree() < 2) continue;
      const CheckResult r = verify_conjugation_invariance(phi);
      EXPECT_EQ(r.status, Status::Pass) << name << " " << phi.label() << ": " << r.detail;
    }
}

TEST(Conjugation, NonPermutationMatrix) {
  const Irrep& phi = catalog_irreps("S3").find("std");
  ScalarMatrix p(2, 6);
  p(0, 0) = Cyclo(6, 2L);
  p(0, 1) = Cyclo::zeta(6, 1);
  p(1, 1) = Cyclo(6, make_rational(1, 3));
  EXPECT_EQ(verify_conjugation_invariance(phi, p).status, Status::Pass);
  EXPECT_THROW(verify_conjugation_invariance(phi, ScalarMatrix(2, 6)), SingularMatrix);
}

TEST(ChooseK, DefaultsAndRejects) {
  const Irrep& s3 = catalog_irreps("S3").find("std");  // u^(1) = -z
  EXPECT_EQ(choose_k(s3), Rational(-1));
  EXPECT_EQ(choose_k(s3, Rational(4)), Rational(4));
  try {
    choose_k(s3, Rational(0));
    FAIL() << "expected BadK";
  } catch (const BadK& e) {
    EXPECT_EQ(e.factor_index(), 2u);
  }
  const Irrep& s4 = catalog_irreps("S4").find("std3");  // u^(2) = (-z)(8 - z)
  EXPECT_THROW(choose_k(s4, Rational(8)), BadK);
  EXPECT_NO_THROW(choose_k(s4, Rational(16)));
  // Degree one has u^(0) = 1, so every k works.
  EXPECT_EQ(choose_k(catalog_irreps("S3").find("triv"), Rational(0)), Rational(0));
}

TEST(Bases, FullRankForCatalog) {
  for (const auto& name : catalog_names()) {
    const IrrepSet& set = catalog_irreps(name);
    const std::size_t classes = set.group->classes().size();
    const BasisResult c = center_basis(set);
    EXPECT_EQ(c.elements.size(), classes) << name;
    EXPECT_EQ(c.rank, classes) << name;
    EXPECT_EQ(c.report.status, Status::Pass) << name << ": " << c.report.detail;
    for (const auto& e : c.elements) EXPECT_TRUE(is_central(e));
    const BasisResult x = character_basis(set);
    EXPECT_EQ(x.rank, classes) << name;
    EXPECT_EQ(x.report.status, Status::Pass) << name;
  }
}

TEST(Bases, ExplicitK) {
  const IrrepSet& set = catalog_irreps("S3");
  const BasisResult b = center_basis(set, {{"std", Rational(2)}, {"triv", Rational(5)}});
  ASSERT_EQ(b.labels, (std::vector<std::string>{"triv", "sign", "std"}));
  // std at z = 2: (4 - 10)e + 2(123) + 2(132).
  const GroupPtr& G = set.group;
  EXPECT_EQ(b.elements[2], scalar(G, -6) + named(G, "(123)") * Rational(2) + named(G, "(132)") * Rational(2));
  EXPECT_EQ(b.rank, 3u);
  EXPECT_THROW(center_basis(set, {{"std", Rational(0)}}), BadK);
}

TEST(DetVariants, RowdetAlwaysEqual) {
  for (const auto& name : catalog_names())
    for (const auto& phi : catalog_irreps(name).irreps)
      EXPECT_TRUE(verify_det_variants(phi).rowdet_equal) << name << " " << phi.label();
}

TEST(DetVariants, DegreeOneShiftIsAlpha) {
  for (const auto& name : catalog_names())
    for (const auto& phi : catalog_irreps(name).irreps) {
      if (phi.degree() != 1) continue;
      const DetVariantResult r = verify_det_variants(phi);
      ASSERT_TRUE(r.consistent_shift.has_value()) << name << " " << phi.label();
      EXPECT_EQ(*r.consistent_shift, phi.alpha());
      EXPECT_EQ(r.report.status, Status::Measured);
    }
}

// The hand expansion of the 2×2 double determinant against C(z) at c ∈ {1, α}.
TEST(DetVariants, TwoByTwoDoubleDeterminantByHand) {
  const CatalogGroup& cg = catalog_group("S3");
  const Irrep& phi = catalog_irreps("S3").find("std");
  const CapelliPoly c = capelli_element(phi).poly;
  const DetVariantResult r = verify_det_variants(phi);
  ASSERT_EQ(r.shifts.size(), 2u);
  // ♮_σ = diag(σ(2), σ(1)).
  const std::pair<Rational, Rational> diag[] = {{Rational(2), Rational(1)}, {Rational(1), Rational(2)}};
  for (std::size_t s = 0; s < 2; ++s)
    for (const Rational& shift : {Rational(1), phi.alpha()}) {
      bool equal = true;
      for (const auto& z : kSamplePoints)
        equal = equal && doubledet_2x2(*cg.permutations, phi, diag[s].first, diag[s].second, z, shift) == c.evaluate(z);
      const auto& found = r.shifts[s].second;
      const bool reported = std::find(found.begin(), found.end(), shift) != found.end();
      EXPECT_EQ(equal, reported) << "σ #" << s << " c = " << shift;
    }
}

TEST(Rendering, PermutationLabels) {
  EXPECT_EQ(permutation_label({0, 1, 2}), "id");
  EXPECT_EQ(permutation_label({1, 0}), "(12)");
  EXPECT_EQ(permutation_label({1, 2, 0}), "(123)");
}

}  // namespace
}  // namespace capelli
