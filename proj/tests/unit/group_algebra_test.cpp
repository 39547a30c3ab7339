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

#include <capelli/catalog.hpp>
#include <capelli/errors.hpp>
#include <capelli/group_algebra.hpp>
#include <capelli/irrep_catalog.hpp>

#include "oracles.hpp"

namespace capelli {
namespace {

AlgebraElement named(const GroupPtr& g, const std::string& name) { return AlgebraElement::basis(g, *g->find(name)); }

TEST(Convolution, MatchesPermutationComposition) {
  oracle::Rng rng(0xa1);
  for (const auto& name : catalog_names()) {
    const CatalogGroup& cg = catalog_group(name);
    if (!cg.permutations) continue;
    for (int trial = 0; trial < 3; ++trial) {
      const AlgebraElement a = oracle::random_algebra(rng, cg.group), b = oracle::random_algebra(rng, cg.group);
      EXPECT_EQ(convolve(a, b), oracle::convolve_by_permutations(*cg.permutations, a, b)) << name;
      EXPECT_EQ(a * b, convolve(a, b));
    }
  }
}

TEST(Convolution, RingAxioms) {
  oracle::Rng rng(0xa2);
  for (const char* name : {"C5", "S3", "Q8", "A4"}) {
    const GroupPtr& g = catalog_group(name).group;
    for (int trial = 0; trial < 4; ++trial) {
      const AlgebraElement a = oracle::random_algebra(rng, g), b = oracle::random_algebra(rng, g),
                           c = oracle::random_algebra(rng, g);
      EXPECT_EQ((a * b) * c, a * (b * c)) << name;
      EXPECT_EQ(a * (b + c), a * b + a * c) << name;
      EXPECT_EQ((a + b) * c, a * c + b * c) << name;
      EXPECT_EQ(a * a.one_like(), a);
      EXPECT_EQ(a.one_like() * a, a);
      EXPECT_TRUE((a - a).is_zero());
      const Cyclo q = oracle::random_cyclo(rng, g->exponent());
      EXPECT_EQ((a * q) * b, a * (b * q));
    }
  }
}

TEST(Convolution, BasisProducts) {
  const GroupPtr& s3 = catalog_group("S3").group;
  EXPECT_EQ(named(s3, "(12)") * named(s3, "(12)"), AlgebraElement::identity(s3));
  EXPECT_EQ(named(s3, "(123)") * named(s3, "(123)"), named(s3, "(132)"));
  // (12)∘(123) sends 1 ↦ 1, so it is (23).
  EXPECT_EQ(named(s3, "(12)") * named(s3, "(123)"), named(s3, "(23)"));
}

TEST(Convolution, RejectsMixedGroups) {
  const AlgebraElement a = AlgebraElement::identity(catalog_group("C2").group);
  const AlgebraElement b = AlgebraElement::identity(catalog_group("C3").group);
  EXPECT_THROW(convolve(a, b), GroupMismatch);
  EXPECT_THROW(a + b, GroupMismatch);
  EXPECT_THROW(AlgebraElement(catalog_group("C2").group, {Cyclo(2)}), IndexRange);
}

TEST(Center, ClassSumsAreCentral) {
  for (const auto& name : catalog_names()) {
    const GroupPtr& g = catalog_group(name).group;
    for (std::size_t c = 0; c < g->classes().size(); ++c) {
      const AlgebraElement s = class_sum(g, g->classes().classes[c]);
      EXPECT_TRUE(is_central(s)) << name;
      const auto coords = coordinates_in_class_sums(s);
      for (std::size_t d = 0; d < coords.size(); ++d) EXPECT_EQ(coords[d], Cyclo(g->exponent(), c == d ? 1L : 0L));
    }
  }
}

TEST(Center, WitnessIsGenuine) {
  oracle::Rng rng(0xa3);
  for (const char* name : {"S3", "D4", "Q8", "S4"}) {
    const GroupPtr& g = catalog_group(name).group;
    const AlgebraElement a = oracle::random_algebra(rng, g);
    const auto w = non_central_witness(a);
    ASSERT_TRUE(w.has_value()) << name;
    const AlgebraElement h = AlgebraElement::basis(g, *w);
    EXPECT_NE(h * a, a * h);
    EXPECT_FALSE(is_central(a));
    EXPECT_THROW(coordinates_in_class_sums(a), NotCentral);
  }
  EXPECT_TRUE(is_central(oracle::random_algebra(rng, catalog_group("C6").group)));
}

TEST(Center, ClassSumRejectsNonClass) {
  const GroupPtr& s3 = catalog_group("S3").group;
  EXPECT_THROW(class_sum(s3, {*s3->find("(12)")}), NotAClass);
  EXPECT_THROW(class_sum(s3, {*s3->find("(12)"), *s3->find("(123)")}), NotAClass);
  EXPECT_NO_THROW(class_sum(s3, {*s3->find("(123)"), *s3->find("(132)")}));
}

TEST(Center, CharacterElementsAreCentral) {
  for (const auto& name : catalog_names())
    for (const auto& r : catalog_irreps(name).irreps) EXPECT_TRUE(is_central(character_element(r))) << name;
}

TEST(Rendering, Combinations) {
  const GroupPtr& s3 = catalog_group("S3").group;
  const AlgebraElement a = named(s3, "e") * Rational(6) - named(s3, "(123)") - named(s3, "(132)");
  EXPECT_EQ(to_string(a), "6e - (123) - (132)");
  EXPECT_EQ(to_string(AlgebraElement(s3)), "0");
  EXPECT_EQ(to_string(named(s3, "(12)") * make_rational(-1, 2)), "-(1/2)(12)");

  const GroupPtr& c3 = catalog_group("C3").group;
  const AlgebraElement b = AlgebraElement::identity(c3) * (Cyclo(3, 1L) + Cyclo::zeta(3, 1));
  EXPECT_EQ(to_string(b), "(1 + ζ3)e");

  const GroupPtr& q8 = catalog_group("Q8").group;
  EXPECT_EQ(to_string(named(q8, "-i") * Rational(2) + named(q8, "1")), "[1] + 2[-i]");
  EXPECT_EQ(display_name("k"), "k");
}

}  // namespace
}  // namespace capelli
