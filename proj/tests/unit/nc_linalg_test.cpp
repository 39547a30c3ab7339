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
#include <capelli/nc_linalg.hpp>

#include "oracles.hpp"

namespace capelli {
namespace {

using oracle::FreeAlg;

static_assert(Ring<FreeAlg>);
static_assert(Ring<Rational>);
static_assert(Ring<AlgebraElement>);
static_assert(Ring<ZPoly<AlgebraElement>>);

/// Matrix of distinct letters 'a', 'b', ... in row-major order.
RingMatrix<FreeAlg> letters(std::size_t m) {
  RingMatrix<FreeAlg> a(m, FreeAlg());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a(i, j) = FreeAlg::letter(static_cast<char>('a' + i * m + j));
  return a;
}

FreeAlg word(const std::string& w, long coeff = 1) {
  FreeAlg out = FreeAlg::scalar(1);
  for (char c : w) out = out * FreeAlg::letter(c);
  return out * Rational(coeff);
}

TEST(Determinants, TwoByTwoWordOrder) {
  const auto a = letters(2);  // a b / c d
  EXPECT_EQ(coldet(a), word("ad") - word("cb"));
  EXPECT_EQ(rowdet(a), word("ad") - word("bc"));
  EXPECT_EQ(doubledet(a), (word("ad") + word("da") - word("bc") - word("cb")) * make_rational(1, 2));
}

TEST(Determinants, ThreeByThreeColumnOrder) {
  const auto a = letters(3);  // a b c / d e f / g h i
  const FreeAlg want = word("aei") - word("ahf") - word("dbi") + word("dhc") + word("gbf") - word("gec");
  EXPECT_EQ(coldet(a), want);
  const FreeAlg row = word("aei") - word("afh") - word("bdi") + word("bfg") + word("cdh") - word("ceg");
  EXPECT_EQ(rowdet(a), row);
}

TEST(Determinants, RowdetIsColdetOfTranspose) {
  for (std::size_t m = 1; m <= 4; ++m) EXPECT_EQ(rowdet(letters(m)), coldet(letters(m).transpose())) << m;
}

TEST(Determinants, DoubledetTermCount) {
  // Each (σ, τ) pair spells a different word of distinct letters.
  EXPECT_EQ(doubledet(letters(3)).terms().size(), 36u);
}

Rational scalar_det3(const RingMatrix<Rational>& a) {
  return a(0, 0) * (a(1, 1) * a(2, 2) - a(1, 2) * a(2, 1)) - a(0, 1) * (a(1, 0) * a(2, 2) - a(1, 2) * a(2, 0)) +
         a(0, 2) * (a(1, 0) * a(2, 1) - a(1, 1) * a(2, 0));
}

TEST(Determinants, CommutingEntriesAgree) {
  oracle::Rng rng(0xd1);
  for (int trial = 0; trial < 30; ++trial) {
    RingMatrix<Rational> a(3, Rational(0));
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) a(i, j) = oracle::random_rational(rng);
    const Rational d = scalar_det3(a);
    EXPECT_EQ(coldet(a), d);
    EXPECT_EQ(rowdet(a), d);
    EXPECT_EQ(doubledet(a), d);
  }
}

TEST(Determinants, CentralGroupAlgebraEntriesAgree) {
  oracle::Rng rng(0xd2);
  const GroupPtr& s3 = catalog_group("S3").group;
  auto random_central = [&] {
    AlgebraElement a(s3);
    for (const auto& cls : s3->classes().classes) {
      const Cyclo c = oracle::random_cyclo(rng, 6, 3);
      a = a + class_sum(s3, cls) * c;
    }
    return a;
  };
  for (int trial = 0; trial < 3; ++trial) {
    RingMatrix<AlgebraElement> a(2, AlgebraElement(s3));
    for (std::size_t i = 0; i < 2; ++i)
      for (std::size_t j = 0; j < 2; ++j) a(i, j) = random_central();
    EXPECT_EQ(coldet(a), rowdet(a));
    EXPECT_EQ(coldet(a), doubledet(a));
  }
}

TEST(Determinants, SizeLimits) {
  EXPECT_THROW(coldet(letters(7)), SizeLimit);
  EXPECT_THROW(rowdet(letters(3), 2), SizeLimit);
  EXPECT_THROW(coldet(RingMatrix<Rational>(0, Rational(0))), IndexRange);
  EXPECT_THROW(signed_permutations(9), SizeLimit);
}

TEST(Permutations, Enumeration) {
  const auto& perms = signed_permutations(4);
  ASSERT_EQ(perms.size(), 24u);
  int sign_sum = 0;
  for (const auto& p : perms) sign_sum += p.sign;
  EXPECT_EQ(sign_sum, 0);
  EXPECT_EQ(perms.front().images, (std::vector<std::size_t>{0, 1, 2, 3}));
  EXPECT_EQ(perms.front().sign, 1);
  EXPECT_EQ(perms[1].images, (std::vector<std::size_t>{0, 1, 3, 2}));
  EXPECT_EQ(perms[1].sign, -1);
}

TEST(ShiftMatrices, Values) {
  using V = std::vector<Rational>;
  EXPECT_EQ(natural_shift_values(3), (V{2, 1, 0}));
  EXPECT_EQ(natural_star_values(3), (V{0, 1, 2}));
  // σ = id gives diag(m, ..., 1); σ = (12) in S_2 gives diag(1, 2).
  EXPECT_EQ(natural_sigma_values({0, 1, 2}), (V{3, 2, 1}));
  EXPECT_EQ(natural_sigma_values({1, 0}), (V{1, 2}));
  const auto d = natural_shift(2, Rational(0));
  EXPECT_EQ(d(0, 0), Rational(1));
  EXPECT_EQ(d(1, 1), Rational(0));
  EXPECT_EQ(d(0, 1), Rational(0));
}

TEST(ZPoly, Arithmetic) {
  using P = ZPoly<Rational>;
  const P z = P::variable(Rational(0));
  const P one = P::constant(Rational(1));
  const P p = (z - one) * (z + one);  // z² - 1
  EXPECT_EQ(p.degree(), 2);
  EXPECT_EQ(p.coeff(0), Rational(-1));
  EXPECT_EQ(p.coeff(1), Rational(0));
  EXPECT_EQ(p.coeff(2), Rational(1));
  EXPECT_EQ(p.coeff(7), Rational(0));
  EXPECT_EQ(p.evaluate(make_rational(1, 2)), make_rational(-3, 4));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ((p - p).degree(), -1);
  EXPECT_EQ(-p * Rational(2), P(Rational(0), {Rational(2), Rational(0), Rational(-2)}));
}

TEST(ZPoly, NoncommutativeCoefficients) {
  using P = ZPoly<FreeAlg>;
  const FreeAlg a = FreeAlg::letter('a'), b = FreeAlg::letter('b');
  const P pa = P(a, {a, a});  // a + a z
  const P pb = P::constant(b);
  EXPECT_EQ(pa * pb, P(a, {word("ab"), word("ab")}));
  EXPECT_EQ(pb * pa, P(a, {word("ba"), word("ba")}));
  EXPECT_EQ(times_right(pa, b), pa * pb);
  const auto lifted = lift(ZPoly<Rational>(Rational(0), {Rational(3), Rational(1)}), a);
  EXPECT_EQ(lifted.coeff(0), FreeAlg::scalar(3));
}

TEST(ShiftedZMatrix, Entries) {
  const auto a = letters(2);
  const std::vector<Rational> shift{Rational(5), Rational(0)};
  const auto zm = shifted_z_matrix(a, shift, Rational(1));
  // a + 5 - (z + 1) on the diagonal, b off it.
  EXPECT_EQ(zm(0, 0).coeff(0), word("a") + FreeAlg::scalar(4));
  EXPECT_EQ(zm(0, 0).coeff(1), FreeAlg::scalar(-1));
  EXPECT_EQ(zm(0, 1).degree(), 0);
  EXPECT_EQ(zm(0, 1).coeff(0), word("b"));
  EXPECT_THROW(shifted_z_matrix(a, std::vector<Rational>{Rational(1)}), IndexRange);

  // coldet over the z-polynomials: (a + 4 - z)(d - 1 - z) - c b.
  const auto det = coldet(zm);
  EXPECT_EQ(det.coeff(2), FreeAlg::scalar(1));
  EXPECT_EQ(det.coeff(1), -(word("a") + word("d")) - FreeAlg::scalar(3));
  EXPECT_EQ(det.coeff(0), word("ad") - word("a") + word("d") * Rational(4) - FreeAlg::scalar(4) - word("cb"));
}

TEST(RingMatrix, ProductOrder) {
  const auto a = letters(2);
  const auto p = a * a;
  EXPECT_EQ(p(0, 1), word("ab") + word("bd"));
  EXPECT_EQ(p(1, 0), word("ca") + word("dc"));
  EXPECT_EQ(RingMatrix<FreeAlg>::identity(2, FreeAlg()) * a, a);
}

}  // namespace
}  // namespace capelli
