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

#include "capelli/irrep_catalog.hpp"

#include <array>
#include <functional>
#include <map>
#include <mutex>

#include "capelli/catalog.hpp"
#include "capelli/errors.hpp"

namespace capelli {

namespace {

using MatrixOf = std::function<ScalarMatrix(const Permutation&)>;

ScalarMatrix scalar(const Cyclo& c) {
  ScalarMatrix m(1, c.conductor());
  m(0, 0) = c;
  return m;
}

Irrep from_action(const std::string& label, const CatalogGroup& cg, const MatrixOf& f) {
  std::vector<ScalarMatrix> mats;
  for (const auto& p : cg.permutations->elements) mats.push_back(f(p));
  return Irrep(label, cg.group, std::move(mats));
}

struct Affine {
  long epsilon;  // ±1
  long shift;
};

/// π(x) = εx + c on Z_n.
Affine affine_form(const Permutation& p) {
  const long n = static_cast<long>(p.size());
  const long c = static_cast<long>(p[0]);
  const long eps = ((static_cast<long>(p[1]) - c) % n + n) % n;
  const Affine a{eps == 1 ? 1 : -1, c};
  for (long x = 0; x < n; ++x)
    if (static_cast<long>(p[x]) != (((a.epsilon * x + c) % n) + n) % n)
      throw InvalidIrrep("permutation is not affine on Z_" + std::to_string(n));
  return a;
}

/// The action f ↦ f∘π⁻¹ on span{ζ^x, ζ^{-x}} of functions on Z_n.
ScalarMatrix affine_rep(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  const Affine a = affine_form(p);
  ScalarMatrix m(2, n);
  // f_1 ↦ ζ^{-εc} f_ε and f_{-1} ↦ ζ^{εc} f_{-ε}.
  const std::size_t img1 = a.epsilon == 1 ? 0 : 1;
  m(img1, 0) = Cyclo::zeta(n, -a.epsilon * a.shift);
  m(1 - img1, 1) = Cyclo::zeta(n, a.epsilon * a.shift);
  return m;
}

/// Action on the three pairings {01|23}, {02|13}, {03|12} of four points,
/// pairing k being the one that matches 0 with k+1.
Permutation pairing_action(const Permutation& p) {
  Permutation tau(3);
  for (std::size_t k = 0; k < 3; ++k) {
    const std::size_t x = p[0], y = p[k + 1];
    std::size_t partner;
    if (x == 0)
      partner = y;
    else if (y == 0)
      partner = x;
    else
      partner = 6 - x - y;  // the point outside {0, x, y}
    tau[k] = partner - 1;
  }
  return tau;
}

/// The linear map sending tetrahedron vertex v_i to v_{π(i)}.
ScalarMatrix vertex_rep(const Permutation& p) {
  static constexpr int v[4][3] = {{1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  ScalarMatrix m(3, 1);
  for (std::size_t col = 0; col < 3; ++col)
    for (std::size_t row = 0; row < 3; ++row)
      m(row, col) = Cyclo(1, static_cast<long>((v[p[0]][row] + v[p[col + 1]][row]) / 2));
  return m;
}

ScalarMatrix negate(const ScalarMatrix& m) {
  ScalarMatrix out(m.size(), m.conductor());
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m.size(); ++j) out(i, j) = -m(i, j);
  return out;
}

ScalarMatrix sign_times(const Permutation& p, const ScalarMatrix& m) {
  return permutation_sign(p) > 0 ? m : negate(m);
}

Cyclo rational(long v) { return Cyclo(1, v); }

IrrepSet cyclic(const CatalogGroup& cg) {
  const int n = static_cast<int>(cg.permutations->degree);
  IrrepSet set{cg.group, {}};
  for (int k = 0; k < n; ++k)
    set.irreps.push_back(from_action("chi" + std::to_string(k), cg, [=](const Permutation& p) {
      return scalar(Cyclo::zeta(n, static_cast<long>(k) * static_cast<long>(p[0])));
    }));
  return set;
}

IrrepSet klein(const CatalogGroup& cg) {
  auto a = [](const Permutation& p) { return p[0] == 1 ? -1L : 1L; };
  auto b = [](const Permutation& p) { return p[2] == 3 ? -1L : 1L; };
  IrrepSet set{cg.group, {}};
  set.irreps.push_back(from_action("triv", cg, [](const Permutation&) { return scalar(rational(1)); }));
  set.irreps.push_back(from_action("a", cg, [=](const Permutation& p) { return scalar(rational(a(p))); }));
  set.irreps.push_back(from_action("b", cg, [=](const Permutation& p) { return scalar(rational(b(p))); }));
  set.irreps.push_back(from_action("ab", cg, [=](const Permutation& p) { return scalar(rational(a(p) * b(p))); }));
  return set;
}

IrrepSet symmetric3(const CatalogGroup& cg) {
  IrrepSet set{cg.group, {}};
  set.irreps.push_back(from_action("triv", cg, [](const Permutation&) { return scalar(rational(1)); }));
  set.irreps.push_back(
      from_action("sign", cg, [](const Permutation& p) { return scalar(rational(permutation_sign(p))); }));
  set.irreps.push_back(from_action("std", cg, affine_rep));
  return set;
}

IrrepSet dihedral4(const CatalogGroup& cg) {
  auto eps = [](const Permutation& p) { return affine_form(p).epsilon; };
  auto par = [](const Permutation& p) { return affine_form(p).shift % 2 ? -1L : 1L; };
  IrrepSet set{cg.group, {}};
  set.irreps.push_back(from_action("triv", cg, [](const Permutation&) { return scalar(rational(1)); }));
  set.irreps.push_back(from_action("eps", cg, [=](const Permutation& p) { return scalar(rational(eps(p))); }));
  set.irreps.push_back(from_action("par", cg, [=](const Permutation& p) { return scalar(rational(par(p))); }));
  set.irreps.push_back(
      from_action("eps.par", cg, [=](const Permutation& p) { return scalar(rational(eps(p) * par(p))); }));
  set.irreps.push_back(from_action("std", cg, affine_rep));
  return set;
}

IrrepSet alternating4(const CatalogGroup& cg) {
  // The pairing action of A4 is a rotation k ↦ k + r of Z_3.
  auto r = [](const Permutation& p) { return static_cast<long>(pairing_action(p)[0]); };
  IrrepSet set{cg.group, {}};
  set.irreps.push_back(from_action("triv", cg, [](const Permutation&) { return scalar(rational(1)); }));
  set.irreps.push_back(from_action("omega", cg, [=](const Permutation& p) { return scalar(Cyclo::zeta(3, r(p))); }));
  set.irreps.push_back(
      from_action("omega2", cg, [=](const Permutation& p) { return scalar(Cyclo::zeta(3, 2 * r(p))); }));
  set.irreps.push_back(from_action("std", cg, vertex_rep));
  return set;
}

IrrepSet symmetric4(const CatalogGroup& cg) {
  IrrepSet set{cg.group, {}};
  set.irreps.push_back(from_action("triv", cg, [](const Permutation&) { return scalar(rational(1)); }));
  set.irreps.push_back(
      from_action("sign", cg, [](const Permutation& p) { return scalar(rational(permutation_sign(p))); }));
  set.irreps.push_back(
      from_action("std2", cg, [](const Permutation& p) { return affine_rep(pairing_action(p)); }));
  set.irreps.push_back(from_action("std3", cg, vertex_rep));
  set.irreps.push_back(
      from_action("std3.sign", cg, [](const Permutation& p) { return sign_times(p, vertex_rep(p)); }));
  return set;
}

IrrepSet quaternion(const CatalogGroup& cg) {
  const GroupPtr& G = cg.group;
  // Signs of the three nontrivial linear characters on i, j, k.
  const std::array<std::array<long, 4>, 3> signs{{{1, 1, -1, -1}, {1, -1, 1, -1}, {1, -1, -1, 1}}};
  const char* labels[3] = {"chi_i", "chi_j", "chi_k"};
  IrrepSet set{G, {}};
  {
    std::vector<ScalarMatrix> mats(G->order(), scalar(rational(1)));
    set.irreps.emplace_back("triv", G, std::move(mats));
  }
  for (std::size_t c = 0; c < 3; ++c) {
    std::vector<ScalarMatrix> mats;
    for (ElementIndex g = 0; g < G->order(); ++g) mats.push_back(scalar(rational(signs[c][g / 2])));
    set.irreps.emplace_back(labels[c], G, std::move(mats));
  }

  const Cyclo one(4, 1L), i = Cyclo::zeta(4, 1), zero(4);
  auto mat = [](Cyclo a, Cyclo b, Cyclo c, Cyclo d) {
    ScalarMatrix m(2, 4);
    m(0, 0) = a;
    m(0, 1) = b;
    m(1, 0) = c;
    m(1, 1) = d;
    return m;
  };
  const ScalarMatrix units[4] = {
      mat(one, zero, zero, one),  // 1
      mat(i, zero, zero, -i),     // i
      mat(zero, -one, one, zero), // j
      mat(zero, -i, -i, zero),    // k = ij
  };
  std::vector<ScalarMatrix> mats;
  for (ElementIndex g = 0; g < G->order(); ++g) {
    const ScalarMatrix& u = units[g / 2];
    mats.push_back(g % 2 ? negate(u) : u);
  }
  set.irreps.emplace_back("std", G, std::move(mats));
  return set;
}

IrrepSet build(std::string_view name) {
  const CatalogGroup& cg = catalog_group(name);
  if (name.size() == 2 && name[0] == 'C') return cyclic(cg);
  if (name == "V4") return klein(cg);
  if (name == "S3") return symmetric3(cg);
  if (name == "D4") return dihedral4(cg);
  if (name == "Q8") return quaternion(cg);
  if (name == "A4") return alternating4(cg);
  if (name == "S4") return symmetric4(cg);
  throw UnknownName("no irreps for '" + std::string(name) + "'");
}

}  // namespace

const IrrepSet& catalog_irreps(std::string_view group_name) {
  static std::mutex mutex;
  static std::map<std::string, IrrepSet, std::less<>> cache;
  std::lock_guard lock(mutex);
  auto it = cache.find(group_name);
  if (it == cache.end()) it = cache.emplace(std::string(group_name), build(group_name)).first;
  return it->second;
}

}  // namespace capelli
