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

#include "capelli/group.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <deque>
#include <map>
#include <numeric>

#include "capelli/errors.hpp"

namespace capelli {

std::optional<ElementIndex> Group::find(std::string_view element_name) const {
  for (ElementIndex g = 0; g < names_.size(); ++g)
    if (names_[g] == element_name) return g;
  return std::nullopt;
}

namespace {

std::string triple(std::size_t a, std::size_t b, std::size_t c) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ", " + std::to_string(c) + ")";
}

}  // namespace

GroupPtr build_group_from_table(std::string name, std::vector<std::string> element_names,
                                CayleyTable table) {
  const std::size_t n = table.size();
  if (n == 0) throw NotAGroup("empty multiplication table");
  if (element_names.size() != n)
    throw NotAGroup("expected " + std::to_string(n) + " element names, got " +
                    std::to_string(element_names.size()));
  for (std::size_t g = 0; g < n; ++g) {
    if (table[g].size() != n) throw NotAGroup("row " + std::to_string(g) + " has wrong length", {g});
    for (std::size_t h = 0; h < n; ++h)
      if (table[g][h] >= n) throw NotAGroup("entry out of range at " + triple(g, h, table[g][h]), {g, h});
  }

  // Latin square: every row and column is a permutation.
  for (std::size_t g = 0; g < n; ++g) {
    std::vector<bool> row_seen(n), col_seen(n);
    for (std::size_t h = 0; h < n; ++h) {
      if (row_seen[table[g][h]]) throw NotAGroup("row " + std::to_string(g) + " repeats an entry", {g});
      if (col_seen[table[h][g]]) throw NotAGroup("column " + std::to_string(g) + " repeats an entry", {g});
      row_seen[table[g][h]] = true;
      col_seen[table[h][g]] = true;
    }
  }

  std::optional<ElementIndex> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
    if (ok) identity = e;
  }
  if (!identity) throw NotAGroup("no two-sided identity element");

  std::vector<ElementIndex> inverses(n);
  for (std::size_t g = 0; g < n; ++g) {
    std::optional<ElementIndex> inv;
    for (std::size_t h = 0; h < n && !inv; ++h)
      if (table[g][h] == *identity && table[h][g] == *identity) inv = h;
    if (!inv) throw NotAGroup("element " + std::to_string(g) + " has no inverse", {g});
    inverses[g] = *inv;
  }

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const std::size_t ab = table[a][b];
      for (std::size_t c = 0; c < n; ++c)
        if (table[ab][c] != table[a][table[b][c]])
          throw NotAGroup("associativity fails for " + triple(a, b, c), {a, b, c});
    }

  std::shared_ptr<Group> group(new Group());
  group->name_ = std::move(name);
  group->names_ = std::move(element_names);
  group->table_ = std::move(table);
  group->identity_ = *identity;
  group->inverses_ = std::move(inverses);
  group->classes_ = conjugacy_classes(*group);
  group->exponent_ = exponent(*group);
  return group;
}

ClassPartition conjugacy_classes(const Group& group) {
  const std::size_t n = group.order();
  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  ClassPartition out;
  out.class_of.assign(n, unassigned);
  for (ElementIndex h = 0; h < n; ++h) {
    if (out.class_of[h] != unassigned) continue;
    std::vector<ElementIndex> cls;
    for (ElementIndex g = 0; g < n; ++g) {
      const ElementIndex conj = group.mul(group.mul(g, h), group.inverse(g));
      if (out.class_of[conj] == unassigned) {
        out.class_of[conj] = out.classes.size();
        cls.push_back(conj);
      }
    }
    std::sort(cls.begin(), cls.end());
    out.classes.push_back(std::move(cls));
  }
  return out;
}

std::size_t element_order(const Group& group, ElementIndex g) {
  std::size_t k = 1;
  for (ElementIndex p = g; p != group.identity(); p = group.mul(p, g)) ++k;
  return k;
}

int exponent(const Group& group) {
  std::size_t result = 1;
  for (ElementIndex g = 0; g < group.order(); ++g) result = std::lcm(result, element_order(group, g));
  return static_cast<int>(result);
}

// ---------------------------------------------------------------------------

Permutation identity_permutation(std::size_t degree) {
  Permutation p(degree);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

Permutation compose(const Permutation& f, const Permutation& g) {
  Permutation out(g.size());
  for (std::size_t x = 0; x < g.size(); ++x) out[x] = f[g[x]];
  return out;
}

Permutation invert(const Permutation& p) {
  Permutation out(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) out[p[x]] = x;
  return out;
}

int permutation_sign(const Permutation& p) {
  int sign = 1;
  std::vector<bool> seen(p.size());
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    for (std::size_t x = start; !seen[x]; x = p[x]) {
      seen[x] = true;
      ++len;
    }
    if (len % 2 == 0) sign = -sign;
  }
  return sign;
}

Permutation parse_cycles(std::string_view text, std::size_t degree) {
  Permutation p = identity_permutation(degree);
  auto bad = [&](const std::string& why) {
    return ParseError("bad cycle notation '" + std::string(text) + "': " + why);
  };
  std::size_t i = 0;
  auto skip_space = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  skip_space();
  if (text.substr(i) == "e") return p;
  while (i < text.size()) {
    if (text[i] != '(') throw bad("expected '('");
    const std::size_t close = text.find(')', i);
    if (close == std::string_view::npos) throw bad("unbalanced parenthesis");
    const std::string_view body = text.substr(i + 1, close - i - 1);
    std::vector<std::size_t> cycle;
    const bool separated = body.find_first_of(" ,") != std::string_view::npos;
    if (!separated && body.size() > 1 && degree >= 10) throw bad("compact form needs degree < 10");
    std::size_t j = 0;
    while (j < body.size()) {
      if (body[j] == ' ' || body[j] == ',') {
        ++j;
        continue;
      }
      if (!std::isdigit(static_cast<unsigned char>(body[j]))) throw bad("non-digit in cycle");
      std::size_t end = j + 1;
      if (separated)
        while (end < body.size() && std::isdigit(static_cast<unsigned char>(body[end]))) ++end;
      const std::size_t point = std::stoul(std::string(body.substr(j, end - j)));
      if (point < 1 || point > degree) throw bad("point out of range");
      cycle.push_back(point - 1);
      j = end;
    }
    std::vector<bool> in_cycle(degree);
    for (std::size_t x : cycle) {
      if (in_cycle[x]) throw bad("repeated point in a cycle");
      in_cycle[x] = true;
    }
    // Cycles are composed right to left, matching compose().
    Permutation c = identity_permutation(degree);
    for (std::size_t k = 0; k < cycle.size(); ++k) c[cycle[k]] = cycle[(k + 1) % cycle.size()];
    p = compose(p, c);
    i = close + 1;
    skip_space();
  }
  return p;
}

std::string cycle_notation(const Permutation& p) {
  const bool compact = p.size() < 10;
  std::string out;
  std::vector<bool> seen(p.size());
  for (std::size_t start = 0; start < p.size(); ++start) {
    if (seen[start] || p[start] == start) continue;
    out += "(";
    bool first = true;
    for (std::size_t x = start; !seen[x]; x = p[x]) {
      seen[x] = true;
      if (!first && !compact) out += ",";
      out += std::to_string(x + 1);
      first = false;
    }
    out += ")";
  }
  return out.empty() ? "e" : out;
}

std::size_t default_order_limit() {
  if (const char* env = std::getenv("CAPELLI_LAB_MAX_ORDER")) {
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return v;
  }
  return 10000;
}

PermutationGroup build_group_from_permutations(std::string name, std::size_t degree,
                                               const std::vector<Permutation>& generators,
                                               std::optional<std::size_t> order_limit) {
  const std::size_t limit = order_limit.value_or(default_order_limit());
  for (const auto& g : generators) {
    if (g.size() != degree) throw ParseError("generator has wrong degree");
    std::vector<bool> hit(degree);
    for (std::size_t x : g) {
      if (x >= degree || hit[x]) throw ParseError("generator is not a permutation");
      hit[x] = true;
    }
  }

  std::vector<Permutation> elements{identity_permutation(degree)};
  std::map<Permutation, std::size_t> index{{elements[0], 0}};
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t cur = queue.front();
    queue.pop_front();
    for (const auto& s : generators) {
      Permutation next = compose(elements[cur], s);
      if (index.contains(next)) continue;
      if (elements.size() >= limit)
        throw ClosureTooLarge("closure of " + name + " exceeds order limit " + std::to_string(limit));
      index.emplace(next, elements.size());
      queue.push_back(elements.size());
      elements.push_back(std::move(next));
    }
  }

  const std::size_t n = elements.size();
  CayleyTable table(n, std::vector<ElementIndex>(n));
  for (std::size_t g = 0; g < n; ++g)
    for (std::size_t h = 0; h < n; ++h) table[g][h] = index.at(compose(elements[g], elements[h]));
  std::vector<std::string> names;
  names.reserve(n);
  for (const auto& e : elements) names.push_back(cycle_notation(e));

  PermutationGroup out;
  out.group = build_group_from_table(std::move(name), std::move(names), std::move(table));
  out.degree = degree;
  out.elements = std::move(elements);
  return out;
}

}  // namespace capelli
