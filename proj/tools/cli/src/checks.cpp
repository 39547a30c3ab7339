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

#include "capelli_cli/checks.hpp"

#include <algorithm>
#include <chrono>
#include <map>

#include <capelli/capelli_center.hpp>
#include <capelli/errors.hpp>
#include <capelli/weyl.hpp>

namespace capelli::cli {

namespace {

CheckResult skipped(const std::string& check, const Irrep& irrep, const std::string& why) {
  return {check, irrep.label(), Status::Skipped, why};
}

CheckResult combine(const std::string& name, const std::string& irrep, const std::vector<CheckResult>& parts) {
  std::string detail;
  bool ok = true;
  for (const auto& p : parts) {
    detail += (detail.empty() ? "" : "; ") + p.detail;
    ok = ok && !p.failed();
  }
  return make_result(name, irrep, ok, detail);
}

CheckResult weyl_relations(const CheckContext&, const Irrep* irrep) {
  if (irrep->degree() > kMaxRepWeylDegree)
    return skipped("weyl-relations", *irrep, "degree " + std::to_string(irrep->degree()) + " > 2");
  const auto w = build_rep(*irrep);
  return combine("weyl-relations", irrep->label(), {verify_rep_relations(w), verify_pi_relations(w)});
}

CheckResult weyl_capelli(const CheckContext&, const Irrep* irrep) {
  if (irrep->degree() > kMaxRepWeylDegree)
    return skipped("weyl-capelli", *irrep, "degree " + std::to_string(irrep->degree()) + " > 2");
  auto r = verify_capelli(build_rep(*irrep));
  r.irrep = irrep->label();
  return r;
}

CheckResult weyl_central(const CheckContext&, const Irrep* irrep) {
  if (irrep->degree() > kMaxRepWeylDegree)
    return skipped("weyl-central", *irrep, "degree " + std::to_string(irrep->degree()) + " > 2");
  auto r = verify_C_properties(build_rep(*irrep));
  r.irrep = irrep->label();
  return r;
}

CheckResult thm_m(const CheckContext&, const Irrep* irrep) {
  if (irrep->degree() > 2) return skipped("thm-M", *irrep, "degree " + std::to_string(irrep->degree()) + " > 2");
  return verify_theorem_M(*irrep);
}

CheckResult basis_415(const CheckContext& ctx, const Irrep*) {
  std::map<std::string, Rational> k;
  if (ctx.k)
    for (const auto& r : ctx.irreps.irreps) k.emplace(r.label(), *ctx.k);
  try {
    return center_basis(ctx.irreps, k).report;
  } catch (const BadK& e) {
    return make_result("basis-415", "*", false, e.what());
  }
}

}  // namespace

const std::vector<CheckSpec>& check_registry() {
  static const std::vector<CheckSpec> registry{
      {"schur", false, [](const CheckContext& c, const Irrep*) { return verify_schur_products(c.irreps); }},
      {"e-basis", false, [](const CheckContext& c, const Irrep*) { return verify_E_basis(c.irreps); }},
      {"thm415", true, [](const CheckContext&, const Irrep* r) { return verify_theorem_415(*r); }},
      {"central", true, [](const CheckContext& c, const Irrep* r) { return verify_centrality(*r, c.irreps); }},
      {"conj-inv", true, [](const CheckContext&, const Irrep* r) { return verify_conjugation_invariance(*r); }},
      {"basis-415", false, basis_415},
      {"basis-char", false, [](const CheckContext& c, const Irrep*) { return character_basis(c.irreps).report; }},
      {"det-variants", true, [](const CheckContext&, const Irrep* r) { return verify_det_variants(*r).report; }},
      {"weyl-relations", true, weyl_relations},
      {"weyl-capelli", true, weyl_capelli},
      {"weyl-central", true, weyl_central},
      {"thm-M", true, thm_m},
  };
  return registry;
}

std::vector<std::string> parse_check_list(std::string_view list) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= list.size()) {
    std::size_t end = list.find(',', start);
    if (end == std::string_view::npos) end = list.size();
    std::string name(list.substr(start, end - start));
    while (!name.empty() && name.front() == ' ') name.erase(name.begin());
    while (!name.empty() && name.back() == ' ') name.pop_back();
    if (name == "all") {
      for (const auto& spec : check_registry()) out.push_back(spec.name);
    } else if (!name.empty()) {
      bool known = false;
      for (const auto& spec : check_registry()) known = known || spec.name == name;
      if (!known) throw UnknownName("unknown check '" + name + "'");
      out.push_back(name);
    }
    start = end + 1;
  }
  if (out.empty()) throw UnknownName("empty check list");
  // Drop repeats, keeping first occurrences.
  std::vector<std::string> unique;
  for (auto& n : out)
    if (std::find(unique.begin(), unique.end(), n) == unique.end()) unique.push_back(std::move(n));
  return unique;
}

Report run_checks(const CheckContext& ctx, const std::vector<std::string>& names,
                  const std::optional<std::string>& irrep_label) {
  Report report{tool_version(), ctx.group->name(), {}};
  std::vector<const Irrep*> targets;
  if (irrep_label)
    targets.push_back(&ctx.irreps.find(*irrep_label));
  else
    for (const auto& r : ctx.irreps.irreps) targets.push_back(&r);

  auto run_one = [&](const CheckSpec& spec, const Irrep* irrep) {
    const std::string label = irrep ? irrep->label() : "*";
    const auto t0 = std::chrono::steady_clock::now();
    CheckResult result;
    try {
      result = spec.run(ctx, irrep);
    } catch (const SizeLimit& e) {
      result = {spec.name, label, Status::Skipped, e.what()};
    } catch (const std::exception& e) {
      result = {spec.name, label, Status::Fail, std::string("error: ") + e.what()};
    }
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    report.checks.push_back({spec.name, label, result.status, result.detail, ms});
  };

  for (const auto& name : names)
    for (const auto& spec : check_registry()) {
      if (spec.name != name) continue;
      if (spec.per_irrep)
        for (const Irrep* r : targets) run_one(spec, r);
      else
        run_one(spec, nullptr);
    }
  report.sort();
  return report;
}

}  // namespace capelli::cli
