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

#include "capelli_cli/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include <capelli/capelli_center.hpp>
#include <capelli/catalog.hpp>
#include <capelli/errors.hpp>
#include <capelli/irrep_catalog.hpp>
#include <capelli/serialize.hpp>

#include "capelli_cli/checks.hpp"
#include "capelli_cli/report_json.hpp"

namespace capelli::cli {

namespace {

/// Selector and file problems that map to exit code 2.
class SelectorError : public Error {
 public:
  using Error::Error;
};

IrrepSet rebind(const IrrepSet& set, const GroupPtr& group) {
  IrrepSet out{group, {}};
  for (const auto& r : set.irreps) out.irreps.emplace_back(r.label(), group, r.matrices());
  return out;
}

void require_file(const std::string& path) {
  if (!std::filesystem::is_regular_file(path)) throw SelectorError("no such file: " + path);
}

}  // namespace

ResolvedGroup resolve_group(const RunConfig& config) {
  ResolvedGroup out;
  if (config.group_file) {
    require_file(*config.group_file);
    try {
      out.group = load_group_file(*config.group_file);
    } catch (const ParseError& e) {
      throw InvalidIrrep(std::string("invalid group file: ") + e.what());
    }
    if (out.group->order() > default_order_limit())
      throw SelectorError("group order " + std::to_string(out.group->order()) + " exceeds the order limit " +
                          std::to_string(default_order_limit()));
    out.irreps.group = out.group;
    const auto& names = catalog_names();
    if (std::find(names.begin(), names.end(), out.group->name()) != names.end()) {
      const GroupPtr& cat = catalog_group(out.group->name()).group;
      if (cat->element_names() == out.group->element_names() && cat->table() == out.group->table())
        out.irreps = rebind(catalog_irreps(cat->name()), out.group);
    }
  } else if (config.group_name) {
    const CatalogGroup& cg = catalog_group(*config.group_name);
    if (cg.group->order() > default_order_limit())
      throw SelectorError("group order " + std::to_string(cg.group->order()) + " exceeds the order limit " +
                          std::to_string(default_order_limit()));
    out.group = cg.group;
    out.irreps = catalog_irreps(*config.group_name);
  } else {
    throw SelectorError("one of --group or --group-file is required");
  }
  if (config.irrep_file) {
    require_file(*config.irrep_file);
    out.irreps = IrrepSet{out.group, load_irrep_file(*config.irrep_file, out.group)};
  }
  return out;
}

int cmd_list(std::ostream& out) {
  for (const auto& name : catalog_names()) {
    const auto& g = *catalog_group(name).group;
    const auto& set = catalog_irreps(name);
    std::string degrees;
    for (const auto& r : set.irreps) degrees += (degrees.empty() ? "" : ",") + std::to_string(r.degree());
    out << std::left << std::setw(4) << name << " order " << std::setw(3) << g.order() << " classes "
        << std::setw(3) << g.classes().size() << " degrees [" << degrees << "]\n";
  }
  return kOk;
}

int cmd_capelli(const RunConfig& config, std::ostream& out, std::ostream&) {
  const ResolvedGroup rg = resolve_group(config);
  std::vector<const Irrep*> targets;
  if (config.irrep)
    targets.push_back(&rg.irreps.find(*config.irrep));
  else
    for (const auto& r : rg.irreps.irreps) targets.push_back(&r);

  json doc = {{"group", rg.group->name()}, {"irreps", json::array()}};
  for (const Irrep* r : targets) {
    const CapelliPoly poly = capelli_element(*r).poly;
    if (config.k) {
      const AlgebraElement value = poly.evaluate(*config.k);
      if (config.format == Format::Json)
        doc["irreps"].push_back({{"irrep", r->label()}, {"at", to_string(*config.k)}, {"value", algebra_to_json(value)}});
      else
        out << r->label() << ": C(" << to_string(*config.k) << ") = " << to_string(value) << "\n";
    } else {
      if (config.format == Format::Json) {
        json coeffs = json::array();
        for (const auto& c : poly.coefficients()) coeffs.push_back(algebra_to_json(c));
        doc["irreps"].push_back({{"irrep", r->label()}, {"text", to_string(poly)}, {"coefficients", coeffs}});
      } else {
        out << r->label() << ": C(z) = " << to_string(poly) << "\n";
      }
    }
  }
  if (config.format == Format::Json) out << doc.dump(2) << "\n";
  return kOk;
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream&) {
  const ResolvedGroup rg = resolve_group(config);
  if (config.irrep) rg.irreps.find(*config.irrep);
  const CheckContext ctx{rg.group, rg.irreps, config.k};
  const Report report = run_checks(ctx, config.checks, config.irrep);
  const json doc = report_to_json(report);

  if (config.out_path) {
    std::ofstream file(*config.out_path);
    if (!file) throw SelectorError("cannot write " + *config.out_path);
    file << doc.dump(2) << "\n";
  }
  if (config.format == Format::Json) {
    out << doc.dump(2) << "\n";
  } else {
    std::size_t counts[4] = {0, 0, 0, 0};
    for (const auto& e : report.checks) {
      ++counts[static_cast<int>(e.status)];
      out << std::left << std::setw(9) << to_string(e.status) << std::setw(15) << e.name << std::setw(10) << e.irrep
          << e.detail << "\n";
    }
    out << report.checks.size() << " results: " << counts[0] << " pass, " << counts[1] << " fail, " << counts[2]
        << " measured, " << counts[3] << " skipped\n";
  }
  return report.any_failed() ? kChecksFailed : kOk;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Capelli elements of finite group algebras", "capelli-lab"};
  app.require_subcommand(1);
  app.set_version_flag("--version", tool_version());

  RunConfig config;
  std::string format = "text";
  std::string checks;
  std::string k_text;

  auto* list = app.add_subcommand("list", "List catalog groups");

  auto* capelli = app.add_subcommand("capelli", "Print Capelli elements C(z)");
  auto* cap_group = capelli->add_option("--group", config.group_name, "Catalog group name");
  auto* cap_file = capelli->add_option("--group-file", config.group_file, "Group JSON file");
  cap_group->excludes(cap_file);
  capelli->add_option("--irrep-file", config.irrep_file, "Irrep JSON file");
  capelli->add_option("--irrep", config.irrep, "Irrep label (default: all)");
  capelli->add_option("--at", k_text, "Evaluate at z = K (a rational)");
  capelli->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* verify = app.add_subcommand("verify", "Run verification checks");
  auto* ver_group = verify->add_option("--group", config.group_name, "Catalog group name");
  auto* ver_file = verify->add_option("--group-file", config.group_file, "Group JSON file");
  ver_group->excludes(ver_file);
  verify->add_option("--irrep-file", config.irrep_file, "Irrep JSON file (replaces the catalog irreps)");
  verify->add_option("--irrep", config.irrep, "Restrict per-irrep checks to one label");
  verify->add_option("--checks", checks, "Comma-separated check names, or all")->required();
  verify->add_option("--k", k_text, "Evaluation point for basis-415 (default -1)");
  verify->add_option("--out", config.out_path, "Write the JSON report here");
  verify->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      if (e.get_name() == "CallForVersion")
        out << tool_version() << "\n";
      else
        out << (app.got_subcommand(verify) ? verify->help() : app.got_subcommand(capelli) ? capelli->help() : app.help());
      return kOk;
    }
    err << "capelli-lab: " << e.what() << "\n";
    return kBadSelector;
  }

  config.format = format == "json" ? Format::Json : Format::Text;
  try {
    if (!k_text.empty()) config.k = parse_rational(k_text);
    if (*list) {
      config.command = "list";
      return cmd_list(out);
    }
    if (*capelli) {
      config.command = "capelli";
      return cmd_capelli(config, out, err);
    }
    config.command = "verify";
    config.checks = parse_check_list(checks);
    return cmd_verify(config, out, err);
  } catch (const InvalidIrrep& e) {
    err << "capelli-lab: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const NotAGroup& e) {
    err << "capelli-lab: invalid group file: " << e.what() << "\n";
    return kInvalidInput;
  } catch (const std::exception& e) {
    err << "capelli-lab: " << e.what() << "\n";
    return kBadSelector;
  }
}

}  // namespace capelli::cli
