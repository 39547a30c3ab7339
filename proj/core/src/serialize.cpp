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

#include "capelli/serialize.hpp"

#include <fstream>
#include <sstream>

#include "capelli/errors.hpp"

namespace capelli {

json cyclo_to_json(const Cyclo& c) {
  json coeffs = json::array();
  for (const auto& q : c.coeffs()) coeffs.push_back(to_string(q));
  return {{"conductor", c.conductor()}, {"coeffs", std::move(coeffs)}};
}

Cyclo cyclo_from_json(const json& j) {
  if (!j.is_object() || !j.contains("conductor") || !j.contains("coeffs"))
    throw ParseError("Cyclo needs \"conductor\" and \"coeffs\"");
  if (!j["conductor"].is_number_integer() || j["conductor"].get<long>() < 1)
    throw ParseError("Cyclo conductor must be a positive integer");
  if (!j["coeffs"].is_array()) throw ParseError("Cyclo coeffs must be an array");
  std::vector<Rational> coeffs;
  for (const auto& c : j["coeffs"]) {
    if (c.is_string())
      coeffs.push_back(parse_rational(c.get<std::string>()));
    else if (c.is_number_integer())
      coeffs.emplace_back(c.get<long>());
    else
      throw ParseError("Cyclo coefficient must be a \"p/q\" string");
  }
  return Cyclo::from_coeffs(j["conductor"].get<int>(), std::move(coeffs));
}

json group_to_json(const Group& g) {
  return {{"name", g.name()}, {"order", g.order()}, {"elements", g.element_names()}, {"table", g.table()}};
}

GroupPtr group_from_json(const json& j) {
  try {
    const auto name = j.at("name").get<std::string>();
    const auto order = j.at("order").get<std::size_t>();
    auto elements = j.at("elements").get<std::vector<std::string>>();
    auto table = j.at("table").get<CayleyTable>();
    if (elements.size() != order)
      throw ParseError("group '" + name + "' lists " + std::to_string(elements.size()) + " elements, order is " +
                       std::to_string(order));
    return build_group_from_table(name, std::move(elements), std::move(table));
  } catch (const json::exception& e) {
    throw ParseError(std::string("malformed group JSON: ") + e.what());
  }
}

json irrep_to_json(const Irrep& irrep) {
  json mats = json::array();
  for (const auto& m : irrep.matrices()) {
    json rows = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
      json row = json::array();
      for (std::size_t k = 0; k < m.size(); ++k) row.push_back(cyclo_to_json(m(i, k)));
      rows.push_back(std::move(row));
    }
    mats.push_back(std::move(rows));
  }
  return {{"label", irrep.label()},
          {"group", irrep.group()->name()},
          {"degree", irrep.degree()},
          {"conductor", irrep.conductor()},
          {"matrices", std::move(mats)}};
}

Irrep irrep_from_json(const json& j, const GroupPtr& group) {
  std::string label = "?";
  try {
    label = j.at("label").get<std::string>();
    const auto gname = j.at("group").get<std::string>();
    if (gname != group->name())
      throw InvalidIrrep("irrep '" + label + "' is for group '" + gname + "', not '" + group->name() + "'");
    const auto degree = j.at("degree").get<std::size_t>();
    const auto conductor = j.at("conductor").get<int>();
    if (conductor < 1 || group->exponent() % conductor != 0)
      throw InvalidIrrep("irrep '" + label + "' conductor " + std::to_string(conductor) +
                         " does not divide the exponent " + std::to_string(group->exponent()));
    const auto& mats = j.at("matrices");
    if (!mats.is_array() || mats.size() != group->order())
      throw InvalidIrrep("irrep '" + label + "' needs one matrix per element");
    std::vector<ScalarMatrix> matrices;
    for (const auto& mj : mats) {
      if (!mj.is_array() || mj.size() != degree) throw InvalidIrrep("irrep '" + label + "' has a malformed matrix");
      ScalarMatrix m(degree, group->exponent());
      for (std::size_t r = 0; r < degree; ++r) {
        if (!mj[r].is_array() || mj[r].size() != degree)
          throw InvalidIrrep("irrep '" + label + "' has a malformed matrix row");
        for (std::size_t c = 0; c < degree; ++c) {
          const Cyclo x = cyclo_from_json(mj[r][c]);
          if (group->exponent() % x.conductor() != 0)
            throw InvalidIrrep("irrep '" + label + "' has an entry outside the group's field");
          m(r, c) = x.promote(group->exponent());
        }
      }
      matrices.push_back(std::move(m));
    }
    Irrep irrep(label, group, std::move(matrices));
    const auto report = validate(irrep);
    if (!report.ok()) throw InvalidIrrep("irrep '" + label + "' is invalid: " + report.summary());
    return irrep;
  } catch (const InvalidIrrep&) {
    throw;
  } catch (const json::exception& e) {
    throw InvalidIrrep("irrep '" + label + "' is malformed: " + e.what());
  } catch (const Error& e) {
    throw InvalidIrrep("irrep '" + label + "' is malformed: " + e.what());
  }
}

json algebra_to_json(const AlgebraElement& a) {
  json out = json::object();
  for (ElementIndex g = 0; g < a.group()->order(); ++g)
    if (!a.coeff(g).is_zero()) out[a.group()->element_name(g)] = cyclo_to_json(a.coeff(g));
  return out;
}

AlgebraElement algebra_from_json(const json& j, const GroupPtr& group) {
  if (!j.is_object()) throw ParseError("group algebra element must be an object");
  AlgebraElement out(group);
  for (const auto& [name, value] : j.items()) {
    const auto g = group->find(name);
    if (!g) throw UnknownName("no element named '" + name + "' in " + group->name());
    const Cyclo c = cyclo_from_json(value);
    if (group->exponent() % c.conductor() != 0) throw ParseError("coefficient outside the group's field");
    out.set_coeff(*g, c);
  }
  return out;
}

namespace {

json read_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return json::parse(buf.str());
  } catch (const json::parse_error& e) {
    throw ParseError(path.string() + ": " + e.what());
  }
}

}  // namespace

GroupPtr load_group_file(const std::filesystem::path& path) { return group_from_json(read_json(path)); }

std::vector<Irrep> load_irrep_file(const std::filesystem::path& path, const GroupPtr& group) {
  json j;
  try {
    j = read_json(path);
  } catch (const ParseError& e) {
    throw InvalidIrrep(e.what());
  }
  std::vector<Irrep> out;
  if (j.is_array())
    for (const auto& item : j) out.push_back(irrep_from_json(item, group));
  else
    out.push_back(irrep_from_json(j, group));
  return out;
}

}  // namespace capelli
