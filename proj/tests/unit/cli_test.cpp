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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include <capelli/catalog.hpp>
#include <capelli/irrep_catalog.hpp>
#include <capelli/serialize.hpp>

#include "capelli_cli/checks.hpp"
#include "capelli_cli/commands.hpp"
#include "capelli_cli/report_json.hpp"

namespace capelli::cli {
namespace {

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("capelli_cli_" + name)).string();
}

std::string write_temp(const std::string& name, const std::string& body) {
  const std::string path = temp_path(name);
  std::ofstream(path) << body;
  return path;
}

std::string line_with(const std::string& text, const std::string& prefix) {
  std::istringstream in(text);
  for (std::string line; std::getline(in, line);)
    if (line.rfind(prefix, 0) == 0) return line;
  return {};
}

TEST(List, CatalogDegrees) {
  const CliRun r = run({"list"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_NE(line_with(r.out, "S3 ").find("degrees [1,1,2]"), std::string::npos) << r.out;
  EXPECT_NE(line_with(r.out, "Q8 ").find("degrees [1,1,1,1,2]"), std::string::npos);
  EXPECT_NE(line_with(r.out, "A4 ").find("degrees [1,1,1,3]"), std::string::npos);
  EXPECT_NE(line_with(r.out, "S4 ").find("order 24"), std::string::npos);
}

TEST(Capelli, SymmetricGroupRenderings) {
  CliRun r = run({"capelli", "--group", "S3", "--irrep", "std"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "std: C(z) = (z^2 - 5z)e + z(123) + z(132)\n");
  r = run({"capelli", "--group", "S3", "--irrep", "std", "--at", "-1"});
  EXPECT_EQ(r.out, "std: C(-1) = 6e - (123) - (132)\n");
  r = run({"capelli", "--group", "S3", "--irrep", "triv"});
  EXPECT_EQ(r.out, "triv: C(z) = (-z + 1)e + (12) + (123) + (23) + (13) + (132)\n");
}

TEST(Capelli, JsonOutput) {
  const CliRun r = run({"capelli", "--group", "S3", "--irrep", "std", "--at", "-1", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  const json j = json::parse(r.out);
  const GroupPtr& g = catalog_group("S3").group;
  const AlgebraElement value = algebra_from_json(j["irreps"][0]["value"], g);
  EXPECT_EQ(to_string(value), "6e - (123) - (132)");
}

TEST(Capelli, Selectors) {
  EXPECT_EQ(run({"capelli", "--group", "S9"}).code, kBadSelector);
  EXPECT_EQ(run({"capelli", "--group", "S3", "--irrep", "nope"}).code, kBadSelector);
  EXPECT_EQ(run({"capelli", "--group", "S3", "--at", "x"}).code, kBadSelector);
  EXPECT_EQ(run({"capelli"}).code, kBadSelector);
}

TEST(Verify, CyclicGroupPasses) {
  const CliRun r = run({"verify", "--group", "C4", "--checks", "thm415,basis-415"});
  EXPECT_EQ(r.code, kOk) << r.out << r.err;
  EXPECT_NE(r.out.find("5 results: 5 pass"), std::string::npos) << r.out;
}

TEST(Verify, EachCheckOncePerIrrep) {
  const CliRun r = run({"verify", "--group", "S3", "--checks", "thm415,schur,thm415", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  const Report report = report_from_json(json::parse(r.out));
  std::map<std::pair<std::string, std::string>, int> seen;
  for (const auto& e : report.checks) ++seen[{e.name, e.irrep}];
  EXPECT_EQ(seen.size(), 4u);
  for (const auto& [key, count] : seen) EXPECT_EQ(count, 1) << key.first << " " << key.second;
  EXPECT_EQ(seen.count({"schur", "*"}), 1u);
  EXPECT_EQ(report.group, "S3");
  EXPECT_EQ(report.tool_version, tool_version());
}

TEST(Verify, SingleIrrepAndSkips) {
  const CliRun r = run({"verify", "--group", "A4", "--irrep", "std", "--checks", "weyl-capelli,thm415", "--format",
                     "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const Report report = report_from_json(json::parse(r.out));
  ASSERT_EQ(report.checks.size(), 2u);
  for (const auto& e : report.checks) {
    EXPECT_EQ(e.irrep, "std");
    EXPECT_EQ(e.status, e.name == "weyl-capelli" ? Status::Skipped : Status::Pass);
  }
}

TEST(Verify, ExitCodes) {
  EXPECT_EQ(run({"verify", "--group", "S9", "--checks", "all"}).code, kBadSelector);
  EXPECT_EQ(run({"verify", "--group", "S3", "--checks", "bogus"}).code, kBadSelector);
  EXPECT_EQ(run({"verify", "--group", "S3"}).code, kBadSelector);
  EXPECT_EQ(run({"verify", "--group", "S3", "--group-file", "x.json", "--checks", "all"}).code, kBadSelector);
  EXPECT_EQ(run({"verify", "--group-file", "/nonexistent/g.json", "--checks", "schur"}).code, kBadSelector);
  EXPECT_EQ(run({"verify", "--group", "S3", "--irrep-file", "/nonexistent/i.json", "--checks", "schur"}).code,
            kBadSelector);
  EXPECT_EQ(run({"verify", "--group", "S3", "--irrep", "nope", "--checks", "schur"}).code, kBadSelector);
  EXPECT_EQ(run({"--version"}).code, kOk);
  EXPECT_EQ(run({"--help"}).code, kOk);
  EXPECT_EQ(run({"frobnicate"}).code, kBadSelector);
}

TEST(Verify, CorruptedIrrepFile) {
  json j = irrep_to_json(catalog_irreps("S3").find("std"));
  j["matrices"][1] = j["matrices"][2];
  const std::string path = write_temp("corrupted.json", j.dump());
  const CliRun r = run({"verify", "--group", "S3", "--irrep-file", path, "--checks", "thm415"});
  EXPECT_EQ(r.code, kInvalidInput) << r.err;
  EXPECT_EQ(run({"verify", "--group", "S3", "--irrep-file", write_temp("truncated.json", "{\"label\": \"x\""),
                 "--checks", "thm415"})
                .code,
            kInvalidInput);
}

TEST(Verify, UserIrrepFileReplacesCatalog) {
  json arr = json::array();
  arr.push_back(irrep_to_json(catalog_irreps("S3").find("sign")));
  const std::string path = write_temp("sign_only.json", arr.dump());
  const CliRun r = run({"verify", "--group", "S3", "--irrep-file", path, "--checks", "thm415,e-basis", "--format",
                     "json"});
  // One irrep cannot span the algebra, so e-basis fails while thm415 passes.
  EXPECT_EQ(r.code, kChecksFailed);
  const Report report = report_from_json(json::parse(r.out));
  for (const auto& e : report.checks) EXPECT_EQ(e.status, e.name == "e-basis" ? Status::Fail : Status::Pass);
}

TEST(Verify, GroupFiles) {
  const std::string good = write_temp("s3.json", group_to_json(*catalog_group("S3").group).dump());
  EXPECT_EQ(run({"verify", "--group-file", good, "--checks", "thm415,central"}).code, kOk);

  const std::string bad =
      write_temp("bad_group.json", R"({"name": "x", "order": 2, "elements": ["a","b"], "table": [[0,1],[0,1]]})");
  EXPECT_EQ(run({"verify", "--group-file", bad, "--checks", "schur"}).code, kInvalidInput);
  const std::string junk = write_temp("junk_group.json", "not json");
  EXPECT_EQ(run({"verify", "--group-file", junk, "--checks", "schur"}).code, kInvalidInput);
}

TEST(Verify, OrderLimit) {
  ::setenv("CAPELLI_LAB_MAX_ORDER", "5", 1);
  const int code = run({"verify", "--group", "S3", "--checks", "schur"}).code;
  const int small = run({"verify", "--group", "C4", "--checks", "schur"}).code;
  ::unsetenv("CAPELLI_LAB_MAX_ORDER");
  EXPECT_EQ(code, kBadSelector);
  EXPECT_EQ(small, kOk);
}

TEST(Verify, OutFileAndDeterminism) {
  const std::string out = temp_path("report.json");
  std::filesystem::remove(out);
  const CliRun a = run({"verify", "--group", "D4", "--checks", "thm415,basis-char", "--out", out});
  ASSERT_EQ(a.code, kOk);
  std::ifstream in(out);
  const json first = json::parse(in);
  EXPECT_TRUE(report_schema_errors(first).empty());
  const CliRun b = run({"verify", "--group", "D4", "--checks", "thm415,basis-char", "--format", "json"});
  Report r1 = report_from_json(first), r2 = report_from_json(json::parse(b.out));
  for (auto* r : {&r1, &r2})
    for (auto& e : r->checks) e.runtime_ms = 0;
  EXPECT_EQ(r1, r2);
}

TEST(Verify, BadKIsReportedAsFailure) {
  const CliRun r = run({"verify", "--group", "S3", "--checks", "basis-415", "--k", "0"});
  EXPECT_EQ(r.code, kChecksFailed);
  EXPECT_EQ(run({"verify", "--group", "S3", "--checks", "basis-415", "--k", "2"}).code, kOk);
}

TEST(ReportJson, RoundTripAndSchema) {
  Report r{"1.2.3", "S3", {{"thm415", "std", Status::Pass, "ok", 1.5}, {"schur", "*", Status::Measured, "m", 0}}};
  const json j = report_to_json(r);
  EXPECT_TRUE(report_schema_errors(j).empty());
  EXPECT_EQ(report_from_json(j), r);

  json bad_status = j;
  bad_status["checks"][0]["status"] = "maybe";
  EXPECT_FALSE(report_schema_errors(bad_status).empty());
  json extra = j;
  extra["checks"][1]["seed"] = 4;
  EXPECT_FALSE(report_schema_errors(extra).empty());
  json negative = j;
  negative["checks"][0]["runtime_ms"] = -1;
  EXPECT_FALSE(report_schema_errors(negative).empty());
  json missing = j;
  missing.erase("group");
  EXPECT_FALSE(report_schema_errors(missing).empty());
  EXPECT_THROW(report_from_json(missing), ParseError);
  EXPECT_FALSE(report_schema_errors(json::array()).empty());
}

TEST(ReportJson, AnyFailed) {
  Report r{"v", "g", {{"a", "*", Status::Measured, "", 0}, {"b", "*", Status::Skipped, "", 0}}};
  EXPECT_FALSE(r.any_failed());
  r.checks.push_back({"c", "*", Status::Fail, "", 0});
  EXPECT_TRUE(r.any_failed());
}

TEST(Checks, ListParsing) {
  EXPECT_EQ(parse_check_list("all").size(), check_registry().size());
  EXPECT_EQ(parse_check_list(" schur , thm415 ,schur"), (std::vector<std::string>{"schur", "thm415"}));
  EXPECT_THROW(parse_check_list("schur,nope"), UnknownName);
  EXPECT_THROW(parse_check_list(""), UnknownName);
  std::vector<std::string> names;
  for (const auto& s : check_registry()) names.push_back(s.name);
  EXPECT_EQ(names, (std::vector<std::string>{"schur", "e-basis", "thm415", "central", "conj-inv", "basis-415",
                                             "basis-char", "det-variants", "weyl-relations", "weyl-capelli",
                                             "weyl-central", "thm-M"}));
}

}  // namespace
}  // namespace capelli::cli
