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

#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <capelli/irrep.hpp>

namespace capelli::cli {

enum ExitCode : int { kOk = 0, kChecksFailed = 1, kBadSelector = 2, kInvalidInput = 3 };

enum class Format { Text, Json };

struct RunConfig {
  std::string command;
  std::optional<std::string> group_name;
  std::optional<std::string> group_file;
  std::optional<std::string> irrep_file;
  std::optional<std::string> irrep;
  std::vector<std::string> checks;
  std::optional<Rational> k;
  Format format = Format::Text;
  std::optional<std::string> out_path;
};

/// A group and the irreps that go with it. File groups take their irreps
/// from --irrep-file, or from the catalog when the table matches a catalog
/// group of the same name.
struct ResolvedGroup {
  GroupPtr group;
  IrrepSet irreps;
};

/// Throws UnknownName / ParseError (exit 2) or InvalidIrrep / NotAGroup (exit 3).
ResolvedGroup resolve_group(const RunConfig& config);

int cmd_list(std::ostream& out);
int cmd_capelli(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches; returns the process exit code.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace capelli::cli
