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

#include <string>
#include <string_view>

namespace capelli {

enum class Status { Pass, Fail, Measured, Skipped };

std::string_view to_string(Status status);
/// Throws ParseError for anything but pass|fail|measured|skipped.
Status parse_status(std::string_view text);

/// One verification outcome. `irrep` is "*" for group-level checks.
struct CheckResult {
  std::string check;
  std::string irrep;
  Status status = Status::Pass;
  std::string detail;

  bool failed() const noexcept { return status == Status::Fail; }
  friend bool operator==(const CheckResult&, const CheckResult&) = default;
};

inline CheckResult make_result(std::string check, std::string irrep, bool ok, std::string detail) {
  return {std::move(check), std::move(irrep), ok ? Status::Pass : Status::Fail, std::move(detail)};
}

}  // namespace capelli
