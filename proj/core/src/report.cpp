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

#include "capelli/report.hpp"

#include "capelli/errors.hpp"

namespace capelli {

std::string_view to_string(Status status) {
  switch (status) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Measured:
      return "measured";
    case Status::Skipped:
      return "skipped";
  }
  return "fail";
}

Status parse_status(std::string_view text) {
  if (text == "pass") return Status::Pass;
  if (text == "fail") return Status::Fail;
  if (text == "measured") return Status::Measured;
  if (text == "skipped") return Status::Skipped;
  throw ParseError("unknown status '" + std::string(text) + "'");
}

}  // namespace capelli
