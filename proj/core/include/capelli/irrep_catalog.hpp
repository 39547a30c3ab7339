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

#include <string_view>

#include "capelli/irrep.hpp"

namespace capelli {

/// A complete set of unitary irreps for a catalog group, built once and
/// cached. Labels:
///   Cn  chi0 .. chi{n-1}      V4  triv a b ab
///   S3  triv sign std         D4  triv eps par eps.par std
///   Q8  triv chi_i chi_j chi_k std
///   A4  triv omega omega2 std S4  triv sign std2 std3 std3.sign
/// Throws UnknownName.
const IrrepSet& catalog_irreps(std::string_view group_name);

}  // namespace capelli
