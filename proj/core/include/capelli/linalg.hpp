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

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "capelli/cyclo.hpp"

namespace capelli {

/// Square matrix over Q(ζ_N), row-major.
class ScalarMatrix {
 public:
  ScalarMatrix(std::size_t size, int conductor);

  static ScalarMatrix identity(std::size_t size, int conductor);

  std::size_t size() const noexcept { return size_; }
  int conductor() const noexcept { return conductor_; }

  Cyclo& operator()(std::size_t i, std::size_t j) { return entries_[i * size_ + j]; }
  const Cyclo& operator()(std::size_t i, std::size_t j) const { return entries_[i * size_ + j]; }

  ScalarMatrix conjugate_transpose() const;
  ScalarMatrix transpose() const;
  ScalarMatrix promote(int target_conductor) const;
  Cyclo trace() const;
  /// Inverse by Gauss-Jordan elimination; empty when singular.
  std::optional<ScalarMatrix> inverse() const;

  friend ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b);
  friend bool operator==(const ScalarMatrix& a, const ScalarMatrix& b);

  std::string to_string() const;

 private:
  std::size_t size_;
  int conductor_;
  std::vector<Cyclo> entries_;
};

/// Exact rank of a (rows x cols) matrix over Q(ζ_N) by Gaussian elimination.
std::size_t exact_rank(std::vector<std::vector<Cyclo>> rows);

}  // namespace capelli
