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

#include "capelli/linalg.hpp"

#include <utility>

#include "capelli/errors.hpp"

namespace capelli {

ScalarMatrix::ScalarMatrix(std::size_t size, int conductor)
    : size_(size), conductor_(conductor), entries_(size * size, Cyclo(conductor)) {}

ScalarMatrix ScalarMatrix::identity(std::size_t size, int conductor) {
  ScalarMatrix m(size, conductor);
  for (std::size_t i = 0; i < size; ++i) m(i, i) = Cyclo(conductor, 1L);
  return m;
}

ScalarMatrix ScalarMatrix::conjugate_transpose() const {
  ScalarMatrix out(size_, conductor_);
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j) out(j, i) = (*this)(i, j).conjugate();
  return out;
}

ScalarMatrix ScalarMatrix::transpose() const {
  ScalarMatrix out(size_, conductor_);
  for (std::size_t i = 0; i < size_; ++i)
    for (std::size_t j = 0; j < size_; ++j) out(j, i) = (*this)(i, j);
  return out;
}

ScalarMatrix ScalarMatrix::promote(int target_conductor) const {
  ScalarMatrix out(size_, target_conductor);
  for (std::size_t k = 0; k < entries_.size(); ++k) out.entries_[k] = entries_[k].promote(target_conductor);
  return out;
}

Cyclo ScalarMatrix::trace() const {
  Cyclo t(conductor_);
  for (std::size_t i = 0; i < size_; ++i) t += (*this)(i, i);
  return t;
}

std::optional<ScalarMatrix> ScalarMatrix::inverse() const {
  ScalarMatrix a = *this;
  ScalarMatrix inv = identity(size_, conductor_);
  for (std::size_t col = 0; col < size_; ++col) {
    std::size_t pivot = col;
    while (pivot < size_ && a(pivot, col).is_zero()) ++pivot;
    if (pivot == size_) return std::nullopt;
    if (pivot != col) {
      for (std::size_t j = 0; j < size_; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    }
    const Cyclo scale = a(col, col).inverse();
    for (std::size_t j = 0; j < size_; ++j) {
      a(col, j) = a(col, j) * scale;
      inv(col, j) = inv(col, j) * scale;
    }
    for (std::size_t r = 0; r < size_; ++r) {
      if (r == col || a(r, col).is_zero()) continue;
      const Cyclo f = a(r, col);
      for (std::size_t j = 0; j < size_; ++j) {
        a(r, j) -= f * a(col, j);
        inv(r, j) -= f * inv(col, j);
      }
    }
  }
  return inv;
}

ScalarMatrix operator*(const ScalarMatrix& a, const ScalarMatrix& b) {
  if (a.size_ != b.size_) throw IndexRange("matrix size mismatch");
  if (a.conductor_ != b.conductor_) throw ConductorMismatch("matrix conductor mismatch");
  ScalarMatrix out(a.size_, a.conductor_);
  for (std::size_t i = 0; i < a.size_; ++i)
    for (std::size_t k = 0; k < a.size_; ++k) {
      const Cyclo& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t j = 0; j < a.size_; ++j)
        if (!b(k, j).is_zero()) out(i, j) += aik * b(k, j);
    }
  return out;
}

bool operator==(const ScalarMatrix& a, const ScalarMatrix& b) {
  return a.size_ == b.size_ && a.conductor_ == b.conductor_ && a.entries_ == b.entries_;
}

std::string ScalarMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t i = 0; i < size_; ++i) {
    out += i ? ", [" : "[";
    for (std::size_t j = 0; j < size_; ++j) {
      if (j) out += ", ";
      out += (*this)(i, j).to_string();
    }
    out += "]";
  }
  return out + "]";
}

std::size_t exact_rank(std::vector<std::vector<Cyclo>> rows) {
  if (rows.empty()) return 0;
  const std::size_t cols = rows.front().size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const Cyclo inv = rows[rank][col].inverse();
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][col].is_zero()) continue;
      const Cyclo f = rows[r][col] * inv;
      for (std::size_t j = col; j < cols; ++j)
        if (!rows[rank][j].is_zero()) rows[r][j] -= f * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace capelli
