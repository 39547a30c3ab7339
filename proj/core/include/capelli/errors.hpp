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
#include <stdexcept>
#include <string>
#include <vector>

namespace capelli {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A multiplication table that fails a group axiom. The witness holds the
/// offending element indices (one element, or a triple for associativity).
class NotAGroup : public Error {
 public:
  NotAGroup(const std::string& what, std::vector<std::size_t> witness = {})
      : Error(what), witness_(std::move(witness)) {}
  const std::vector<std::size_t>& witness() const noexcept { return witness_; }

 private:
  std::vector<std::size_t> witness_;
};

class ClosureTooLarge : public Error {
 public:
  using Error::Error;
};

class ConductorMismatch : public Error {
 public:
  using Error::Error;
};

class DivisionByZero : public Error {
 public:
  using Error::Error;
};

class NotDivisible : public Error {
 public:
  using Error::Error;
};

class GroupMismatch : public Error {
 public:
  using Error::Error;
};

class NotAClass : public Error {
 public:
  using Error::Error;
};

class NotCentral : public Error {
 public:
  using Error::Error;
};

class SizeLimit : public Error {
 public:
  using Error::Error;
};

class IndexRange : public Error {
 public:
  using Error::Error;
};

/// Raised when a change-of-basis matrix has no inverse.
class SingularMatrix : public Error {
 public:
  using Error::Error;
};

/// A Capelli evaluation point k with u^(m-1)(k) = 0; factor_index() is the
/// 1-based index i of the vanishing factor u_i.
class BadK : public Error {
 public:
  BadK(const std::string& what, std::size_t factor_index)
      : Error(what), factor_index_(factor_index) {}
  std::size_t factor_index() const noexcept { return factor_index_; }

 private:
  std::size_t factor_index_;
};

class ContextMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidIrrep : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

class UnknownName : public Error {
 public:
  using Error::Error;
};

}  // namespace capelli
