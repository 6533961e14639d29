// Copyright 2026 The netbell Authors
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

#include <stdexcept>
#include <string>

namespace netbell {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A dimension or enumeration would exceed a configured maximum.
class CapacityError : public Error {
 public:
  using Error::Error;
};

/// Operand dimensions do not fit together.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition on a value (hermiticity, normalization) failed.
class ContractError : public Error {
 public:
  using Error::Error;
};

/// An argument lies outside its admissible range.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// The (scenario, n) combination is only supported at formula level.
class CapabilityError : public Error {
 public:
  using Error::Error;
};

/// A derived observable is not a dichotomic involution.
class ConstraintError : public Error {
 public:
  using Error::Error;
};

/// A combination operator annihilates the state, so it cannot be normalized.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// An iterative method ran out of iterations.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double last_gap)
      : Error(what), last_gap_(last_gap) {}
  double last_gap() const { return last_gap_; }

 private:
  double last_gap_;
};

/// Malformed text input (observable files, scenario names).
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace netbell
