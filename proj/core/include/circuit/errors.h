// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CIRCUIT_ERRORS_H_
#define CIRCUIT_ERRORS_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace circuit {

// Root of every error raised by the library. The command-line tool maps the
// subclasses onto stable exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text. `line()` is 1-based, or 0 when not tied to a line.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t line);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// A model input violates a range or structural constraint (for example an
// inflow sum above one, or a damping coefficient outside (0, 1)).
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Caller passed an argument that breaks an operation's precondition.
class ArgumentError : public Error {
 public:
  using Error::Error;
};

// NaN/Inf, a non-positive normalizer, or a singular matrix.
class NumericalError : public Error {
 public:
  using Error::Error;
};

// Iterative solve exhausted its sweep budget.
class ConvergenceError : public NumericalError {
 public:
  using NumericalError::NumericalError;
};

// Request exceeds a configured size cap (dense oracle, full matrix, ...).
class CapacityError : public Error {
 public:
  using Error::Error;
};

}  // namespace circuit

#endif  // CIRCUIT_ERRORS_H_
