// Copyright 2026 The QCCNN Authors
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
#include <utility>

namespace qccnn {

// Root of every error raised by the library. Subclasses name the failure
// category; the CLI maps them onto exit codes.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A size precondition was violated (e.g. qubit count out of range).
class SizeError : public Error {
 public:
  using Error::Error;
};

// An index (qubit, class, position) was out of range or aliased.
class IndexError : public Error {
 public:
  using Error::Error;
};

// Dimensions of two operands do not agree.
class ShapeError : public Error {
 public:
  using Error::Error;
};

// An object was used in a state that does not permit the call, such as a
// backward pass without a forward cache or a drifted statevector norm.
class StateError : public Error {
 public:
  using Error::Error;
};

// An argument lies outside the operation's domain.
class DomainError : public Error {
 public:
  using Error::Error;
};

// Data read from disk violates a documented invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Malformed input file. Carries the 1-based line number of the offence.
class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

// Invalid experiment or training configuration. `field()` names the key.
class ConfigError : public Error {
 public:
  ConfigError(std::string field, const std::string& what)
      : Error(field + ": " + what), field_(std::move(field)) {}

  const std::string& field() const noexcept { return field_; }

 private:
  std::string field_;
};

// Training produced a non-finite loss.
class DivergenceError : public Error {
 public:
  using Error::Error;
};

// Filesystem failure; the message includes the offending path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace qccnn
