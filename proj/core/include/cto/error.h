// Copyright 2026 The cto Authors.
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

#ifndef CTO_ERROR_H_
#define CTO_ERROR_H_

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cto {

// Root of every error thrown by the toolkit. The CLI maps subclasses onto
// exit codes (see ExitCodeFor in pipeline/stages.h).
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input text (XML, JSON, CSV). Line and column are 1-based; 0 means
// unknown.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column)
      : Error(what + " (line " + std::to_string(line) + ", column " +
              std::to_string(column) + ")"),
        line_(line),
        column_(column) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

// Well-formed input that lacks a mandatory field.
class SchemaError : public Error {
 public:
  explicit SchemaError(std::string field)
      : Error("missing or invalid field: " + field), field_(std::move(field)) {}
  SchemaError(std::string field, const std::string& detail)
      : Error("missing or invalid field: " + field + ": " + detail),
        field_(std::move(field)) {}

  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

// A value violates a documented invariant.
class ValidationError : public Error {
 public:
  using Error::Error;
};

class NotFoundError : public Error {
 public:
  using Error::Error;
};

// Network failure talking to an external service.
class TransportError : public Error {
 public:
  using Error::Error;
};

// External service answered with something outside its contract.
class ProtocolError : public Error {
 public:
  using Error::Error;
};

// Contingency table with fewer than two labels on an axis.
class DegenerateTableError : public Error {
 public:
  using Error::Error;
};

// Numeric precondition violated.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A pipeline stage ran before the stage producing its inputs.
class DependencyError : public Error {
 public:
  DependencyError(const std::string& what, std::string required_stage)
      : Error(what), required_stage_(std::move(required_stage)) {}

  const std::string& required_stage() const { return required_stage_; }

 private:
  std::string required_stage_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace cto

#endif  // CTO_ERROR_H_
