// Copyright 2026 The estimand-algebra Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace estimand {

/// Broad failure categories. The CLI maps these onto process exit codes.
enum class ErrorKind {
  validation,
  dimension,
  size_limit,
  argument,
  not_invariant,
  domain,
  internal,
};

std::string_view to_string(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed input: bad weights, bad JSON payloads, unnormalized pmfs.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& message)
      : Error(ErrorKind::validation, message) {}
};

/// Operands built for different K, or vectors of the wrong length.
class DimensionError : public Error {
 public:
  explicit DimensionError(const std::string& message)
      : Error(ErrorKind::dimension, message) {}
};

class SizeLimitError : public Error {
 public:
  explicit SizeLimitError(const std::string& message)
      : Error(ErrorKind::size_limit, message) {}
};

class ArgumentError : public Error {
 public:
  explicit ArgumentError(const std::string& message)
      : Error(ErrorKind::argument, message) {}
};

/// Raised by row matching when no row permutation reproduces H * P_c.
class NotInvariantError : public Error {
 public:
  NotInvariantError(const std::string& message, std::size_t unmatched_row)
      : Error(ErrorKind::not_invariant, message), unmatched_row_(unmatched_row) {}

  /// 1-based index of the first row of H with no partner in H * P_c.
  std::size_t unmatched_row() const noexcept { return unmatched_row_; }

 private:
  std::size_t unmatched_row_;
};

/// Ratio links evaluated outside their domain (mu <= 0, or mu >= 1 for odds).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message)
      : Error(ErrorKind::domain, message) {}
};

/// Two independent computations disagreed. Always a bug.
class InternalError : public Error {
 public:
  explicit InternalError(const std::string& message)
      : Error(ErrorKind::internal, message) {}
};

}  // namespace estimand
