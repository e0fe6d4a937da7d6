// Copyright 2026 The hyperspace Authors
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

#pragma once

#include <stdexcept>
#include <string>

namespace hyperspace {

/// Error classes double as CLI exit-code classes (see tools/hyperspace.cpp).
enum class ErrorKind { kUsage = 1, kParse = 2, kPrecondition = 3, kResourceCap = 4 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

/// Malformed text input. `position` is "line:column" or a character offset.
class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::string position = {})
      : Error(ErrorKind::kParse, position.empty() ? what : position + ": " + what),
        position_(std::move(position)) {}
  const std::string& position() const { return position_; }

 private:
  std::string position_;
};

/// Well-formed input that violates an operation's precondition
/// (disconnected graph, point out of range, component bound exceeded, ...).
class PreconditionError : public Error {
 public:
  explicit PreconditionError(const std::string& what) : Error(ErrorKind::kPrecondition, what) {}
};

class ResourceCapError : public Error {
 public:
  explicit ResourceCapError(const std::string& what) : Error(ErrorKind::kResourceCap, what) {}
};

class DomainError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

class OverflowError : public ResourceCapError {
 public:
  using ResourceCapError::ResourceCapError;
};

}  // namespace hyperspace
