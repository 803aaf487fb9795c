// Copyright 2026 The pmgraph Authors
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

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pmgraph {

/// Base class for every error raised by the library. `code()` is a short
/// machine-parsable reason such as "parse_error" or "scale_limit".
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

/// Malformed document. `location()` is a JSON pointer ("/edges/3/u") or a
/// byte offset ("byte 17") for syntax errors.
class ParseError : public Error {
 public:
  ParseError(std::string location, const std::string& message)
      : Error("parse_error", location + ": " + message), location_(std::move(location)) {}

  const std::string& location() const noexcept { return location_; }

 private:
  std::string location_;
};

/// Input violates an operation's precondition.
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& message) : Error("domain_error", message) {}
  DomainError(std::string code, const std::string& message) : Error(std::move(code), message) {}
};

/// Input is larger than the configured enumeration limits.
class ScaleLimitError : public Error {
 public:
  explicit ScaleLimitError(const std::string& message) : Error("scale_limit", message) {}
};

class NotBipartiteError : public DomainError {
 public:
  NotBipartiteError(std::vector<std::size_t> odd_cycle, const std::string& message)
      : DomainError("not_bipartite", message), odd_cycle_(std::move(odd_cycle)) {}

  /// Vertex indices of an odd cycle, in traversal order.
  const std::vector<std::size_t>& odd_cycle() const noexcept { return odd_cycle_; }

 private:
  std::vector<std::size_t> odd_cycle_;
};

/// All amplitudes cancelled, so no normalized state exists.
class FrustratedError : public DomainError {
 public:
  explicit FrustratedError(const std::string& message) : DomainError("fully_frustrated", message) {}
};

}  // namespace pmgraph
