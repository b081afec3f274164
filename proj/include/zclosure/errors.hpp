// Copyright 2026 The zclosure Authors
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

#include <stdexcept>
#include <string>

namespace zc {

/// Broad failure classes. The C API and the CLI map these onto status codes.
enum class ErrorKind {
  kDomain,         // precondition violated (singular input, not unipotent, ...)
  kParse,          // malformed input document or scalar
  kResourceLimit,  // field degree or similar hard cap exceeded
  kBudget,         // BFS length, restart count or time budget exhausted
  kInvariant,      // internal consistency check failed
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

struct DomainError : Error {
  explicit DomainError(const std::string& what) : Error(ErrorKind::kDomain, what) {}
};

struct ParseError : Error {
  explicit ParseError(const std::string& what) : Error(ErrorKind::kParse, what) {}
};

struct ResourceLimitError : Error {
  explicit ResourceLimitError(const std::string& what) : Error(ErrorKind::kResourceLimit, what) {}
};

/// A configured ceiling (search trials, BFS length, restarts, time) was hit.
struct BudgetError : Error {
  explicit BudgetError(const std::string& what) : Error(ErrorKind::kBudget, what) {}
};

struct InvariantViolation : Error {
  explicit InvariantViolation(const std::string& what) : Error(ErrorKind::kInvariant, what) {}
};

#define ZC_ASSERT(cond, msg)                                   \
  do {                                                         \
    if (!(cond)) throw ::zc::InvariantViolation(msg);          \
  } while (0)

}  // namespace zc
