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

#include <optional>
#include <string>
#include <vector>

#include "zclosure/closure.hpp"
#include "zclosure/membership.hpp"

namespace zc {

/// Parsed input: generators over Q, or over the number field given by a
/// monic irreducible integer polynomial (constant term first).
struct InputDocument {
  FieldPtr field;  // null means Q
  std::vector<Matrix<Rational>> rational_generators;
  std::vector<Matrix<NfElem>> field_generators;

  size_t size() const;
  size_t generator_count() const;
};

/// Throws ParseError on malformed JSON, ragged or non-square matrices,
/// mismatched sizes, bad scalars or an invalid field polynomial.
InputDocument parse_input_document(const std::string& json_text);
std::string input_to_json(const InputDocument& doc);

/// Exact text form of one matrix entry: one string over Q, the coordinate
/// strings over a number field.
using EntryText = std::vector<std::string>;
using MatrixText = std::vector<std::vector<EntryText>>;

struct OutputDocument {
  std::string status = "ok";  // "ok" or "budget_exhausted"
  std::string message;
  std::vector<std::string> field;  // defining polynomial, empty for Q
  size_t n = 0;
  size_t lie_dim = 0;
  std::vector<MatrixText> lie_basis;
  size_t component_count = 0;
  std::vector<MatrixText> component_reps;
  bool certified = false;
  ClosureTrace trace;

  friend bool operator==(const OutputDocument& a, const OutputDocument& b);
};

std::string output_to_json(const OutputDocument& doc, int indent = 2);
OutputDocument parse_output_document(const std::string& json_text);

/// A closure result over whichever base field the input used.
struct ComputedGroup {
  FieldPtr field;  // null means Q
  std::optional<ClosureResult<Rational>> over_q;
  std::optional<ClosureResult<NfElem>> over_k;
};

/// Runs the closure. BudgetExhausted propagates with its partial trace.
ComputedGroup compute_group(const InputDocument& doc, const ClosureConfig& config);
OutputDocument describe(const ComputedGroup& g);
OutputDocument describe_partial(const ClosureTrace& trace, const FieldPtr& field, size_t n, const std::string& what);

/// Membership of a matrix given as JSON (same entry format as the input).
MembershipVerdict member_from_json(const ComputedGroup& g, const std::string& matrix_json,
                                   const ClosureConfig& config);

/// Output invariants that need no reference values; empty when all hold.
std::vector<std::string> check_invariants(const InputDocument& doc, const ComputedGroup& g,
                                          const ClosureConfig& config);

}  // namespace zc
