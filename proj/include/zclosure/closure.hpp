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

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "zclosure/errors.hpp"
#include "zclosure/factor.hpp"
#include "zclosure/liealg.hpp"
#include "zclosure/matrix.hpp"

namespace zc {

struct ClosureConfig {
  FieldLimits limits;
  size_t max_bfs_length = 20;
  size_t max_restarts = 64;
  /// Wall-clock seconds; nullopt means unlimited.
  std::optional<double> time_budget;
  std::uint64_t seed = 1;
};

struct ClosureTrace {
  size_t rounds = 0;
  std::vector<size_t> dim_history;
  /// Longest product length reached in each round.
  std::vector<size_t> bfs_lengths;
  size_t multrel_calls = 0;
  double multrel_time = 0;
  size_t membership_calls = 0;
  double membership_time = 0;
  double total_time = 0;
  /// Largest absolute degree of a splitting field handed to the relation
  /// engine.
  int max_field_degree = 1;
};

/// Closure description: the Lie algebra of G° and one element per component
/// (identity first).
template <class F>
struct GroupDescription {
  size_t n = 0;
  FieldPtr field;  // base field of the entries
  LieSubalgebra<F> lie_algebra;
  std::vector<Matrix<F>> components;
  bool certified = true;
};

template <class F>
struct ClosureResult {
  GroupDescription<F> group;
  ClosureTrace trace;
};

/// Thrown when a configured ceiling is hit; carries the trace so far.
struct BudgetExhausted : BudgetError {
  BudgetExhausted(const std::string& what, ClosureTrace t) : BudgetError(what), trace(std::move(t)) {}
  ClosureTrace trace;
};

template <class F>
struct SemisimpleLie {
  LieSubalgebra<F> lie;
  bool certified = true;
  int field_degree = 1;
};

/// span{log u}.
template <class F>
LieSubalgebra<F> lie_of_unipotent(const Matrix<F>& u);

/// Lie algebra of the smallest algebraic group containing the semisimple s:
/// C^-1 t(L') C over the splitting field of s, descended to `base`.
template <class F>
SemisimpleLie<F> lie_of_semisimple(const Matrix<F>& s, const FieldPtr& base, const FieldLimits& limits = {});

/// g in the connected group with Lie algebra `lie`.
template <class F>
bool member_connected(const LieSubalgebra<F>& lie, const Matrix<F>& g, const FieldPtr& base,
                      const ClosureConfig& config = {});

template <class F>
ClosureResult<F> zariski_closure(const std::vector<Matrix<F>>& gens, const FieldPtr& base,
                                 const ClosureConfig& config = {});

/// Field of the entries: Q for Rational, else the common number field.
FieldPtr entry_field(const std::vector<Matrix<Rational>>& ms);
FieldPtr entry_field(const std::vector<Matrix<NfElem>>& ms);

/// Output checks that need no ground truth: bracket closure, stability under
/// every generator, pairwise distinct components, increasing dim history.
/// Returns the failures (empty when all hold).
template <class F>
std::vector<std::string> check_closure_invariants(const std::vector<Matrix<F>>& gens, const ClosureResult<F>& r,
                                                  const ClosureConfig& config = {});

}  // namespace zc
