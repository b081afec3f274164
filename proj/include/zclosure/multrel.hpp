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

#include <mpfr.h>

#include <optional>
#include <string>
#include <vector>

#include "zclosure/lattice.hpp"
#include "zclosure/number_field.hpp"

namespace zc {

struct MultRelOptions {
  mpfr_prec_t start_precision = 128;
  mpfr_prec_t max_precision = 4096;
};

/// Lattice of multiplicative relations {e : prod alpha_i^e_i = 1}. Every
/// basis vector is verified exactly. `certified` means the lattice is proven
/// to be the full relation lattice.
struct RelationLattice {
  std::vector<NfElem> alphas;
  IntegerLattice lattice;
  bool certified = false;
  /// "radical" when every alpha has a rational power (exact valuations),
  /// "archimedean" when completeness came from a certified rank of the
  /// logarithmic embedding, "partial" otherwise.
  std::string method;
  /// Highest working precision used by the archimedean step (0 if unused).
  mpfr_prec_t precision = 0;
};

/// Nonzero alphas, all in one number field (constants allowed).
RelationLattice relations(const std::vector<NfElem>& alphas, const MultRelOptions& opts = {});

/// true only with a cheap certificate of triviality (independent norm
/// valuations); nullopt otherwise.
std::optional<bool> is_trivial_quick(const std::vector<NfElem>& alphas);

/// Pairwise coprime integers > 1 such that every input (> 0) is a product of
/// their powers.
std::vector<Integer> coprime_base(const std::vector<Integer>& xs);

/// Exponent of b in x (b > 1 from a coprime base containing x's support).
long valuation(Integer x, const Integer& b);

}  // namespace zc
