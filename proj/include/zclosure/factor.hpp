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

#include <utility>
#include <vector>

#include "zclosure/number_field.hpp"
#include "zclosure/poly.hpp"
#include "zclosure/rational.hpp"

namespace zc {

/// Hard caps on exact algebraic number computations.
struct FieldLimits {
  int max_field_degree = 64;
  /// Largest norm polynomial degree accepted when factoring over a number field.
  int max_norm_degree = 2048;
};

using QFactorization = std::vector<std::pair<Poly<Rational>, int>>;
using KFactorization = std::vector<std::pair<Poly<NfElem>, int>>;

/// Monic irreducible factors over Q with multiplicities, sorted by degree and
/// then by coefficients. f must be nonzero.
QFactorization factor_over_q(const Poly<Rational>& f);

bool is_irreducible_over_q(const Poly<Rational>& f);

/// Exact squarefreeness test over Q (modular screen, exact fallback).
bool is_squarefree_over_q(const Poly<Rational>& f);

/// Monic irreducible factors over the number field K with multiplicities.
/// Coefficients of f must lie in K (constants are allowed).
KFactorization factor_over_field(const Poly<NfElem>& f, const FieldPtr& K,
                                 const FieldLimits& limits = {});

/// Norm_{K/Q} of a polynomial with coefficients in K, i.e. the product of its
/// conjugates. Monic when f is.
Poly<Rational> poly_norm(const Poly<NfElem>& f, const FieldPtr& K);

/// f(x - c*theta) where theta generates K.
Poly<NfElem> shift_by_generator(const Poly<NfElem>& f, const FieldPtr& K, long c);

}  // namespace zc
