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

#include <memory>
#include <vector>

#include "zclosure/factor.hpp"
#include "zclosure/number_field.hpp"
#include "zclosure/poly.hpp"

namespace zc {

/// A number field K = Q(gamma) containing a base field B (Q or a number
/// field), with the image in K of B's generator.
class Extension {
 public:
  Extension() = default;
  Extension(FieldPtr base, FieldPtr field, const NfElem& base_generator);
  /// B over itself.
  static Extension trivial(const FieldPtr& base);

  const FieldPtr& base() const { return base_; }
  const FieldPtr& field() const { return field_; }
  const NfElem& base_generator() const { return base_gen_; }
  int degree() const { return field_->degree(); }
  int relative_degree() const { return field_->degree() / base_->degree(); }

  /// B -> K. Constants are accepted.
  NfElem embed(const NfElem& b) const;
  Poly<NfElem> embed(const Poly<NfElem>& p) const;

  /// Coordinates of x in K with respect to the B-basis 1, gamma, ...,
  /// gamma^(m-1), m = [K:B]; each coordinate is an element of B.
  std::vector<NfElem> base_coords(const NfElem& x) const;

 private:
  FieldPtr base_, field_;
  NfElem base_gen_;
  // base generator powers phi^0 .. phi^(e-1) in K
  std::shared_ptr<const std::vector<NfElem>> base_gen_powers_;
  // inverse of the matrix whose columns are the Q-coordinates of phi^i gamma^j,
  // column index j*e + i; empty when B = Q
  std::shared_ptr<const std::vector<std::vector<Rational>>> decompose_;
};

/// Field embedding K -> L given by the image of K's generator.
struct FieldMap {
  FieldPtr source, target;
  NfElem generator_image;
  NfElem operator()(const NfElem& a) const;
  Poly<NfElem> operator()(const Poly<NfElem>& p) const;
};

/// K(beta) for a root beta of the monic irreducible h over K, flattened to a
/// primitive extension.
struct AdjoinedRoot {
  FieldMap map;  // K -> K(beta)
  NfElem root;   // beta in K(beta)
};
AdjoinedRoot adjoin_root(const Poly<NfElem>& h, const FieldPtr& K, const FieldLimits& limits);

struct SplittingField {
  Extension ext;
  /// All roots with multiplicity, in deterministic discovery order.
  std::vector<NfElem> roots;
};

/// Splitting field over `base` of f (coefficients in base). Throws
/// ResourceLimitError past limits.max_field_degree.
SplittingField splitting_field(const Poly<NfElem>& f, const FieldPtr& base, const FieldLimits& limits = {});
SplittingField splitting_field(const Poly<Rational>& f, const FieldLimits& limits = {});

}  // namespace zc
