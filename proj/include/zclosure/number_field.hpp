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
#include <optional>
#include <string>
#include <vector>

#include "zclosure/poly.hpp"
#include "zclosure/rational.hpp"

namespace zc {

class NumberField;
using FieldPtr = std::shared_ptr<const NumberField>;

/// Q[x]/(f) for a monic irreducible f with integer coefficients. Elements are
/// stored in the power basis 1, a, ..., a^(d-1) of the class a of x. The
/// rationals are the degree-one field with f = x.
class NumberField {
 public:
  /// `coeffs` lowest degree first; must be monic of degree >= 1. Irreducibility
  /// is the caller's responsibility (see is_irreducible_over_q in factor.hpp).
  explicit NumberField(std::vector<Integer> coeffs);

  static FieldPtr create(std::vector<Integer> coeffs);
  static const FieldPtr& rationals();

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_rationals() const { return degree() == 1; }
  const std::vector<Integer>& coefficients() const { return coeffs_; }
  Poly<Rational> defining_poly() const;
  /// x^(d+k) mod f for k = 0 .. d-2, each of length d.
  const std::vector<std::vector<Integer>>& reduction_table() const { return reduce_; }

  std::string to_string(const std::string& var = "x") const;

 private:
  std::vector<Integer> coeffs_;
  std::vector<std::vector<Integer>> reduce_;
};

bool same_field(const FieldPtr& a, const FieldPtr& b);

/// Element of a number field. An element without a field is a rational
/// constant; it is promoted into the field of the other operand in mixed
/// arithmetic, so generic code can write NfElem(0) and NfElem(1).
class NfElem {
 public:
  NfElem() : num_{Integer(0)}, den_(1) {}
  NfElem(int v) : num_{Integer(v)}, den_(1) {}
  NfElem(long v) : num_{Integer(v)}, den_(1) {}
  NfElem(const Integer& v) : num_{v}, den_(1) {}
  NfElem(const Rational& q) : num_{Integer(q.get_num())}, den_(q.get_den()) {}
  NfElem(FieldPtr field, const Rational& q);
  NfElem(FieldPtr field, const std::vector<Rational>& coords);
  NfElem(FieldPtr field, std::vector<Integer> num, Integer den);

  static NfElem generator(const FieldPtr& field);

  const FieldPtr& field() const { return field_; }
  bool is_rational() const;
  Rational rational_value() const;
  Rational coord(int i) const;
  /// Power-basis coordinates, length = degree of the field (1 for constants).
  std::vector<Rational> coords() const;
  const std::vector<Integer>& numerators() const { return num_; }
  const Integer& denominator() const { return den_; }
  /// Same value, explicitly attached to `field` (constants get promoted).
  NfElem in_field(const FieldPtr& field) const;

  NfElem& operator+=(const NfElem& o);
  NfElem& operator-=(const NfElem& o);
  NfElem& operator*=(const NfElem& o);
  NfElem& operator/=(const NfElem& o) { return *this *= o.inverse(); }
  friend NfElem operator+(NfElem a, const NfElem& b) { return a += b; }
  friend NfElem operator-(NfElem a, const NfElem& b) { return a -= b; }
  friend NfElem operator*(NfElem a, const NfElem& b) { return a *= b; }
  friend NfElem operator/(NfElem a, const NfElem& b) { return a /= b; }
  friend NfElem operator-(NfElem a) {
    for (auto& x : a.num_) x = -x;
    return a;
  }
  friend bool operator==(const NfElem& a, const NfElem& b);
  friend bool operator!=(const NfElem& a, const NfElem& b) { return !(a == b); }

  bool is_zero() const;
  NfElem inverse() const;
  /// Human-readable, e.g. "1/2 + 3*a^2".
  std::string to_string(const std::string& var = "a") const;

 private:
  void normalize();
  FieldPtr field_;
  std::vector<Integer> num_;
  Integer den_;
};

inline bool is_zero(const NfElem& a) { return a.is_zero(); }
inline NfElem inverse(const NfElem& a) { return a.inverse(); }
NfElem pow(const NfElem& a, long e);
inline std::string to_string(const NfElem& a) { return a.to_string(); }

/// Minimal polynomial over Q (monic), from the linear dependence of powers.
Poly<Rational> min_poly(const NfElem& a);

/// Norm from K to Q.
Rational norm(const NfElem& a);

/// Multiplicative order if `a` is a root of unity. Screens the minimal
/// polynomial (integral, cyclotomic) and confirms by exact powering.
std::optional<long> root_of_unity_order(const NfElem& a);

/// Euler's totient.
long totient(long m);

/// The m-th cyclotomic polynomial.
Poly<Rational> cyclotomic_poly(long m);

}  // namespace zc
