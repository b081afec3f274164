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

#include <string>
#include <vector>

#include "zclosure/matrix.hpp"
#include "zclosure/rational.hpp"

namespace zc {

using IntVec = std::vector<Integer>;

/// Subgroup of Z^n, stored by its row Hermite normal form basis: echelon
/// rows, positive pivots, entries above each pivot reduced into [0, pivot).
class IntegerLattice {
 public:
  explicit IntegerLattice(size_t ambient = 0) : ambient_(ambient) {}
  /// The lattice generated by the given vectors.
  static IntegerLattice generated_by(size_t ambient, const std::vector<IntVec>& gens);
  static IntegerLattice full(size_t ambient);

  size_t ambient_dim() const { return ambient_; }
  size_t rank() const { return basis_.size(); }
  const std::vector<IntVec>& basis() const { return basis_; }
  bool contains(const IntVec& v) const;
  bool contains(const IntegerLattice& other) const;

  friend bool operator==(const IntegerLattice& a, const IntegerLattice& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const IntegerLattice& a, const IntegerLattice& b) { return !(a == b); }

  std::string to_string() const;

 private:
  size_t ambient_;
  std::vector<IntVec> basis_;
};

/// Row HNF of the span of `rows` (zero rows dropped).
std::vector<IntVec> hnf_rows(std::vector<IntVec> rows, size_t ambient);

/// Unimodular U and H = U * A in row HNF; rows of H past rank(A) are zero.
struct HnfTransform {
  std::vector<IntVec> h;
  std::vector<IntVec> u;
  size_t rank = 0;
};
HnfTransform hnf_with_transform(const std::vector<IntVec>& rows, size_t ambient);

inline IntegerLattice hnf(size_t ambient, const std::vector<IntVec>& gens) {
  return IntegerLattice::generated_by(ambient, gens);
}

/// All integer v with m * v = 0 (rows of m have length `cols`). Pure.
IntegerLattice integer_kernel(const std::vector<IntVec>& m, size_t cols);
IntegerLattice integer_kernel(const Matrix<Rational>& m);

/// All integer v with a * v = 0 and (b * v)_i = 0 mod moduli_i.
IntegerLattice integer_kernel_mod(const std::vector<IntVec>& a, const std::vector<IntVec>& b,
                                  const std::vector<Integer>& moduli, size_t cols);

/// Smallest pure lattice containing L: Z^n intersected with the rational span.
IntegerLattice saturate(const IntegerLattice& L);
bool is_pure(const IntegerLattice& L);

IntegerLattice intersect(const IntegerLattice& a, const IntegerLattice& b);

/// Primitive integer vector on the line of a rational vector.
IntVec primitive_integer_vector(const std::vector<Rational>& v);

}  // namespace zc
