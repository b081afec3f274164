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
#include <string>
#include <utility>
#include <vector>

#include "zclosure/linalg.hpp"
#include "zclosure/matrix.hpp"

namespace zc {

/// Subspace of n x n matrices (flattened row-major) closed under the
/// commutator. Construction through generated_subalgebra guarantees closure;
/// from_space trusts the caller.
template <class F>
class LieSubalgebra {
 public:
  explicit LieSubalgebra(size_t n = 0) : n_(n), space_(n * n) {}
  static LieSubalgebra from_space(size_t n, Subspace<F> space) {
    LieSubalgebra L(n);
    if (space.ambient_dim() != n * n) throw DomainError("subspace is not a matrix space");
    L.space_ = std::move(space);
    return L;
  }
  static LieSubalgebra full(size_t n) { return from_space(n, Subspace<F>::full(n * n)); }

  size_t n() const { return n_; }
  size_t dim() const { return space_.dim(); }
  const Subspace<F>& space() const { return space_; }
  std::vector<Matrix<F>> basis() const { return basis_matrices(space_, n_); }
  bool contains(const Matrix<F>& x) const { return space_.contains(x.flatten()); }
  bool contains(const LieSubalgebra& o) const { return space_.contains(o.space_); }
  /// Coordinates of x (assumed in the algebra) in the stored basis.
  std::vector<F> coordinates(const Matrix<F>& x) const { return space_.coordinates(x.flatten()); }
  Matrix<F> element(const std::vector<F>& coords) const;

  /// Canonical text key.
  std::string key() const;

  friend bool operator==(const LieSubalgebra& a, const LieSubalgebra& b) {
    return a.n_ == b.n_ && a.space_ == b.space_;
  }
  friend bool operator!=(const LieSubalgebra& a, const LieSubalgebra& b) { return !(a == b); }

 private:
  size_t n_;
  Subspace<F> space_;
};

/// Smallest bracket-closed subspace containing gens (all n x n).
template <class F>
LieSubalgebra<F> generated_subalgebra(size_t n, const std::vector<Matrix<F>>& gens);

template <class F>
bool is_bracket_closed(const LieSubalgebra<F>& L);

/// g L g^-1.
template <class F>
LieSubalgebra<F> conjugate_subalgebra(const Matrix<F>& g, const LieSubalgebra<F>& L);
template <class F>
LieSubalgebra<F> conjugate_subalgebra(const Matrix<F>& g, const Matrix<F>& g_inv, const LieSubalgebra<F>& L);

/// {x in L : sx = xs}.
template <class F>
LieSubalgebra<F> centralizer_in(const LieSubalgebra<F>& L, const Matrix<F>& s);

/// {x in L : [x, H] in H}.
template <class F>
LieSubalgebra<F> normalizer_in(const LieSubalgebra<F>& L, const LieSubalgebra<F>& H);

/// Lower central series reaches zero.
template <class F>
bool is_nilpotent_algebra(const LieSubalgebra<F>& L);

template <class F>
bool is_abelian(const LieSubalgebra<F>& L);

struct CartanOptions {
  std::uint64_t seed = 1;
  int max_trials = 200;
};

/// A nilpotent self-normalizing subalgebra of L: the Fitting null component
/// of ad(x) for a randomly searched x, verified before returning. Throws
/// BudgetError("Cartan search exhausted") after max_trials.
template <class F>
LieSubalgebra<F> cartan_subalgebra(const LieSubalgebra<F>& L, const CartanOptions& opts = {});

/// H = t + u with t spanned by the semisimple and u by the nilpotent parts
/// of H's basis. Throws DomainError("not split") on a dimension mismatch.
template <class F>
std::pair<Subspace<F>, Subspace<F>> split_semisimple_nilpotent(const LieSubalgebra<F>& H);

}  // namespace zc
