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
#include <vector>

#include "zclosure/factor.hpp"
#include "zclosure/lattice.hpp"
#include "zclosure/linalg.hpp"
#include "zclosure/matrix.hpp"
#include "zclosure/splitting.hpp"

namespace zc {

/// A toral subalgebra t split over an extension L of the base field. With x
/// a generic element of t, every element of t is a polynomial in x and the
/// joint eigenspaces of t are the eigenspaces of x. Weight coordinates are
/// indexed by the distinct eigenvalues `roots` of x: an element g(x) acts on
/// the eigenspace of roots[j] by g(roots[j]).
template <class F>
struct DiagonalizedTorus {
  size_t n = 0;
  Extension ext;
  Matrix<F> x;
  Poly<F> minpoly;                // of x, squarefree of degree r
  std::vector<Matrix<F>> powers;  // x^0, ..., x^(r-1)
  std::vector<NfElem> roots;      // in ext.field()
  /// Weights of each basis element of t.
  std::vector<std::vector<NfElem>> diagonals;
  /// Lambda(t) in weight coordinates (ambient dimension r).
  IntegerLattice lattice;

  size_t rank() const { return roots.size(); }
};

/// Lambda(t) = {e in Z^n : sum b_i e_i = 0 for every diag(b) in t}; pure.
/// Entries may lie in a number field: each equation is split into its
/// rational coordinates.
template <class F>
IntegerLattice lattice_of_toral_algebra(const std::vector<std::vector<F>>& diagonals, size_t n);

template <class F>
IntegerLattice lattice_of_toral_algebra(const std::vector<Matrix<F>>& diagonal_matrices, size_t n);

/// t(L) = {diag(b) : sum b_i e_i = 0 for e in L}, as a subspace of n x n
/// matrices over Q.
Subspace<Rational> toral_algebra_of_lattice(const IntegerLattice& L, size_t n);

/// Diagonal entries of a basis of t(L).
std::vector<std::vector<Rational>> toral_diagonals_of_lattice(const IntegerLattice& L, size_t n);

/// Splits pairwise commuting semisimple matrices with entries in `base`
/// (Q for Rational) using a generic combination and the splitting field of
/// its minimal polynomial. A semisimple `hint` commuting with the basis is
/// tried first as x; small entries keep the splitting field small.
template <class F>
DiagonalizedTorus<F> diagonalize_toral(const std::vector<Matrix<F>>& basis, size_t n, const FieldPtr& base,
                                       const FieldLimits& limits = {}, const Matrix<F>* hint = nullptr);

/// Coefficients c with y = sum c_i x^i, if y is a polynomial in T.x.
template <class F>
std::optional<std::vector<F>> polynomial_in(const DiagonalizedTorus<F>& T, const Matrix<F>& y);

/// Values at T.roots of the polynomial with coefficients c.
template <class F>
std::vector<NfElem> weights_of(const DiagonalizedTorus<F>& T, const std::vector<F>& c);

/// s in the torus with Lie algebra t: s is a polynomial in x and its weights
/// satisfy every relation of Lambda(t).
template <class F>
bool torus_contains(const DiagonalizedTorus<F>& T, const Matrix<F>& s);

/// Base-field matrices in the L-span of the elements acting on the
/// eigenspace of roots[j] by b[j], for b in `weights` (rational weight
/// vectors of length r). A basis over the base field.
template <class F>
std::vector<Matrix<F>> rational_toral_elements(const DiagonalizedTorus<F>& T,
                                               const std::vector<std::vector<Rational>>& weights);

/// prod alphas_i^e_i, exact.
NfElem power_product(const std::vector<NfElem>& alphas, const IntVec& e, const FieldPtr& K);

/// prod alphas_i^e_i == 1, comparing the positive and negative parts so that
/// no inverse is formed.
bool relation_holds(const std::vector<NfElem>& alphas, const IntVec& e, const FieldPtr& K);

}  // namespace zc
