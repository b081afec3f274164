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

#include "zclosure/matrix.hpp"

namespace zc {

template <class F>
struct AdditiveJordan {
  Matrix<F> semisimple;
  Matrix<F> nilpotent;
};

/// g = semisimple * unipotent with commuting factors.
template <class F>
struct JordanPair {
  Matrix<F> semisimple;
  Matrix<F> unipotent;
};

/// x = s + n with s semisimple, n nilpotent, sn = ns. Newton iteration on the
/// squarefree part of the minimal polynomial, over the field of the entries.
template <class F>
AdditiveJordan<F> additive_jordan(const Matrix<F>& x);

/// Throws DomainError("singular input") for singular g.
template <class F>
JordanPair<F> multiplicative_jordan(const Matrix<F>& g);

template <class F>
bool is_nilpotent(const Matrix<F>& x);

template <class F>
bool is_unipotent(const Matrix<F>& u);

/// Squarefree minimal polynomial.
template <class F>
bool is_semisimple(const Matrix<F>& x);

/// sum_{i >= 1} (-1)^(i-1) (u - 1)^i / i; throws DomainError("not unipotent").
template <class F>
Matrix<F> log_unipotent(const Matrix<F>& u);

/// Truncated exponential series; throws DomainError("not nilpotent").
template <class F>
Matrix<F> exp_nilpotent(const Matrix<F>& x);

}  // namespace zc
