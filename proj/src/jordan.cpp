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

#include "zclosure/jordan.hpp"

#include "zclosure/errors.hpp"
#include "zclosure/linalg.hpp"

namespace zc {

template <class F>
AdditiveJordan<F> additive_jordan(const Matrix<F>& x) {
  if (!x.is_square()) throw DomainError("Jordan decomposition of a non-square matrix");
  const size_t n = x.rows();
  const Poly<F> p = squarefree_part(min_poly(x));
  const Poly<F> dp = p.derivative();
  Matrix<F> s = x;
  for (size_t iter = 0;; ++iter) {
    Matrix<F> ps = evaluate(p, s);
    if (ps.is_zero()) break;
    ZC_ASSERT(iter <= 2 * n + 2, "Chevalley iteration did not converge");
    s = s - ps * inverse(evaluate(dp, s));
  }
  return {s, x - s};
}

template <class F>
JordanPair<F> multiplicative_jordan(const Matrix<F>& g) {
  if (!g.is_square()) throw DomainError("Jordan decomposition of a non-square matrix");
  if (is_zero(determinant(g))) throw DomainError("singular input");
  auto a = additive_jordan(g);
  Matrix<F> u = inverse(a.semisimple) * g;
  return {std::move(a.semisimple), std::move(u)};
}

template <class F>
bool is_nilpotent(const Matrix<F>& x) {
  if (!x.is_square()) return false;
  return matrix_pow(x, static_cast<unsigned>(x.rows())).is_zero();
}

template <class F>
bool is_unipotent(const Matrix<F>& u) {
  return is_nilpotent(u - Matrix<F>::identity(u.rows()));
}

template <class F>
bool is_semisimple(const Matrix<F>& x) {
  Poly<F> m = min_poly(x);
  return gcd(m, m.derivative()).degree() == 0;
}

template <class F>
Matrix<F> log_unipotent(const Matrix<F>& u) {
  if (!u.is_square()) throw DomainError("not unipotent");
  const size_t n = u.rows();
  const Matrix<F> y = u - Matrix<F>::identity(n);
  if (!is_nilpotent(y)) throw DomainError("not unipotent");
  Matrix<F> acc(n, n), term = y;
  for (size_t i = 1; i < n && !term.is_zero(); ++i) {
    F c = inverse(F(static_cast<long>(i)));
    if (i % 2 == 0) c = -c;
    acc += term * c;
    term = term * y;
  }
  return acc;
}

template <class F>
Matrix<F> exp_nilpotent(const Matrix<F>& x) {
  if (!is_nilpotent(x)) throw DomainError("not nilpotent");
  const size_t n = x.rows();
  Matrix<F> acc = Matrix<F>::identity(n), term = Matrix<F>::identity(n);
  for (size_t i = 1; i < n; ++i) {
    term = term * x * inverse(F(static_cast<long>(i)));
    if (term.is_zero()) break;
    acc += term;
  }
  return acc;
}

#define ZC_INSTANTIATE(F)                                              \
  template AdditiveJordan<F> additive_jordan<F>(const Matrix<F>&);     \
  template JordanPair<F> multiplicative_jordan<F>(const Matrix<F>&);   \
  template bool is_nilpotent<F>(const Matrix<F>&);                     \
  template bool is_unipotent<F>(const Matrix<F>&);                     \
  template bool is_semisimple<F>(const Matrix<F>&);                    \
  template Matrix<F> log_unipotent<F>(const Matrix<F>&);               \
  template Matrix<F> exp_nilpotent<F>(const Matrix<F>&);

ZC_INSTANTIATE(Rational)
ZC_INSTANTIATE(NfElem)

}  // namespace zc
