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

#include "zclosure/linalg.hpp"

#include "zclosure/splitting.hpp"

namespace zc {

Integer bareiss_determinant(std::vector<Integer> a, size_t n) {
  if (n == 0) return 1;
  auto at = [&](size_t i, size_t j) -> Integer& { return a[i * n + j]; };
  Integer prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      size_t piv = k + 1;
      while (piv < n && at(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      for (size_t j = 0; j < n; ++j) std::swap(at(k, j), at(piv, j));
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        Integer t = at(i, j) * at(k, k);
        mpz_submul(t.get_mpz_t(), at(i, k).get_mpz_t(), at(k, j).get_mpz_t());
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      at(i, k) = 0;
    }
    prev = at(k, k);
  }
  return sign * at(n - 1, n - 1);
}

namespace {

Rational to_scalar(const NfElem& b, Rational*) { return b.rational_value(); }
NfElem to_scalar(const NfElem& b, NfElem*) { return b; }

}  // namespace

template <class F>
Subspace<F> rational_form(const Subspace<NfElem>& v, const Extension& ext) {
  const size_t N = v.ambient_dim();
  Subspace<F> zero(N);
  if (v.dim() == 0) return zero;
  const int m = ext.relative_degree();
  std::vector<bool> is_pivot(N, false);
  for (size_t p : v.pivots()) is_pivot[p] = true;
  // x in V iff x_j = sum_k x_{p_k} b_k[j] for each non-pivot j.
  std::vector<std::vector<F>> rows;
  for (size_t j = 0; j < N; ++j) {
    if (is_pivot[j]) continue;
    std::vector<std::vector<F>> split(m, std::vector<F>(N, F(0)));
    split[0][j] = F(1);
    for (size_t k = 0; k < v.dim(); ++k) {
      const NfElem& a = v.basis()[k][j];
      if (a.is_zero()) continue;
      const auto parts = ext.base_coords(-a);
      for (int t = 0; t < m; ++t) split[t][v.pivots()[k]] = to_scalar(parts[t], static_cast<F*>(nullptr));
    }
    for (auto& r : split) {
      bool nonzero = false;
      for (const auto& x : r) nonzero = nonzero || !is_zero(x);
      if (nonzero) rows.push_back(std::move(r));
    }
  }
  Subspace<F> out(N);
  if (rows.empty()) {
    out = Subspace<F>::full(N);
  } else {
    Matrix<F> c(rows.size(), N);
    for (size_t i = 0; i < rows.size(); ++i)
      for (size_t j = 0; j < N; ++j) c(i, j) = rows[i][j];
    out = kernel(c);
  }
  if (out.dim() != v.dim()) throw DomainError("subspace is not defined over the base field");
  return out;
}

template Subspace<Rational> rational_form<Rational>(const Subspace<NfElem>&, const Extension&);
template Subspace<NfElem> rational_form<NfElem>(const Subspace<NfElem>&, const Extension&);

}  // namespace zc
