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
#include <utility>
#include <vector>

#include "zclosure/errors.hpp"
#include "zclosure/matrix.hpp"
#include "zclosure/poly.hpp"

namespace zc {

class Extension;

template <class F>
struct RrefResult {
  Matrix<F> reduced;
  size_t rank = 0;
  std::vector<size_t> pivots;
};

template <class F>
RrefResult<F> rref(Matrix<F> m) {
  RrefResult<F> out;
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t piv = row;
    while (piv < m.rows() && is_zero(m(piv, col))) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row)
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m(piv, j), m(row, j));
    const F inv = inverse(m(row, col));
    for (size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      const F f = m(i, col);
      for (size_t j = col; j < m.cols(); ++j)
        if (!is_zero(m(row, j))) m(i, j) -= f * m(row, j);
    }
    out.pivots.push_back(col);
    ++row;
  }
  out.rank = row;
  out.reduced = std::move(m);
  return out;
}

/// Subspace of F^n kept as a reduced echelon basis, so equal subspaces have
/// identical bases. Matrices are stored flattened row-major.
template <class F>
class Subspace {
 public:
  explicit Subspace(size_t ambient = 0) : ambient_(ambient) {}

  static Subspace span(size_t ambient, const std::vector<std::vector<F>>& vectors) {
    Subspace s(ambient);
    for (const auto& v : vectors) s.add(v);
    return s;
  }
  static Subspace full(size_t ambient) {
    Subspace s(ambient);
    for (size_t i = 0; i < ambient; ++i) {
      std::vector<F> e(ambient, F(0));
      e[i] = F(1);
      s.add(std::move(e));
    }
    return s;
  }

  size_t ambient_dim() const { return ambient_; }
  size_t dim() const { return basis_.size(); }
  const std::vector<std::vector<F>>& basis() const { return basis_; }
  const std::vector<size_t>& pivots() const { return pivots_; }

  /// v minus its projection along the pivot coordinates; zero iff v is in
  /// the subspace.
  std::vector<F> reduce(std::vector<F> v) const {
    check(v);
    for (size_t k = 0; k < basis_.size(); ++k) {
      const F f = v[pivots_[k]];
      if (is_zero(f)) continue;
      const auto& b = basis_[k];
      for (size_t j = pivots_[k]; j < ambient_; ++j)
        if (!is_zero(b[j])) v[j] -= f * b[j];
    }
    return v;
  }

  bool contains(const std::vector<F>& v) const {
    for (const auto& x : reduce(v))
      if (!is_zero(x)) return false;
    return true;
  }
  bool contains(const Subspace& o) const {
    for (const auto& b : o.basis_)
      if (!contains(b)) return false;
    return true;
  }

  /// Adds v; returns true when the dimension grew.
  bool add(std::vector<F> v) {
    v = reduce(std::move(v));
    size_t p = 0;
    while (p < ambient_ && is_zero(v[p])) ++p;
    if (p == ambient_) return false;
    const F inv = inverse(v[p]);
    for (size_t j = p; j < ambient_; ++j) v[j] *= inv;
    for (auto& b : basis_) {
      const F f = b[p];
      if (is_zero(f)) continue;
      for (size_t j = p; j < ambient_; ++j)
        if (!is_zero(v[j])) b[j] -= f * v[j];
    }
    size_t pos = 0;
    while (pos < pivots_.size() && pivots_[pos] < p) ++pos;
    basis_.insert(basis_.begin() + static_cast<long>(pos), std::move(v));
    pivots_.insert(pivots_.begin() + static_cast<long>(pos), p);
    return true;
  }

  /// Coordinates of v (assumed in the subspace) in the stored basis.
  std::vector<F> coordinates(const std::vector<F>& v) const {
    std::vector<F> c;
    for (size_t p : pivots_) c.push_back(v[p]);
    return c;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  void check(const std::vector<F>& v) const {
    if (v.size() != ambient_) throw DomainError("vector length does not match subspace");
  }
  size_t ambient_;
  std::vector<std::vector<F>> basis_;
  std::vector<size_t> pivots_;
};

/// Right null space.
template <class F>
Subspace<F> kernel(const Matrix<F>& m) {
  auto r = rref(m);
  const size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (size_t p : r.pivots) is_pivot[p] = true;
  Subspace<F> out(n);
  for (size_t free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> v(n, F(0));
    v[free] = F(1);
    for (size_t k = 0; k < r.pivots.size(); ++k) v[r.pivots[k]] = -r.reduced(k, free);
    out.add(std::move(v));
  }
  return out;
}

template <class F>
size_t rank(const Matrix<F>& m) {
  return rref(m).rank;
}

/// Some solution of A x = b, or nullopt.
template <class F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
  if (b.size() != a.rows()) throw DomainError("solve: shape mismatch");
  Matrix<F> aug(a.rows(), a.cols() + 1);
  for (size_t i = 0; i < a.rows(); ++i) {
    for (size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  auto r = rref(std::move(aug));
  if (!r.pivots.empty() && r.pivots.back() == a.cols()) return std::nullopt;
  std::vector<F> x(a.cols(), F(0));
  for (size_t k = 0; k < r.pivots.size(); ++k) x[r.pivots[k]] = r.reduced(k, a.cols());
  return x;
}

template <class F>
Matrix<F> inverse(const Matrix<F>& m) {
  if (!m.is_square()) throw DomainError("inverse of non-square matrix");
  const size_t n = m.rows();
  Matrix<F> aug(n, 2 * n);
  for (size_t i = 0; i < n; ++i) {
    for (size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = F(1);
  }
  auto r = rref(std::move(aug));
  if (r.rank < n || r.pivots[n - 1] != n - 1) throw DomainError("singular matrix");
  Matrix<F> inv(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv(i, j) = r.reduced(i, n + j);
  return inv;
}

/// Fraction-free determinant (Bareiss) of an integer matrix given row-major.
Integer bareiss_determinant(std::vector<Integer> a, size_t n);

/// Division-free characteristic polynomial det(xI - m) over a commutative
/// ring (Berkowitz), coefficients lowest degree first.
template <class R>
std::vector<R> berkowitz(const std::vector<R>& a, size_t n) {
  if (n == 0) return {R(1)};
  auto at = [&](size_t i, size_t j) -> const R& { return a[i * n + j]; };
  // highest degree first while building
  std::vector<R> vect{R(1), -at(n - 1, n - 1)};
  for (size_t k = n - 1; k-- > 0;) {
    const size_t m = n - 1 - k;  // size of trailing block
    std::vector<R> q{R(1), -at(k, k)};
    std::vector<R> v(m);
    for (size_t i = 0; i < m; ++i) v[i] = at(k + 1 + i, k);
    for (size_t j = 0; j < m; ++j) {
      R rc(0);
      for (size_t i = 0; i < m; ++i) rc += at(k, k + 1 + i) * v[i];
      q.push_back(-rc);
      if (j + 1 < m) {
        std::vector<R> w(m, R(0));
        for (size_t r = 0; r < m; ++r)
          for (size_t c = 0; c < m; ++c) w[r] += at(k + 1 + r, k + 1 + c) * v[c];
        v = std::move(w);
      }
    }
    std::vector<R> next(m + 2, R(0));
    for (size_t i = 0; i < m + 2; ++i)
      for (size_t j = 0; j <= i && j < m + 1; ++j) next[i] += q[i - j] * vect[j];
    vect = std::move(next);
  }
  return std::vector<R>(vect.rbegin(), vect.rend());
}

template <class F>
Poly<F> char_poly(const Matrix<F>& m) {
  if (!m.is_square()) throw DomainError("char_poly of non-square matrix");
  if constexpr (std::is_same_v<F, Rational>) {
    // Scale to an integer matrix N = D*m, then chi_m(x) = D^-n chi_N(D x).
    const size_t n = m.rows();
    Integer den = common_denominator(m.flatten());
    std::vector<Integer> a;
    for (const auto& x : m.flatten()) {
      Rational s = x * den;
      a.push_back(s.get_num());
    }
    std::vector<Integer> c = berkowitz(a, n);
    std::vector<Rational> r;
    Rational dinv = Rational(1) / Rational(den);
    // coefficient of x^i picks up D^(i - n)
    std::vector<Rational> powers(n + 1);
    powers[n] = 1;
    for (size_t i = n; i-- > 0;) powers[i] = powers[i + 1] * dinv;
    for (size_t i = 0; i <= n; ++i) r.push_back(Rational(c[i]) * powers[i]);
    return Poly<F>(std::move(r));
  } else {
    return Poly<F>(berkowitz(m.flatten(), m.rows()));
  }
}

template <class F>
F determinant(const Matrix<F>& m) {
  if (!m.is_square()) throw DomainError("determinant of non-square matrix");
  const size_t n = m.rows();
  if constexpr (std::is_same_v<F, Rational>) {
    Integer den = common_denominator(m.flatten());
    std::vector<Integer> a;
    for (const auto& x : m.flatten()) {
      Rational s = x * den;
      a.push_back(s.get_num());
    }
    Rational d(bareiss_determinant(std::move(a), n));
    Integer dn;
    mpz_pow_ui(dn.get_mpz_t(), den.get_mpz_t(), n);
    return d / Rational(dn);
  } else {
    Matrix<F> a = m;
    F det(1);
    for (size_t col = 0; col < n; ++col) {
      size_t piv = col;
      while (piv < n && is_zero(a(piv, col))) ++piv;
      if (piv == n) return F(0);
      if (piv != col) {
        for (size_t j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
        det = -det;
      }
      det *= a(col, col);
      const F inv = inverse(a(col, col));
      for (size_t i = col + 1; i < n; ++i) {
        if (is_zero(a(i, col))) continue;
        const F f = a(i, col) * inv;
        for (size_t j = col; j < n; ++j) a(i, j) -= f * a(col, j);
      }
    }
    return det;
  }
}

/// Minimal polynomial via the first linear dependence among I, m, m^2, ...
template <class F>
Poly<F> min_poly(const Matrix<F>& m) {
  if (!m.is_square()) throw DomainError("min_poly of non-square matrix");
  const size_t n = m.rows();
  const size_t nn = n * n;
  struct Row {
    std::vector<F> vec, comb;
    size_t pivot;
  };
  std::vector<Row> rows;
  Matrix<F> power = Matrix<F>::identity(n);
  for (size_t k = 0; k <= n; ++k) {
    std::vector<F> vec = power.flatten();
    std::vector<F> comb(n + 1, F(0));
    comb[k] = F(1);
    for (const auto& row : rows) {
      const F f = vec[row.pivot];
      if (is_zero(f)) continue;
      for (size_t i = row.pivot; i < nn; ++i)
        if (!is_zero(row.vec[i])) vec[i] -= f * row.vec[i];
      for (size_t i = 0; i <= k; ++i)
        if (!is_zero(row.comb[i])) comb[i] -= f * row.comb[i];
    }
    size_t p = 0;
    while (p < nn && is_zero(vec[p])) ++p;
    if (p == nn) {
      comb.resize(k + 1);
      return Poly<F>(std::move(comb));
    }
    const F inv = inverse(vec[p]);
    for (auto& x : vec) x *= inv;
    for (auto& x : comb) x *= inv;
    rows.push_back({std::move(vec), std::move(comb), p});
    power = power * m;
  }
  throw InvariantViolation("minimal polynomial exceeds matrix size");
}

/// Flattening helpers for matrix subspaces.
template <class F>
std::vector<Matrix<F>> basis_matrices(const Subspace<F>& s, size_t n) {
  std::vector<Matrix<F>> out;
  for (const auto& v : s.basis()) out.push_back(Matrix<F>::from_flat(n, v));
  return out;
}

/// The subspace of V consisting of points over the base field of `ext`,
/// returned over F (Rational when the base is Q, NfElem in the base field
/// otherwise). Throws DomainError("not defined over the base field") when
/// its dimension differs from dim V.
template <class F>
Subspace<F> rational_form(const Subspace<NfElem>& v, const Extension& ext);

}  // namespace zc
