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

#include "zclosure/torus.hpp"

#include <random>

#include "zclosure/errors.hpp"

namespace zc {

namespace {

NfElem to_base(const Rational& q, const FieldPtr& base) { return NfElem(base, q); }
NfElem to_base(const NfElem& a, const FieldPtr& base) { return a.in_field(base); }

NfElem to_ext(const Rational& q, const Extension& ext) { return NfElem(ext.field(), q); }
NfElem to_ext(const NfElem& a, const Extension& ext) { return ext.embed(a); }

NfElem pow_positive(const NfElem& a, const Integer& e, const FieldPtr& K) {
  NfElem r(K, Rational(1));
  if (e == 0) return r;
  NfElem b = a.in_field(K);
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r *= r;
    if (mpz_tstbit(e.get_mpz_t(), i)) r *= b;
  }
  return r;
}

}  // namespace

template <class F>
Matrix<NfElem> embed_matrix(const Matrix<F>& m, const Extension& ext) {
  return m.template map<NfElem>([&](const F& x) { return to_ext(x, ext); });
}

NfElem power_product(const std::vector<NfElem>& alphas, const IntVec& e, const FieldPtr& K) {
  NfElem num(K, Rational(1)), den(K, Rational(1));
  for (size_t i = 0; i < alphas.size(); ++i) {
    if (e[i] > 0) num *= pow_positive(alphas[i], e[i], K);
    if (e[i] < 0) den *= pow_positive(alphas[i], -e[i], K);
  }
  return num / den;
}

bool relation_holds(const std::vector<NfElem>& alphas, const IntVec& e, const FieldPtr& K) {
  NfElem num(K, Rational(1)), den(K, Rational(1));
  for (size_t i = 0; i < alphas.size(); ++i) {
    if (e[i] > 0) num *= pow_positive(alphas[i], e[i], K);
    if (e[i] < 0) den *= pow_positive(alphas[i], -e[i], K);
  }
  return num == den;
}

template <class F>
IntegerLattice lattice_of_toral_algebra(const std::vector<std::vector<F>>& diagonals, size_t n) {
  std::vector<std::vector<Rational>> rows;
  for (const auto& b : diagonals) {
    if (b.size() != n) throw DomainError("diagonal has the wrong length");
    size_t width = 0;
    std::vector<std::vector<Rational>> coords;
    for (const auto& x : b) {
      coords.push_back(rational_coords(x));
      width = std::max(width, coords.back().size());
    }
    for (size_t t = 0; t < width; ++t) {
      std::vector<Rational> row;
      for (const auto& c : coords) row.push_back(t < c.size() ? c[t] : Rational(0));
      rows.push_back(std::move(row));
    }
  }
  if (rows.empty()) return IntegerLattice::full(n);
  Matrix<Rational> m(rows.size(), n);
  for (size_t i = 0; i < rows.size(); ++i)
    for (size_t j = 0; j < n; ++j) m(i, j) = rows[i][j];
  return integer_kernel(m);
}

template <class F>
IntegerLattice lattice_of_toral_algebra(const std::vector<Matrix<F>>& diagonal_matrices, size_t n) {
  std::vector<std::vector<F>> d;
  for (const auto& m : diagonal_matrices) {
    if (!m.is_diagonal()) throw DomainError("toral basis element is not diagonal");
    d.push_back(m.diagonal_entries());
  }
  return lattice_of_toral_algebra(d, n);
}

std::vector<std::vector<Rational>> toral_diagonals_of_lattice(const IntegerLattice& L, size_t n) {
  if (L.ambient_dim() != n) throw DomainError("lattice dimension differs from n");
  if (L.rank() == 0) return Subspace<Rational>::full(n).basis();
  Matrix<Rational> m(L.rank(), n);
  for (size_t i = 0; i < L.rank(); ++i)
    for (size_t j = 0; j < n; ++j) m(i, j) = Rational(L.basis()[i][j]);
  return kernel(m).basis();
}

Subspace<Rational> toral_algebra_of_lattice(const IntegerLattice& L, size_t n) {
  Subspace<Rational> out(n * n);
  for (const auto& b : toral_diagonals_of_lattice(L, n))
    out.add(Matrix<Rational>::diagonal(b).flatten());
  return out;
}

template <class F>
std::optional<std::vector<F>> polynomial_in(const DiagonalizedTorus<F>& T, const Matrix<F>& y) {
  if (y.rows() != T.n || y.cols() != T.n) throw DomainError("matrix size differs from torus");
  const size_t nn = T.n * T.n, r = T.powers.size();
  Matrix<F> m(nn, r);
  for (size_t k = 0; k < r; ++k)
    for (size_t i = 0; i < nn; ++i) m(i, k) = T.powers[k].flatten()[i];
  return solve(m, y.flatten());
}

template <class F>
std::vector<NfElem> weights_of(const DiagonalizedTorus<F>& T, const std::vector<F>& c) {
  const FieldPtr& L = T.ext.field();
  std::vector<NfElem> w;
  for (const auto& lambda : T.roots) {
    NfElem acc(L, Rational(0));
    for (size_t i = c.size(); i-- > 0;) acc = acc * lambda + to_ext(c[i], T.ext);
    w.push_back(std::move(acc));
  }
  return w;
}

template <class F>
DiagonalizedTorus<F> diagonalize_toral(const std::vector<Matrix<F>>& basis, size_t n, const FieldPtr& base,
                                       const FieldLimits& limits, const Matrix<F>* hint) {
  for (const auto& b : basis)
    if (b.rows() != n || b.cols() != n) throw DomainError("toral basis element has the wrong size");
  std::mt19937_64 rng(0x70a5);
  for (int attempt = hint ? -1 : 0; attempt < 24; ++attempt) {
    DiagonalizedTorus<F> T;
    T.n = n;
    T.x = Matrix<F>(n, n);
    if (attempt < 0) {
      if (hint->rows() != n || hint->cols() != n) throw DomainError("hint has the wrong size");
      T.x = *hint;
    }
    for (size_t k = 0; k < basis.size() && attempt >= 0; ++k) {
      long c = static_cast<long>(k) + 1;
      if (attempt > 0) {
        std::uniform_int_distribution<long> dist(-(attempt + 2), attempt + 2);
        c = dist(rng);
      }
      T.x += basis[k] * F(c);
    }
    T.minpoly = min_poly(T.x);
    if (gcd(T.minpoly, T.minpoly.derivative()).degree() > 0) {
      if (attempt < 0) continue;
      throw DomainError("toral basis is not semisimple");
    }
    const size_t r = static_cast<size_t>(T.minpoly.degree());
    T.powers.push_back(Matrix<F>::identity(n));
    for (size_t k = 1; k < r; ++k) T.powers.push_back(T.powers.back() * T.x);
    std::vector<std::vector<F>> coeffs;
    bool generic = true;
    for (const auto& b : basis) {
      auto c = polynomial_in(T, b);
      if (!c) {
        generic = false;
        break;
      }
      coeffs.push_back(std::move(*c));
    }
    if (!generic) continue;
    const Poly<NfElem> mpk = T.minpoly.template map<NfElem>([&](const F& a) { return to_base(a, base); });
    SplittingField sf = splitting_field(mpk, base, limits);
    T.ext = sf.ext;
    T.roots = std::move(sf.roots);
    for (const auto& c : coeffs) T.diagonals.push_back(weights_of(T, c));
    T.lattice = lattice_of_toral_algebra(T.diagonals, r);
    return T;
  }
  throw DomainError("toral basis is not simultaneously diagonalizable");
}

template <class F>
bool torus_contains(const DiagonalizedTorus<F>& T, const Matrix<F>& s) {
  const auto c = polynomial_in(T, s);
  if (!c) return false;
  const std::vector<NfElem> a = weights_of(T, *c);
  for (const auto& x : a)
    if (x.is_zero()) return false;
  for (const auto& e : T.lattice.basis())
    if (!relation_holds(a, e, T.ext.field())) return false;
  return true;
}

template <class F>
std::vector<Matrix<F>> rational_toral_elements(const DiagonalizedTorus<F>& T,
                                               const std::vector<std::vector<Rational>>& weights) {
  const FieldPtr& L = T.ext.field();
  const size_t r = T.rank();
  std::vector<NfElem> m;
  for (const auto& c : T.minpoly.coeffs()) m.push_back(to_ext(c, T.ext));
  // Lagrange basis: l_j = q_j / q_j(root_j) with q_j = m / (t - root_j).
  std::vector<std::vector<NfElem>> lagrange;
  for (const auto& lambda : T.roots) {
    std::vector<NfElem> q(r, NfElem(L, Rational(0)));
    NfElem carry(L, Rational(0));
    for (size_t i = r; i-- > 0;) {
      carry = carry * lambda + m[i + 1];
      q[i] = carry;
    }
    NfElem at(L, Rational(0));
    for (size_t i = r; i-- > 0;) at = at * lambda + q[i];
    const NfElem inv = at.inverse();
    for (auto& x : q) x *= inv;
    lagrange.push_back(std::move(q));
  }
  Subspace<NfElem> span(r);
  for (const auto& b : weights) {
    if (b.size() != r) throw DomainError("weight vector has the wrong length");
    std::vector<NfElem> v(r, NfElem(L, Rational(0)));
    for (size_t j = 0; j < r; ++j)
      if (b[j] != 0)
        for (size_t i = 0; i < r; ++i) v[i] += lagrange[j][i] * NfElem(b[j]);
    span.add(std::move(v));
  }
  std::vector<Matrix<F>> out;
  const Subspace<F> rational = rational_form<F>(span, T.ext);
  for (const auto& c : rational.basis()) {
    Matrix<F> acc(T.n, T.n);
    for (size_t i = 0; i < r; ++i)
      if (!detail::scalar_is_zero(c[i])) acc += T.powers[i] * c[i];
    out.push_back(std::move(acc));
  }
  return out;
}

#define ZC_INSTANTIATE(F)                                                                                      \
  template Matrix<NfElem> embed_matrix<F>(const Matrix<F>&, const Extension&);                                 \
  template IntegerLattice lattice_of_toral_algebra<F>(const std::vector<std::vector<F>>&, size_t);             \
  template IntegerLattice lattice_of_toral_algebra<F>(const std::vector<Matrix<F>>&, size_t);                  \
  template DiagonalizedTorus<F> diagonalize_toral<F>(const std::vector<Matrix<F>>&, size_t, const FieldPtr&,   \
                                                     const FieldLimits&, const Matrix<F>*);                    \
  template std::optional<std::vector<F>> polynomial_in<F>(const DiagonalizedTorus<F>&, const Matrix<F>&);      \
  template std::vector<NfElem> weights_of<F>(const DiagonalizedTorus<F>&, const std::vector<F>&);              \
  template bool torus_contains<F>(const DiagonalizedTorus<F>&, const Matrix<F>&);                              \
  template std::vector<Matrix<F>> rational_toral_elements<F>(const DiagonalizedTorus<F>&,                      \
                                                             const std::vector<std::vector<Rational>>&);

ZC_INSTANTIATE(Rational)
ZC_INSTANTIATE(NfElem)

}  // namespace zc
