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

#include "zclosure/liealg.hpp"

#include <random>

#include "zclosure/errors.hpp"
#include "zclosure/jordan.hpp"

namespace zc {

template <class F>
Matrix<F> LieSubalgebra<F>::element(const std::vector<F>& coords) const {
  if (coords.size() != dim()) throw DomainError("coordinate count differs from dimension");
  std::vector<F> v(n_ * n_, F(0));
  for (size_t k = 0; k < coords.size(); ++k) {
    if (is_zero(coords[k])) continue;
    const auto& b = space_.basis()[k];
    for (size_t j = 0; j < v.size(); ++j)
      if (!is_zero(b[j])) v[j] += coords[k] * b[j];
  }
  return Matrix<F>::from_flat(n_, std::move(v));
}

template <class F>
std::string LieSubalgebra<F>::key() const {
  std::string s = std::to_string(n_) + "|";
  for (const auto& b : space_.basis()) {
    for (const auto& x : b) s += scalar_key(x) + ",";
    s += ";";
  }
  return s;
}

template <class F>
LieSubalgebra<F> generated_subalgebra(size_t n, const std::vector<Matrix<F>>& gens) {
  Subspace<F> space(n * n);
  std::vector<Matrix<F>> elems;
  auto add = [&](const Matrix<F>& x) {
    if (x.rows() != n || x.cols() != n) throw DomainError("generator has the wrong size");
    if (space.add(x.flatten())) elems.push_back(x);
  };
  for (const auto& g : gens) add(g);
  for (size_t i = 0; i < elems.size(); ++i)
    for (size_t j = 0; j < i; ++j) add(commutator(elems[j], elems[i]));
  return LieSubalgebra<F>::from_space(n, std::move(space));
}

template <class F>
bool is_bracket_closed(const LieSubalgebra<F>& L) {
  const auto b = L.basis();
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (!L.contains(commutator(b[j], b[i]))) return false;
  return true;
}

template <class F>
LieSubalgebra<F> conjugate_subalgebra(const Matrix<F>& g, const Matrix<F>& g_inv, const LieSubalgebra<F>& L) {
  Subspace<F> space(L.n() * L.n());
  for (const auto& x : L.basis()) space.add((g * x * g_inv).flatten());
  return LieSubalgebra<F>::from_space(L.n(), std::move(space));
}

template <class F>
LieSubalgebra<F> conjugate_subalgebra(const Matrix<F>& g, const LieSubalgebra<F>& L) {
  return conjugate_subalgebra(g, inverse(g), L);
}

namespace {

/// Elements of L whose coordinate vectors lie in the kernel of the matrix
/// whose k-th column is cols[k].
template <class F>
LieSubalgebra<F> sub_from_kernel(const LieSubalgebra<F>& L, const std::vector<std::vector<F>>& cols) {
  const size_t d = L.dim();
  Subspace<F> space(L.n() * L.n());
  if (d == 0) return LieSubalgebra<F>(L.n());
  const size_t rows = cols.empty() ? 0 : cols[0].size();
  Matrix<F> m(rows, d);
  for (size_t k = 0; k < d; ++k)
    for (size_t i = 0; i < rows; ++i) m(i, k) = cols[k][i];
  Subspace<F> ker = rows == 0 ? Subspace<F>::full(d) : kernel(m);
  for (const auto& c : ker.basis()) space.add(L.element(c).flatten());
  return LieSubalgebra<F>::from_space(L.n(), std::move(space));
}

}  // namespace

template <class F>
LieSubalgebra<F> centralizer_in(const LieSubalgebra<F>& L, const Matrix<F>& s) {
  std::vector<std::vector<F>> cols;
  for (const auto& b : L.basis()) cols.push_back(commutator(s, b).flatten());
  return sub_from_kernel(L, cols);
}

template <class F>
LieSubalgebra<F> normalizer_in(const LieSubalgebra<F>& L, const LieSubalgebra<F>& H) {
  const auto hb = H.basis();
  std::vector<std::vector<F>> cols;
  for (const auto& b : L.basis()) {
    std::vector<F> col;
    for (const auto& h : hb) {
      auto r = H.space().reduce(commutator(b, h).flatten());
      col.insert(col.end(), r.begin(), r.end());
    }
    cols.push_back(std::move(col));
  }
  return sub_from_kernel(L, cols);
}

template <class F>
bool is_abelian(const LieSubalgebra<F>& L) {
  const auto b = L.basis();
  for (size_t i = 0; i < b.size(); ++i)
    for (size_t j = 0; j < i; ++j)
      if (!commutator(b[j], b[i]).is_zero()) return false;
  return true;
}

template <class F>
bool is_nilpotent_algebra(const LieSubalgebra<F>& L) {
  const auto lb = L.basis();
  std::vector<Matrix<F>> cur = lb;
  size_t dim = L.dim();
  while (dim > 0) {
    Subspace<F> next(L.n() * L.n());
    std::vector<Matrix<F>> elems;
    for (const auto& x : lb)
      for (const auto& y : cur) {
        Matrix<F> c = commutator(x, y);
        if (next.add(c.flatten())) elems.push_back(std::move(c));
      }
    if (next.dim() == dim) return false;
    dim = next.dim();
    cur = std::move(elems);
  }
  return true;
}

namespace {

/// Matrix of ad(x) restricted to L in L's basis.
template <class F>
Matrix<F> ad_matrix(const LieSubalgebra<F>& L, const Matrix<F>& x) {
  const auto b = L.basis();
  Matrix<F> a(b.size(), b.size());
  for (size_t k = 0; k < b.size(); ++k) {
    const auto c = L.coordinates(commutator(x, b[k]));
    for (size_t i = 0; i < b.size(); ++i) a(i, k) = c[i];
  }
  return a;
}

/// Generalized 0-eigenspace of ad(x) on L.
template <class F>
LieSubalgebra<F> fitting_null(const LieSubalgebra<F>& L, const Matrix<F>& x) {
  Matrix<F> a = ad_matrix(L, x);
  Matrix<F> p = matrix_pow(a, static_cast<unsigned>(L.dim()));
  Subspace<F> ker = kernel(p);
  Subspace<F> space(L.n() * L.n());
  for (const auto& c : ker.basis()) space.add(L.element(c).flatten());
  return LieSubalgebra<F>::from_space(L.n(), std::move(space));
}

template <class F>
Matrix<F> random_element(const LieSubalgebra<F>& L, std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  std::vector<F> c;
  for (size_t k = 0; k < L.dim(); ++k) c.push_back(F(dist(rng)));
  return L.element(c);
}

}  // namespace

template <class F>
LieSubalgebra<F> cartan_subalgebra(const LieSubalgebra<F>& L, const CartanOptions& opts) {
  if (is_abelian(L)) return L;
  std::mt19937_64 rng(opts.seed);
  for (int trial = 0; trial < opts.max_trials; ++trial) {
    const long bound = 1 + trial / 10;
    Matrix<F> x = random_element(L, rng, bound);
    LieSubalgebra<F> H = fitting_null(L, x);
    // Descend while a nearby element of H has a smaller null component.
    for (int step = 0; step < 8 && !is_nilpotent_algebra(H); ++step) {
      bool improved = false;
      for (int t = 0; t < 4 && !improved; ++t) {
        Matrix<F> y = x + random_element(H, rng, bound);
        LieSubalgebra<F> H2 = fitting_null(L, y);
        if (H2.dim() < H.dim()) {
          x = std::move(y);
          H = std::move(H2);
          improved = true;
        }
      }
      if (!improved) break;
    }
    if (!is_nilpotent_algebra(H)) continue;
    if (normalizer_in(L, H) != H) continue;
    return H;
  }
  throw BudgetError("Cartan search exhausted");
}

template <class F>
std::pair<Subspace<F>, Subspace<F>> split_semisimple_nilpotent(const LieSubalgebra<F>& H) {
  const size_t nn = H.n() * H.n();
  Subspace<F> t(nn), u(nn);
  for (const auto& h : H.basis()) {
    auto j = additive_jordan(h);
    t.add(j.semisimple.flatten());
    u.add(j.nilpotent.flatten());
  }
  if (t.dim() + u.dim() != H.dim() || !H.space().contains(t) || !H.space().contains(u))
    throw DomainError("not split");
  return {std::move(t), std::move(u)};
}

#define ZC_INSTANTIATE(F)                                                                               \
  template class LieSubalgebra<F>;                                                                      \
  template LieSubalgebra<F> generated_subalgebra<F>(size_t, const std::vector<Matrix<F>>&);             \
  template bool is_bracket_closed<F>(const LieSubalgebra<F>&);                                          \
  template LieSubalgebra<F> conjugate_subalgebra<F>(const Matrix<F>&, const LieSubalgebra<F>&);         \
  template LieSubalgebra<F> conjugate_subalgebra<F>(const Matrix<F>&, const Matrix<F>&,                 \
                                                    const LieSubalgebra<F>&);                           \
  template LieSubalgebra<F> centralizer_in<F>(const LieSubalgebra<F>&, const Matrix<F>&);               \
  template LieSubalgebra<F> normalizer_in<F>(const LieSubalgebra<F>&, const LieSubalgebra<F>&);         \
  template bool is_nilpotent_algebra<F>(const LieSubalgebra<F>&);                                       \
  template bool is_abelian<F>(const LieSubalgebra<F>&);                                                 \
  template LieSubalgebra<F> cartan_subalgebra<F>(const LieSubalgebra<F>&, const CartanOptions&);        \
  template std::pair<Subspace<F>, Subspace<F>> split_semisimple_nilpotent<F>(const LieSubalgebra<F>&);

ZC_INSTANTIATE(Rational)
ZC_INSTANTIATE(NfElem)

}  // namespace zc
