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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "support.hpp"
#include "zclosure/torus.hpp"

using namespace zc;
using namespace zc::testing;

namespace {

const FieldPtr& Q() { return NumberField::rationals(); }

std::vector<std::vector<Rational>> qrows(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<std::vector<Rational>> out;
  for (const auto& r : rows) {
    out.emplace_back();
    for (long x : r) out.back().emplace_back(x);
  }
  return out;
}

// Diagonals of a subspace of flattened diagonal matrices.
std::vector<std::vector<Rational>> diagonals_of(const Subspace<Rational>& s, size_t n) {
  std::vector<std::vector<Rational>> out;
  for (const auto& m : basis_matrices(s, n)) {
    REQUIRE(m.is_diagonal());
    out.push_back(m.diagonal_entries());
  }
  return out;
}

Subspace<Rational> diag_span(size_t n, const std::vector<std::vector<Rational>>& ds) {
  std::vector<std::vector<Rational>> v;
  for (const auto& d : ds) v.push_back(QMatrix::diagonal(d).flatten());
  return Subspace<Rational>::span(n * n, v);
}

Rational pow2(long a) {
  mpz_class p = 1;
  p <<= static_cast<unsigned long>(a < 0 ? -a : a);
  return a < 0 ? Rational(mpz_class(1), p) : Rational(p);
}

}  // namespace

TEST_CASE("lattice of a toral algebra") {
  CHECK(lattice_of_toral_algebra(qrows({{1, -1}}), 2) == hnf(2, {iv({1, 1})}));
  CHECK(lattice_of_toral_algebra(std::vector<std::vector<Rational>>{}, 2) == IntegerLattice::full(2));
  CHECK(lattice_of_toral_algebra(qrows({{1, 2}}), 2) == hnf(2, {iv({2, -1})}));
  const std::vector<QMatrix> as_matrices{qdiag({1, 2})};
  CHECK(lattice_of_toral_algebra(as_matrices, 2) == hnf(2, {iv({2, -1})}));
}

TEST_CASE("toral algebra of a lattice") {
  CHECK(toral_algebra_of_lattice(hnf(2, {iv({1, 1})}), 2) == diag_span(2, qrows({{1, -1}})));
  CHECK(toral_algebra_of_lattice(IntegerLattice(2), 2).dim() == 2);
  CHECK(toral_algebra_of_lattice(IntegerLattice::full(2), 2).dim() == 0);
}

TEST_CASE("property: duality round trip on 200 random pure lattices") {
  std::mt19937_64 rng(200);
  for (int it = 0; it < 200; ++it) {
    const size_t n = 1 + it % 5;
    std::vector<IntVec> gens;
    for (int k = 0; k < it % (static_cast<int>(n) + 1); ++k) gens.push_back(random_int_vector(rng, n, 5));
    const IntegerLattice L = saturate(IntegerLattice::generated_by(n, gens));
    const Subspace<Rational> t = toral_algebra_of_lattice(L, n);
    CHECK(t.dim() == n - L.rank());
    CHECK(lattice_of_toral_algebra(diagonals_of(t, n), n) == L);
    CHECK(toral_algebra_of_lattice(lattice_of_toral_algebra(diagonals_of(t, n), n), n) == t);
    CHECK(diag_span(n, toral_diagonals_of_lattice(L, n)) == t);
  }
}

TEST_CASE("diagonalizing toral algebras") {
  auto T = diagonalize_toral<Rational>({qdiag({1, 2})}, 2, Q());
  CHECK(T.rank() == 2);
  // Coordinates follow the root order.
  const bool one_first = T.roots[0] == NfElem(Rational(1)).in_field(T.ext.field());
  CHECK(T.lattice == hnf(2, {one_first ? iv({2, -1}) : iv({-1, 2})}));

  T = diagonalize_toral<Rational>({qm({{0, 1}, {1, 0}})}, 2, Q());
  CHECK(T.ext.degree() == 1);
  CHECK(T.lattice == hnf(2, {iv({1, 1})}));

  T = diagonalize_toral<Rational>({qm({{0, -1}, {1, 0}})}, 2, Q());
  CHECK(T.ext.degree() == 2);
  CHECK(T.lattice == hnf(2, {iv({1, 1})}));
  // The roots are the eigenvalues +-i.
  for (const auto& r : T.roots) CHECK(r * r == NfElem(Rational(-1)).in_field(T.ext.field()));

  CHECK_THROWS_AS(diagonalize_toral<Rational>({qm({{0, 1}, {0, 0}})}, 2, Q()), DomainError);
}

TEST_CASE("torus membership") {
  const auto T = diagonalize_toral<Rational>({qdiag({1, -1})}, 2, Q());
  CHECK(torus_contains(T, qdiag({2, Rational(1, 2)})));
  CHECK_FALSE(torus_contains(T, qdiag({2, 3})));
  CHECK_FALSE(torus_contains(T, qm({{1, 1}, {0, 1}})));
  const auto S = diagonalize_toral<Rational>({QMatrix::identity(2)}, 2, Q());
  CHECK(torus_contains(S, qdiag({3, 3})));
  CHECK_FALSE(torus_contains(S, qdiag({3, 1})));
  // Zero algebra: only the identity.
  const auto Z = diagonalize_toral<Rational>({}, 2, Q());
  CHECK(torus_contains(Z, QMatrix::identity(2)));
  CHECK_FALSE(torus_contains(Z, qdiag({-1, -1})));
}

TEST_CASE("property: one-parameter subgroups lie in their torus") {
  std::mt19937_64 rng(50);
  for (int it = 0; it < 50; ++it) {
    const size_t n = 2 + it % 3;
    const IntVec a = random_int_vector(rng, n, 3);
    std::vector<Rational> d, p;
    for (const auto& x : a) {
      d.emplace_back(x);
      p.push_back(pow2(x.get_si()));
    }
    const auto T = diagonalize_toral<Rational>({QMatrix::diagonal(d)}, n, Q());
    CHECK(torus_contains(T, QMatrix::diagonal(p)));
    // Scaling one coordinate by 3 leaves the curve once a second coordinate
    // pins |t|.
    size_t nonzero = 0, first = n;
    for (size_t i = 0; i < n; ++i)
      if (a[i] != 0) {
        ++nonzero;
        if (first == n) first = i;
      }
    if (nonzero < 2) continue;
    std::vector<Rational> q = p;
    q[first] *= 3;
    CHECK_FALSE(torus_contains(T, QMatrix::diagonal(q)));
  }
}

TEST_CASE("property: membership is invariant under conjugation") {
  std::mt19937_64 rng(77);
  const std::vector<QMatrix> samples{qdiag({2, Rational(1, 2), 1}), qdiag({2, 3, 1}), qdiag({4, Rational(1, 4), 1}),
                                     qdiag({-1, -1, 1}), qdiag({1, 1, 1})};
  const QMatrix t0 = qdiag({1, -1, 0});
  for (int it = 0; it < 20; ++it) {
    QMatrix p = random_int_matrix(rng, 3, 2);
    if (determinant(p) == 0) continue;
    const QMatrix pi = inverse(p);
    const auto T0 = diagonalize_toral<Rational>({t0}, 3, Q());
    const auto T1 = diagonalize_toral<Rational>({p * t0 * pi}, 3, Q());
    for (const auto& s : samples) CHECK(torus_contains(T0, s) == torus_contains(T1, p * s * pi));
  }
}

TEST_CASE("rational toral elements") {
  // Conjugated diag(1, -1): the weight vector (1, -1) comes back as the
  // original basis matrix up to the order of the roots.
  const QMatrix p = qm({{1, 1}, {1, 2}});
  const QMatrix x = p * qdiag({1, -1}) * inverse(p);
  const auto T = diagonalize_toral<Rational>({x}, 2, Q());
  const auto els = rational_toral_elements(T, qrows({{1, -1}}));
  REQUIRE(els.size() == 1);
  CHECK((els[0] == x || els[0] == -x));
}
