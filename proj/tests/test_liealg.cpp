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
#include "zclosure/jordan.hpp"
#include "zclosure/liealg.hpp"

using namespace zc;
using namespace zc::testing;

namespace {

using QLie = LieSubalgebra<Rational>;

QLie span_of(size_t n, const std::vector<QMatrix>& ms) {
  std::vector<std::vector<Rational>> v;
  for (const auto& m : ms) v.push_back(m.flatten());
  return QLie::from_space(n, Subspace<Rational>::span(n * n, v));
}

const QMatrix e = qm({{0, 1}, {0, 0}}), f = qm({{0, 0}, {1, 0}}), h = qm({{1, 0}, {0, -1}});

QLie sl2() { return span_of(2, {e, f, h}); }

// Brute-force closure: add all brackets until nothing new appears.
QLie naive_closure(size_t n, std::vector<QMatrix> gens) {
  Subspace<Rational> s(n * n);
  for (const auto& g : gens) s.add(g.flatten());
  bool grew = true;
  while (grew) {
    grew = false;
    const auto b = basis_matrices(s, n);
    for (const auto& x : b)
      for (const auto& y : b)
        if (s.add(commutator(x, y).flatten())) grew = true;
  }
  return QLie::from_space(n, s);
}

// Self-normalizing and nilpotent, checked directly.
void check_cartan(const QLie& L, const QLie& H) {
  CHECK(L.contains(H));
  CHECK(is_nilpotent_algebra(H));
  CHECK(normalizer_in(L, H) == H);
}

}  // namespace

TEST_CASE("generated subalgebra") {
  CHECK(generated_subalgebra<Rational>(2, {}).dim() == 0);
  const QLie s = generated_subalgebra<Rational>(2, {e, f});
  CHECK(s.dim() == 3);
  CHECK(s == naive_closure(2, {e, f}));
  CHECK(s.contains(h));
  CHECK(generated_subalgebra<Rational>(2, {QMatrix::identity(2)}) == span_of(2, {QMatrix::identity(2)}));
}

TEST_CASE("conjugation") {
  const QLie L = sl2();
  CHECK(conjugate_subalgebra(QMatrix::identity(2), L) == L);
  const QLie full = QLie::full(2);
  CHECK(conjugate_subalgebra(qm({{1, 2}, {3, 4}}), full) == full);
  const QLie line = span_of(2, {e});
  CHECK(conjugate_subalgebra(qdiag({1, 2}), line) == line);
}

TEST_CASE("centralizers and normalizers") {
  const QLie L = sl2();
  CHECK(centralizer_in(L, QMatrix::identity(2)) == L);
  CHECK(centralizer_in(QLie::full(2), qdiag({1, 2})) == span_of(2, {qdiag({1, 0}), qdiag({0, 1})}));
  const QMatrix rot = qm({{0, -1}, {1, 0}});
  CHECK(centralizer_in(L, rot) == span_of(2, {rot}));
  const QLie borel = span_of(2, {h, e});
  CHECK(normalizer_in(L, borel) == borel);
  CHECK(normalizer_in(L, span_of(2, {h})) == span_of(2, {h}));
}

TEST_CASE("cartan subalgebras") {
  const QLie ab = span_of(3, {qdiag({1, 2, 3}), qm({{0, 0, 0}, {0, 0, 0}, {0, 0, 0}}) + qdiag({0, 0, 1})});
  CHECK(cartan_subalgebra(ab) == ab);
  const QLie c = cartan_subalgebra(sl2());
  CHECK(c.dim() == 1);
  check_cartan(sl2(), c);
  CHECK(is_semisimple(c.basis()[0]));
  const QLie g = cartan_subalgebra(QLie::full(2));
  CHECK(g.dim() == 2);
  CHECK(is_abelian(g));
  check_cartan(QLie::full(2), g);
}

TEST_CASE("split semisimple and nilpotent parts") {
  const QLie d = span_of(2, {qdiag({1, 0}), qdiag({0, 1})});
  auto [t, u] = split_semisimple_nilpotent(d);
  CHECK(t == d.space());
  CHECK(u.dim() == 0);
  const QLie n = span_of(2, {e});
  std::tie(t, u) = split_semisimple_nilpotent(n);
  CHECK(t.dim() == 0);
  CHECK(u == n.space());
  const QLie mixed = span_of(2, {QMatrix::identity(2) + e, e});
  std::tie(t, u) = split_semisimple_nilpotent(mixed);
  CHECK(t == Subspace<Rational>::span(4, {QMatrix::identity(2).flatten()}));
  CHECK(u == Subspace<Rational>::span(4, {e.flatten()}));
}

TEST_CASE("property: random generated subalgebras") {
  std::mt19937_64 rng(31);
  for (int it = 0; it < 60; ++it) {
    const size_t n = 2 + it % 3;
    std::vector<QMatrix> gens;
    for (int k = 0; k < 1 + it % 2; ++k) {
      QMatrix m = random_int_matrix(rng, n, 2);
      // Sparsify so that proper subalgebras show up.
      for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < i; ++j)
          if ((i + j + static_cast<size_t>(it)) % 3) m(i, j) = 0;
      gens.push_back(m);
    }
    const QLie L = generated_subalgebra(n, gens);
    CHECK(is_bracket_closed(L));
    CHECK(L == naive_closure(n, gens));
    for (const auto& g : gens) CHECK(L.contains(g));

    QMatrix p = random_int_matrix(rng, n, 2);
    if (determinant(p) == 0) p = QMatrix::identity(n);
    const QMatrix pi = inverse(p);
    CHECK(conjugate_subalgebra(p, conjugate_subalgebra(pi, L)) == L);
    CHECK(conjugate_subalgebra(p, pi, L) == conjugate_subalgebra(p, L));

    const QLie C = cartan_subalgebra(L);
    check_cartan(L, C);
  }
}
