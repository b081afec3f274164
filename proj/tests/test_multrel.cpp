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

#include <random>

#include "zclosure/multrel.hpp"
#include "zclosure/torus.hpp"

using namespace zc;

namespace {

IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<NfElem> rats(std::initializer_list<long> xs) {
  std::vector<NfElem> v;
  for (long x : xs) v.emplace_back(Rational(x));
  return v;
}

// Every e in [-b, b]^k is a relation exactly when the lattice contains it.
void check_box(const std::vector<NfElem>& alphas, const RelationLattice& rl, const FieldPtr& K, long b) {
  const size_t k = alphas.size();
  IntVec e(k, Integer(-b));
  for (;;) {
    CHECK(relation_holds(alphas, e, K) == rl.lattice.contains(e));
    size_t i = 0;
    while (i < k && e[i] == b) e[i++] = -b;
    if (i == k) break;
    e[i] += 1;
  }
}

}  // namespace

TEST_CASE("coprime base") {
  const auto b = coprime_base({Integer(12), Integer(18), Integer(1), Integer(-5)});
  CHECK(b == std::vector<Integer>{Integer(2), Integer(3), Integer(5)});
  CHECK(coprime_base({Integer(6), Integer(10)}) == std::vector<Integer>{Integer(2), Integer(3), Integer(5)});
  CHECK(valuation(Integer(72), Integer(2)) == 3);
}

TEST_CASE("relations of rationals") {
  auto r = relations(rats({2, 3, 5}));
  CHECK(r.certified);
  CHECK(r.lattice.rank() == 0);
  r = relations(rats({2, 4}));
  CHECK(r.certified);
  CHECK(r.lattice == IntegerLattice::generated_by(2, {iv({2, -1})}));
  r = relations(rats({-1}));
  CHECK(r.lattice == IntegerLattice::generated_by(1, {iv({2})}));
  r = relations(rats({1}));
  CHECK(r.lattice == IntegerLattice::full(1));
  r = relations(rats({6, 6, -6}));
  CHECK(r.lattice == IntegerLattice::generated_by(3, {iv({1, -1, 0}), iv({2, 0, -2})}));
  CHECK_THROWS_AS(relations(rats({0})), DomainError);
  // Signs and magnitudes constrain separately.
  r = relations({NfElem(Rational(-2)), NfElem(Rational(-1, 2))});
  CHECK(r.certified);
  CHECK(r.lattice == IntegerLattice::generated_by(2, {iv({1, 1})}));
}

TEST_CASE("quick triviality") {
  CHECK(is_trivial_quick(rats({2, 3, 5})) == std::optional<bool>(true));
  CHECK(!is_trivial_quick(rats({2, 4})).has_value());
  CHECK(!is_trivial_quick(rats({1})).has_value());
}

TEST_CASE("roots of unity and radicals") {
  const FieldPtr K = NumberField::create({Integer(1), Integer(0), Integer(-1), Integer(0), Integer(1)});
  const NfElem z = NfElem::generator(K);  // primitive 12th root
  auto r = relations({z, pow(z, 4)});
  CHECK(r.certified);
  CHECK(r.lattice == IntegerLattice::generated_by(2, {iv({12, 0}), iv({4, -1})}));
  const FieldPtr Qi = NumberField::create({Integer(1), Integer(0), Integer(1)});
  r = relations({NfElem::generator(Qi)});
  CHECK(r.certified);
  CHECK(r.lattice == IntegerLattice::generated_by(1, {iv({4})}));
  const FieldPtr Q2 = NumberField::create({Integer(-2), Integer(0), Integer(1)});
  const NfElem s = NfElem::generator(Q2);
  r = relations({s, NfElem(Rational(2))});
  CHECK(r.certified);
  CHECK(r.method == "radical");
  CHECK(r.lattice == IntegerLattice::generated_by(2, {iv({2, -1})}));
}

TEST_CASE("units of a real quadratic field") {
  const FieldPtr Q2 = NumberField::create({Integer(-2), Integer(0), Integer(1)});
  const NfElem s = NfElem::generator(Q2);
  const NfElem eps = NfElem(Q2, Rational(1)) + s;
  auto r = relations({eps, eps * eps, -eps});
  CHECK(r.certified);
  CHECK(r.method == "archimedean");
  CHECK(r.lattice == IntegerLattice::generated_by(3, {iv({2, -1, 0}), iv({2, 0, -2})}));
  check_box(r.alphas, r, Q2, 3);
  r = relations({eps, s});
  CHECK(r.certified);
  CHECK(r.lattice.rank() == 0);
  r = relations({eps, NfElem(Rational(3))});
  CHECK(r.certified);
  CHECK(r.lattice.rank() == 0);
}

TEST_CASE("cubic units") {
  // x^3 - x - 1: unit rank 1, the root is a unit.
  const FieldPtr K = NumberField::create({Integer(-1), Integer(-1), Integer(0), Integer(1)});
  const NfElem t = NfElem::generator(K);
  const auto r = relations({t, pow(t, 3), t * t - NfElem(Rational(1))});
  CHECK(r.certified);
  check_box(r.alphas, r, K, 3);
  CHECK(r.lattice.rank() == 2);
}

TEST_CASE("random rational times root of unity against brute force") {
  const FieldPtr K = NumberField::create({Integer(1), Integer(0), Integer(-1), Integer(0), Integer(1)});
  const NfElem z = NfElem::generator(K);
  std::mt19937_64 rng(7);
  const long primes[] = {1, 2, 3, 6};
  for (int trial = 0; trial < 200; ++trial) {
    const size_t k = 1 + rng() % 3;
    std::vector<NfElem> alphas;
    for (size_t i = 0; i < k; ++i) {
      Rational c(primes[rng() % 4]);
      if (rng() % 2) c = 1 / c;
      alphas.push_back(NfElem(K, c) * pow(z, static_cast<long>(rng() % 12)));
    }
    const auto r = relations(alphas);
    CHECK(r.certified);
    check_box(r.alphas, r, K, k == 3 ? 3 : 6);
  }
}

TEST_CASE("random quadratic units against brute force") {
  const FieldPtr Q5 = NumberField::create({Integer(-5), Integer(0), Integer(1)});
  const NfElem phi = (NfElem(Q5, Rational(1)) + NfElem::generator(Q5)) / NfElem(Rational(2));
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<NfElem> alphas;
    for (int i = 0; i < 3; ++i) {
      NfElem a = pow(phi, static_cast<long>(rng() % 7) - 3);
      if (rng() % 2) a = -a;
      alphas.push_back(a);
    }
    const auto r = relations(alphas);
    CHECK(r.certified);
    check_box(r.alphas, r, Q5, 3);
  }
}
