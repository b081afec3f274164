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
#include "zclosure/closure.hpp"
#include "zclosure/fixtures.hpp"
#include "zclosure/membership.hpp"

using namespace zc;
using namespace zc::testing;

namespace {

const FieldPtr& Q() { return NumberField::rationals(); }

GroupDescription<Rational> closure_of(const std::vector<QMatrix>& gens) {
  return zariski_closure(gens, Q()).group;
}

// A random word in the generators and their inverses.
QMatrix random_word(std::mt19937_64& rng, const std::vector<QMatrix>& gens, size_t len) {
  std::uniform_int_distribution<size_t> pick(0, 2 * gens.size() - 1);
  QMatrix w = QMatrix::identity(gens[0].rows());
  for (size_t k = 0; k < len; ++k) {
    const size_t i = pick(rng);
    w = w * (i < gens.size() ? gens[i] : inverse(gens[i - gens.size()]));
  }
  return w;
}

}  // namespace

TEST_CASE("finite group of order two") {
  const auto G = closure_of({qdiag({-1, 1})});
  auto v = member(G, qdiag({-1, 1}));
  CHECK(v.member);
  CHECK(v.component_index == std::optional<size_t>(1));
  v = member(G, QMatrix::identity(2));
  CHECK(v.member);
  CHECK(v.component_index == std::optional<size_t>(0));
  v = member(G, qdiag({2, 1}));
  CHECK_FALSE(v.member);
  CHECK_FALSE(v.component_index.has_value());
}

TEST_CASE("bad queries") {
  const auto G = closure_of({qdiag({-1, 1})});
  CHECK_THROWS_AS(member(G, QMatrix::identity(3)), DomainError);
  CHECK_THROWS_AS(member(G, qm({{1, 1}, {1, 1}})), DomainError);
}

TEST_CASE("representatives belong to their own components") {
  for (const auto& gens : std::vector<std::vector<QMatrix>>{
           {qdiag({-4, 2})}, {qm({{0, -1}, {1, 0}})}, {qdiag({-1, 1}), qm({{1, 1}, {0, 1}})}}) {
    const auto G = closure_of(gens);
    for (size_t i = 0; i < G.components.size(); ++i) {
      const auto v = member(G, G.components[i]);
      CHECK(v.member);
      CHECK(v.component_index == std::optional<size_t>(i));
    }
  }
}

TEST_CASE("property: products of members are members") {
  std::mt19937_64 rng(5);
  const std::vector<std::vector<QMatrix>> groups{{qdiag({-4, 2})},
                                                 {qm({{1, 1}, {0, 1}}), qm({{1, 0}, {1, 1}})},
                                                 {qdiag({-1, 1}), qm({{0, 1}, {1, 0}})},
                                                 {qm({{2, 1}, {1, 1}}), qdiag({-1, -1})}};
  for (const auto& gens : groups) {
    const auto G = closure_of(gens);
    for (int it = 0; it < 8; ++it) {
      const QMatrix a = random_word(rng, gens, 1 + it % 4), b = random_word(rng, gens, 1 + it % 3);
      CHECK(member(G, a).member);
      CHECK(member(G, b).member);
      CHECK(member(G, a * b).member);
    }
  }
}

TEST_CASE("non-members") {
  const auto sl2 = closure_of({qm({{1, 1}, {0, 1}}), qm({{1, 0}, {1, 1}})});
  CHECK_FALSE(member(sl2, qdiag({2, 1})).member);
  CHECK(member(sl2, qdiag({3, Rational(1, 3)})).member);
  const auto torus = closure_of({qdiag({2, Rational(1, 2)})});
  CHECK(member(torus, qdiag({5, Rational(1, 5)})).member);
  CHECK_FALSE(member(torus, qm({{1, 1}, {0, 1}})).member);
  CHECK_FALSE(member(torus, qdiag({-1, 1})).member);
}

TEST_CASE("b2 fixture components") {
  const auto& gens = fixture("b2").generators;
  const auto G = closure_of(gens);
  REQUIRE(G.components.size() == 2);
  // The block swap flips the component: generator words land in component
  // index equal to the parity of the second generator count.
  std::mt19937_64 rng(8);
  for (int it = 0; it < 6; ++it) {
    QMatrix w = QMatrix::identity(8);
    size_t parity = 0;
    for (int k = 0; k < 3; ++k) {
      const size_t i = rng() % 2;
      parity ^= i;
      w = w * gens[i];
    }
    const auto v = member(G, w);
    CHECK(v.member);
    CHECK(v.component_index == std::optional<size_t>(parity));
  }
}
