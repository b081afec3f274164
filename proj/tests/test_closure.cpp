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

using namespace zc;
using namespace zc::testing;

namespace {

using QLie = LieSubalgebra<Rational>;

const FieldPtr& Q() { return NumberField::rationals(); }

QLie span_of(size_t n, const std::vector<QMatrix>& ms) {
  std::vector<std::vector<Rational>> v;
  for (const auto& m : ms) v.push_back(m.flatten());
  return QLie::from_space(n, Subspace<Rational>::span(n * n, v));
}

const QMatrix e = qm({{0, 1}, {0, 0}}), f = qm({{0, 0}, {1, 0}}), h = qm({{1, 0}, {0, -1}});

QLie sl2() { return span_of(2, {e, f, h}); }

ClosureResult<Rational> closure_checked(const std::vector<QMatrix>& gens, const ClosureConfig& cfg = {}) {
  auto r = zariski_closure(gens, Q(), cfg);
  const auto bad = check_closure_invariants(gens, r, cfg);
  for (const auto& b : bad) FAIL_CHECK(b);
  return r;
}

}  // namespace

TEST_CASE("lie algebra of a unipotent element") {
  CHECK(lie_of_unipotent(QMatrix::identity(2)).dim() == 0);
  CHECK(lie_of_unipotent(qm({{1, 1}, {0, 1}})) == span_of(2, {e}));
  CHECK(lie_of_unipotent(qm({{1, 2}, {0, 1}})) == span_of(2, {e}));
}

TEST_CASE("lie algebra of a semisimple element") {
  auto r = lie_of_semisimple(qdiag({2, 4}), Q());
  CHECK(r.certified);
  CHECK(r.lie == span_of(2, {qdiag({1, 2})}));
  CHECK(lie_of_semisimple(qdiag({-1, 1}), Q()).lie.dim() == 0);
  r = lie_of_semisimple(qm({{0, -1}, {1, 0}}), Q());
  CHECK(r.lie.dim() == 0);
  CHECK(r.certified);
  CHECK(lie_of_semisimple(qdiag({2, 2}), Q()).lie == span_of(2, {QMatrix::identity(2)}));
  // Non-diagonal: conjugate of diag(2, 4).
  const QMatrix p = qm({{1, 1}, {0, 1}}), pi = inverse(p);
  CHECK(lie_of_semisimple(p * qdiag({2, 4}) * pi, Q()).lie == span_of(2, {p * qdiag({1, 2}) * pi}));
  // Irrational eigenvalues 2 +- sqrt 3 (a unit pair): G(s) is a one
  // dimensional torus inside SL2.
  const QMatrix u = qm({{2, 3}, {1, 2}});
  r = lie_of_semisimple(u, Q());
  CHECK(r.certified);
  REQUIRE(r.lie.dim() == 1);
  CHECK(r.lie.contains(u - qdiag({2, 2})));
}

TEST_CASE("connected membership") {
  const QLie L = sl2();
  CHECK(member_connected(L, qm({{1, 1}, {0, 1}}), Q()));
  CHECK(member_connected(L, qdiag({2, Rational(1, 2)}), Q()));
  CHECK_FALSE(member_connected(L, qdiag({2, 3}), Q()));
  CHECK_FALSE(member_connected(L, qdiag({2, 2}), Q()));
  CHECK(member_connected(L, qm({{2, 3}, {1, 2}}), Q()));
  CHECK(member_connected(QLie(2), QMatrix::identity(2), Q()));
  CHECK_FALSE(member_connected(QLie(2), qdiag({-1, 1}), Q()));
  CHECK(member_connected(QLie::full(2), qm({{3, 1}, {5, 7}}), Q()));
}

TEST_CASE("closure examples") {
  auto r = closure_checked({QMatrix::identity(2)});
  CHECK(r.group.lie_algebra.dim() == 0);
  REQUIRE(r.group.components.size() == 1);
  CHECK(r.group.components[0].is_identity());

  r = closure_checked({qdiag({2, Rational(1, 2)})});
  CHECK(r.group.lie_algebra == span_of(2, {h}));
  CHECK(r.group.components.size() == 1);
  CHECK(r.group.certified);

  r = closure_checked({qm({{1, 1}, {0, 1}}), qm({{1, 0}, {1, 1}})});
  CHECK(r.group.lie_algebra == sl2());
  CHECK(r.group.components.size() == 1);

  r = closure_checked({qdiag({-1, 1})});
  CHECK(r.group.lie_algebra.dim() == 0);
  REQUIRE(r.group.components.size() == 2);
  CHECK(r.group.components[0].is_identity());
  CHECK(r.group.components[1] == qdiag({-1, 1}));

  // Rotation by 90 degrees generates a group of order 4.
  r = closure_checked({qm({{0, -1}, {1, 0}})});
  CHECK(r.group.lie_algebra.dim() == 0);
  CHECK(r.group.components.size() == 4);

  // diag(-2, 1): the torus diag(t, 1) is connected and contains it.
  r = closure_checked({qdiag({-2, 1})});
  CHECK(r.group.lie_algebra == span_of(2, {qdiag({1, 0})}));
  CHECK(r.group.components.size() == 1);

  // diag(4, -2) lies on {diag(t^2, t)}, so that torus is the closure.
  r = closure_checked({qdiag({4, -2})});
  CHECK(r.group.lie_algebra == span_of(2, {qdiag({2, 1})}));
  CHECK(r.group.components.size() == 1);

  // diag(-4, 2): relations need 2 e1 + e2 = 0 with e1 even, a lattice of
  // index 2 in its saturation.
  r = closure_checked({qdiag({-4, 2})});
  CHECK(r.group.lie_algebra == span_of(2, {qdiag({2, 1})}));
  CHECK(r.group.components.size() == 2);
}

TEST_CASE("closure trace") {
  const auto r = closure_checked({qm({{1, 1}, {0, 1}}), qdiag({2, 3})});
  // Borel subgroup of GL2.
  CHECK(r.group.lie_algebra.dim() == 3);
  CHECK(r.group.components.size() == 1);
  CHECK(r.trace.rounds >= 1);
  CHECK(r.trace.dim_history.size() == r.trace.rounds);
  for (size_t i = 1; i < r.trace.dim_history.size(); ++i) CHECK(r.trace.dim_history[i - 1] < r.trace.dim_history[i]);
  CHECK(r.trace.multrel_calls >= 1);
  CHECK(r.trace.membership_calls >= 1);
}

TEST_CASE("closure is idempotent") {
  const std::vector<QMatrix> gens{qdiag({-4, 2}), qm({{1, 1}, {0, 1}})};
  const auto a = closure_checked(gens);
  const auto b = closure_checked(gens);
  CHECK(a.group.lie_algebra == b.group.lie_algebra);
  CHECK(a.group.components == b.group.components);
  // Adding the component representatives changes nothing.
  std::vector<QMatrix> again = gens;
  again.insert(again.end(), a.group.components.begin(), a.group.components.end());
  const auto c = closure_checked(again);
  CHECK(c.group.lie_algebra == a.group.lie_algebra);
  CHECK(c.group.components.size() == a.group.components.size());
}

TEST_CASE("closure over a number field") {
  const FieldPtr K = NumberField::create({Integer(1), Integer(0), Integer(1)});
  const NfElem i = NfElem::generator(K), one = NfElem(K, Rational(1)), zero = NfElem(K, Rational(0));
  const Matrix<NfElem> rot{{i, zero}, {zero, one}};
  auto r = zariski_closure<NfElem>({rot}, K);
  CHECK(r.group.lie_algebra.dim() == 0);
  CHECK(r.group.components.size() == 4);
  CHECK(check_closure_invariants<NfElem>({rot}, r).empty());

  const Matrix<NfElem> g{{one + i, zero}, {zero, one}};
  r = zariski_closure<NfElem>({g}, K);
  CHECK(r.group.lie_algebra.dim() == 1);
  CHECK(r.group.components.size() == 1);
  CHECK(check_closure_invariants<NfElem>({g}, r).empty());
}

TEST_CASE("budget ceilings") {
  ClosureConfig cfg;
  cfg.max_bfs_length = 1;
  try {
    zariski_closure<Rational>({qdiag({-1, 1}), qm({{0, 1}, {1, 0}})}, Q(), cfg);
    FAIL("expected budget exhaustion");
  } catch (const BudgetExhausted& b) {
    for (size_t i = 1; i < b.trace.dim_history.size(); ++i) CHECK(b.trace.dim_history[i - 1] < b.trace.dim_history[i]);
  }
  CHECK_THROWS_AS(zariski_closure<Rational>({qm({{1, 1}, {1, 1}})}, Q()), DomainError);
}

TEST_CASE("b2 and g2 fixtures") {
  auto r = closure_checked(fixture("b2").generators);
  CHECK(r.group.lie_algebra.dim() == 10);
  CHECK(r.group.components.size() == 2);
  CHECK(r.group.certified);
  CHECK(r.trace.max_field_degree == 8);
  r = closure_checked(fixture("g2").generators);
  CHECK(r.group.lie_algebra.dim() == 14);
  CHECK(r.group.components.size() == 1);
  CHECK(r.group.certified);
  CHECK(r.trace.max_field_degree == 12);
}
