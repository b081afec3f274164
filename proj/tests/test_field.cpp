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

#include "zclosure/factor.hpp"
#include "zclosure/number_field.hpp"
#include "zclosure/splitting.hpp"

using namespace zc;

namespace {

Poly<Rational> qpoly(std::initializer_list<long> c) {
  std::vector<Rational> v;
  for (long x : c) v.emplace_back(x);
  return Poly<Rational>(std::move(v));
}

Poly<NfElem> kpoly(const FieldPtr& K, std::vector<NfElem> c) {
  for (auto& x : c) x = x.in_field(K);
  return Poly<NfElem>(std::move(c));
}

// Monic degree <= 2 integer factors of f with coefficients bounded by `b`,
// found by exhaustive search.
bool has_small_factor(const Poly<Rational>& f, long b) {
  for (long c0 = -b; c0 <= b; ++c0) {
    if (f.eval(Rational(-c0)) == 0) return true;  // x + c0
    for (long c1 = -b; c1 <= b; ++c1)
      if (divmod(f, qpoly({c0, c1, 1})).second.is_zero()) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/6") == Rational(1, 2));
  CHECK(parse_rational(" -4 ") == Rational(-4));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
  CHECK(to_string(parse_rational("-3/9")) == "-1/3");
}

TEST_CASE("factor over Q: small cases") {
  auto f = factor_over_q(qpoly({-1, 0, 1}));
  REQUIRE(f.size() == 2);
  CHECK(f[0].first == qpoly({-1, 1}));
  CHECK(f[1].first == qpoly({1, 1}));

  f = factor_over_q(qpoly({1, -2, 1}));
  REQUIRE(f.size() == 1);
  CHECK(f[0].first == qpoly({-1, 1}));
  CHECK(f[0].second == 2);

  const auto x4 = qpoly({1, 0, 0, 0, 1});
  f = factor_over_q(x4);
  REQUIRE(f.size() == 1);
  CHECK(f[0].first == x4);
  CHECK_FALSE(has_small_factor(x4, 4));

  CHECK_THROWS_AS(factor_over_q(Poly<Rational>()), DomainError);
}

TEST_CASE("factor over Q: hard Swinnerton-Dyer style input") {
  // x^8 - 40x^6 + 352x^4 - 960x^2 + 576: minimal polynomial of
  // sqrt2 + sqrt3 + sqrt5, irreducible but splits into many factors mod p.
  auto f = qpoly({576, 0, -960, 0, 352, 0, -40, 0, 1});
  auto fac = factor_over_q(f);
  REQUIRE(fac.size() == 1);
  CHECK(fac[0].first == f);
}

TEST_CASE("factor over Q: random products of known irreducibles") {
  std::mt19937_64 rng(7);
  const std::vector<Poly<Rational>> pieces = {
      qpoly({-2, 0, 1}), qpoly({1, 1, 1}), qpoly({-2, 0, 0, 1}), qpoly({3, 1}),
      qpoly({1, 0, 0, 0, 1}), qpoly({-1, -1, 0, 0, 0, 1}), qpoly({5, -1}), qpoly({7, 0, 2, 0, 1})};
  for (int trial = 0; trial < 30; ++trial) {
    Poly<Rational> prod(Rational(3));
    std::map<int, int> used;
    for (int k = 0; k < 4; ++k) {
      int i = static_cast<int>(rng() % pieces.size());
      used[i]++;
      prod *= pieces[i];
    }
    auto fac = factor_over_q(prod);
    CHECK(fac.size() == used.size());
    Poly<Rational> back(Rational(1));
    for (const auto& [g, m] : fac) back *= pow(g, m);
    CHECK(back == prod.monic());
    for (const auto& [i, m] : used) {
      bool seen = false;
      for (const auto& [g, mm] : fac) seen = seen || (g == pieces[i].monic() && mm == m);
      CHECK(seen);
    }
  }
}

TEST_CASE("number field arithmetic is a field") {
  auto K = NumberField::create({Integer(-2), Integer(0), Integer(0), Integer(1)});  // x^3 - 2
  std::mt19937_64 rng(11);
  auto rnd = [&] {
    std::vector<Rational> c;
    for (int i = 0; i < 3; ++i) c.emplace_back(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 4));
    for (auto& q : c) q.canonicalize();
    return NfElem(K, c);
  };
  for (int i = 0; i < 1000; ++i) {
    NfElem a = rnd(), b = rnd(), c = rnd();
    if (!a.is_zero()) CHECK(a * a.inverse() == NfElem(K, Rational(1)));
    CHECK(a * (b + c) == a * b + a * c);
  }
  NfElem t = NfElem::generator(K);
  CHECK(t * t * t == NfElem(K, Rational(2)));
  CHECK(norm(t) == 2);
  CHECK(min_poly(t + NfElem(1)) == qpoly({-3, 3, -3, 1}));
}

TEST_CASE("roots of unity") {
  CHECK(root_of_unity_order(NfElem(1)) == 1);
  CHECK(root_of_unity_order(NfElem(-1)) == 2);
  auto Qi = NumberField::create({Integer(1), Integer(0), Integer(1)});
  NfElem i = NfElem::generator(Qi);
  CHECK(root_of_unity_order(i) == 4);
  auto Qphi = NumberField::create({Integer(-1), Integer(-1), Integer(1)});
  CHECK_FALSE(root_of_unity_order(NfElem::generator(Qphi)).has_value());
  CHECK_FALSE(root_of_unity_order(NfElem(2)).has_value());
  // primitive 12th root: x^4 - x^2 + 1
  auto K12 = NumberField::create({Integer(1), Integer(0), Integer(-1), Integer(0), Integer(1)});
  NfElem z = NfElem::generator(K12);
  CHECK(root_of_unity_order(z) == 12);
  CHECK(root_of_unity_order(z * z) == 6);
  CHECK(root_of_unity_order(-z) == 12);
  for (long k = 1; k <= 12; ++k) {
    auto o = root_of_unity_order(pow(z, k));
    REQUIRE(o.has_value());
    CHECK(pow(pow(z, k), *o) == NfElem(K12, Rational(1)));
    for (long d = 1; d < *o; ++d)
      if (*o % d == 0) CHECK(pow(pow(z, k), d) != NfElem(K12, Rational(1)));
  }
}

TEST_CASE("factor over a number field") {
  auto Qi = NumberField::create({Integer(1), Integer(0), Integer(1)});
  NfElem i = NfElem::generator(Qi);
  auto f = factor_over_field(kpoly(Qi, {NfElem(1), NfElem(0), NfElem(1)}), Qi);
  REQUIRE(f.size() == 2);
  CHECK(f[0].first.degree() == 1);
  CHECK(f[1].first.degree() == 1);
  for (const auto& [g, m] : f) CHECK((g.coeffs()[0] == i || g.coeffs()[0] == -i));

  auto x2m2 = kpoly(Qi, {NfElem(-2), NfElem(0), NfElem(1)});
  f = factor_over_field(x2m2, Qi);
  REQUIRE(f.size() == 1);
  CHECK(f[0].first.degree() == 2);
  // no a + b i squares to 2: (a^2 - b^2, 2ab) = (2, 0) has no rational solution
  for (long a = -4; a <= 4; ++a)
    for (long b = -4; b <= 4; ++b) CHECK(NfElem(a) * NfElem(a) - NfElem(b) * NfElem(b) != NfElem(2) + NfElem(0) * i);

  f = factor_over_field(kpoly(Qi, {NfElem(-1), NfElem(1)}), Qi);
  REQUIRE(f.size() == 1);
  CHECK(f[0].first.degree() == 1);

  // repeated factor over the field
  auto sq = pow(kpoly(Qi, {-i, NfElem(1)}), 2) * kpoly(Qi, {NfElem(-3), NfElem(0), NfElem(1)});
  f = factor_over_field(sq, Qi);
  REQUIRE(f.size() == 2);
  CHECK(f[0].first.degree() == 1);
  CHECK(f[0].second == 2);
  CHECK(f[1].first.degree() == 2);
}

TEST_CASE("splitting fields") {
  auto s = splitting_field(qpoly({-1, 0, 1}));
  CHECK(s.ext.degree() == 1);
  REQUIRE(s.roots.size() == 2);

  s = splitting_field(qpoly({1, 0, 1}));
  CHECK(s.ext.degree() == 2);
  REQUIRE(s.roots.size() == 2);
  CHECK(s.roots[0] == -s.roots[1]);

  auto f = qpoly({-2, 0, 0, 1});
  s = splitting_field(f);
  CHECK(s.ext.degree() == 6);
  REQUIRE(s.roots.size() == 3);
  auto fk = f.map<NfElem>([&](const Rational& q) { return NfElem(s.ext.field(), q); });
  for (const auto& r : s.roots) CHECK(fk.eval(r).is_zero());
  CHECK(s.roots[0] != s.roots[1]);

  // multiplicities
  s = splitting_field(qpoly({-2, 0, 1}) * qpoly({-2, 0, 1}) * qpoly({-1, 1}));
  CHECK(s.ext.degree() == 2);
  CHECK(s.roots.size() == 5);

  FieldLimits tight;
  tight.max_field_degree = 4;
  CHECK_THROWS_AS(splitting_field(f, tight), ResourceLimitError);
}

TEST_CASE("splitting over a number field base and base coordinates") {
  auto Qi = NumberField::create({Integer(1), Integer(0), Integer(1)});
  auto f = kpoly(Qi, {NfElem(-2), NfElem(0), NfElem(1)});
  auto s = splitting_field(f, Qi);
  CHECK(s.ext.degree() == 4);
  CHECK(s.ext.relative_degree() == 2);
  NfElem i = s.ext.embed(NfElem::generator(Qi));
  CHECK(i * i == NfElem(s.ext.field(), Rational(-1)));
  // base_coords reconstructs x = sum c_j gamma^j
  NfElem g = NfElem::generator(s.ext.field());
  NfElem x = s.roots[0] * NfElem(3) + i;
  auto c = s.ext.base_coords(x);
  REQUIRE(c.size() == 2);
  CHECK(s.ext.embed(c[0]) + s.ext.embed(c[1]) * g == x);
}
