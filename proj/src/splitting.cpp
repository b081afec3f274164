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

#include "zclosure/splitting.hpp"

#include <algorithm>

#include "zclosure/errors.hpp"
#include "zclosure/linalg.hpp"

namespace zc {

Extension::Extension(FieldPtr base, FieldPtr field, const NfElem& base_generator)
    : base_(std::move(base)), field_(std::move(field)), base_gen_(base_generator.in_field(field_)) {
  const int e = base_->degree(), D = field_->degree();
  if (D % e != 0) throw DomainError("extension degree is not a multiple of the base degree");
  auto powers = std::make_shared<std::vector<NfElem>>();
  NfElem p(field_, Rational(1));
  for (int i = 0; i < e; ++i) {
    powers->push_back(p);
    p *= base_gen_;
  }
  base_gen_powers_ = powers;
  if (e == 1) return;
  const int m = D / e;
  const NfElem gamma = NfElem::generator(field_);
  Matrix<Rational> a(D, D);
  NfElem gj(field_, Rational(1));
  for (int j = 0; j < m; ++j) {
    for (int i = 0; i < e; ++i) {
      const auto c = ((*powers)[i] * gj).coords();
      for (int r = 0; r < D; ++r) a(r, j * e + i) = c[r];
    }
    gj *= gamma;
  }
  Matrix<Rational> inv = inverse(a);
  auto rows = std::make_shared<std::vector<std::vector<Rational>>>();
  for (int r = 0; r < D; ++r) {
    std::vector<Rational> row;
    for (int c = 0; c < D; ++c) row.push_back(inv(r, c));
    rows->push_back(std::move(row));
  }
  decompose_ = rows;
}

Extension Extension::trivial(const FieldPtr& base) { return Extension(base, base, NfElem::generator(base)); }

NfElem Extension::embed(const NfElem& b) const {
  if (!b.field()) return NfElem(field_, b.rational_value());
  if (!same_field(b.field(), base_)) throw DomainError("element is not in the base field");
  if (base_ == field_ || same_field(base_, field_)) return b.in_field(field_);
  NfElem r(field_, Rational(0));
  const auto c = b.coords();
  for (size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) r += (*base_gen_powers_)[i] * NfElem(c[i]);
  return r;
}

Poly<NfElem> Extension::embed(const Poly<NfElem>& p) const {
  return p.map<NfElem>([this](const NfElem& a) { return embed(a); });
}

std::vector<NfElem> Extension::base_coords(const NfElem& x) const {
  const auto c = x.in_field(field_).coords();
  std::vector<NfElem> out;
  if (!decompose_) {
    for (const auto& q : c) out.emplace_back(base_, q);
    return out;
  }
  const int e = base_->degree(), D = field_->degree();
  std::vector<Rational> q(D, Rational(0));
  for (int r = 0; r < D; ++r)
    for (int k = 0; k < D; ++k)
      if (c[k] != 0) q[r] += (*decompose_)[r][k] * c[k];
  for (int j = 0; j < D / e; ++j)
    out.emplace_back(base_, std::vector<Rational>(q.begin() + j * e, q.begin() + (j + 1) * e));
  return out;
}

NfElem FieldMap::operator()(const NfElem& a) const {
  if (!a.field()) return NfElem(target, a.rational_value());
  if (!same_field(a.field(), source)) throw DomainError("field map applied to a foreign element");
  const auto c = a.coords();
  NfElem acc(target, Rational(0));
  for (size_t i = c.size(); i-- > 0;) {
    acc *= generator_image;
    if (c[i] != 0) acc += NfElem(c[i]);
  }
  return acc;
}

Poly<NfElem> FieldMap::operator()(const Poly<NfElem>& p) const {
  return p.map<NfElem>([this](const NfElem& a) { return (*this)(a); });
}

AdjoinedRoot adjoin_root(const Poly<NfElem>& h_in, const FieldPtr& K, const FieldLimits& limits) {
  const Poly<NfElem> h = h_in.map<NfElem>([&](const NfElem& a) { return a.in_field(K); }).monic();
  const int k = h.degree(), d = K->degree(), D = k * d;
  if (k < 1) throw DomainError("cannot adjoin a root of a constant");
  const NfElem theta = NfElem::generator(K);
  if (k == 1) return {FieldMap{K, K, theta}, -h.coeffs()[0]};
  if (D > limits.max_field_degree)
    throw ResourceLimitError("field degree " + std::to_string(D) + " exceeds limit " +
                             std::to_string(limits.max_field_degree));

  long c = 0;
  Poly<Rational> N;
  for (int attempt = 0;; ++attempt) {
    c = (attempt % 2 == 1) ? (attempt + 1) / 2 : -(attempt / 2);
    N = poly_norm(shift_by_generator(h, K, c), K);
    if (is_squarefree_over_q(N)) break;
    ZC_ASSERT(attempt < 200, "no primitive element found");
  }
  // gamma = beta + c*theta has minimal polynomial N; scale it to be integral.
  Integer L = common_denominator(N.coeffs());
  std::vector<Integer> P(D + 1);
  Integer lp = 1;
  for (int i = D; i >= 0; --i) {
    Rational s = N.coeffs()[i] * lp;
    ZC_ASSERT(s.get_den() == 1, "scaled minimal polynomial is not integral");
    P[i] = s.get_num();
    lp *= L;
  }
  FieldPtr K2 = NumberField::create(std::move(P));
  const NfElem gamma2 = NfElem::generator(K2) / NfElem(L);

  // Powers of gamma = y + c*theta in the tower K[y]/(h), flattened over Q.
  const NfElem ctheta = theta * NfElem(c);
  std::vector<NfElem> cur(k, NfElem(K, Rational(0)));
  cur[0] = NfElem(K, Rational(1));
  Matrix<Rational> A(D, D);
  for (int i = 0; i < D; ++i) {
    for (int b = 0; b < k; ++b) {
      const auto co = cur[b].coords();
      for (int a = 0; a < d; ++a) A(b * d + a, i) = co[a];
    }
    std::vector<NfElem> next(k + 1, NfElem(K, Rational(0)));
    for (int b = 0; b < k; ++b) {
      next[b + 1] += cur[b];
      next[b] += ctheta * cur[b];
    }
    const NfElem top = next[k];
    for (int b = 0; b < k; ++b) next[b] -= top * h.coeffs()[b];
    next.resize(k);
    cur = std::move(next);
  }
  std::vector<Rational> t_theta(D, Rational(0)), t_y(D, Rational(0));
  {
    const auto co = theta.coords();
    for (int a = 0; a < d; ++a) t_theta[a] = co[a];
    t_y[d] = 1;
  }
  Matrix<Rational> Ainv = inverse(A);
  auto express = [&](const std::vector<Rational>& t) {
    std::vector<Rational> r = Ainv * t;
    NfElem acc(K2, Rational(0));
    for (int i = D; i-- > 0;) {
      acc *= gamma2;
      if (r[i] != 0) acc += NfElem(r[i]);
    }
    return acc;
  };
  FieldMap map{K, K2, express(t_theta)};
  const NfElem beta = express(t_y);
  ZC_ASSERT(map(h).eval(beta).is_zero(), "adjoined element is not a root");
  return {map, beta};
}

SplittingField splitting_field(const Poly<NfElem>& f, const FieldPtr& base, const FieldLimits& limits) {
  if (f.is_zero()) throw DomainError("splitting field of the zero polynomial");
  FieldPtr K = base;
  NfElem base_gen = NfElem::generator(base);
  std::vector<NfElem> roots;
  std::vector<std::pair<Poly<NfElem>, int>> pending{
      {f.map<NfElem>([&](const NfElem& a) { return a.in_field(K); }), 1}};
  for (;;) {
    std::vector<std::pair<Poly<NfElem>, int>> nonlinear;
    for (const auto& [g, m] : pending) {
      if (g.degree() < 1) continue;
      for (const auto& [h, mh] : factor_over_field(g, K, limits)) {
        if (h.degree() == 1) {
          for (int r = 0; r < m * mh; ++r) roots.push_back(-h.coeffs()[0]);
        } else {
          nonlinear.emplace_back(h, m * mh);
        }
      }
    }
    if (nonlinear.empty()) break;
    size_t pick = 0;
    for (size_t i = 1; i < nonlinear.size(); ++i)
      if (nonlinear[i].first.degree() < nonlinear[pick].first.degree()) pick = i;
    AdjoinedRoot adj = adjoin_root(nonlinear[pick].first, K, limits);
    for (auto& r : roots) r = adj.map(r);
    base_gen = adj.map(base_gen);
    pending.clear();
    for (size_t i = 0; i < nonlinear.size(); ++i) {
      Poly<NfElem> g = adj.map(nonlinear[i].first);
      if (i == pick) {
        for (int r = 0; r < nonlinear[i].second; ++r) roots.push_back(adj.root);
        g = exact_quotient(g, Poly<NfElem>::linear(adj.root));
      }
      pending.emplace_back(std::move(g), nonlinear[i].second);
    }
    K = adj.map.target;
  }
  ZC_ASSERT(static_cast<int>(roots.size()) == f.degree(), "root count differs from degree");
  return {Extension(base, K, base_gen), std::move(roots)};
}

SplittingField splitting_field(const Poly<Rational>& f, const FieldLimits& limits) {
  const FieldPtr& Q = NumberField::rationals();
  return splitting_field(f.map<NfElem>([&](const Rational& q) { return NfElem(Q, q); }), Q, limits);
}

}  // namespace zc
