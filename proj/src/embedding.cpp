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

#include "zclosure/embedding.hpp"

#include "zclosure/errors.hpp"

namespace zc {

namespace {

// Bounds below are computed in round-to-nearest and then inflated by a
// factor of two, which dominates the rounding of the bound computations.

struct Horner {
  Complex value, deriv;
  Real abs_sum;  // sum |c_i| |z|^i
};

Horner horner(const std::vector<Real>& c, const Complex& z, mpfr_prec_t prec) {
  Horner h{Complex(prec), Complex(prec), Real(prec)};
  const Real az = abs(z);
  for (size_t i = c.size(); i-- > 0;) {
    h.deriv = h.deriv * z + h.value;
    h.value = h.value * z + Complex(c[i], Real(prec));
    h.abs_sum = h.abs_sum * az + abs(c[i]);
  }
  return h;
}

Real eps(mpfr_prec_t prec) { return ldexp(Real::from(1, prec), -static_cast<long>(prec) + 1); }

}  // namespace

std::optional<std::vector<RootBall>> isolate_roots(const std::vector<Integer>& f, mpfr_prec_t prec,
                                                   std::vector<Complex>& warm) {
  const int D = static_cast<int>(f.size()) - 1;
  if (D < 1) throw DomainError("root isolation of a constant");
  std::vector<Real> c;
  for (const auto& x : f) c.push_back(Real::from(x, prec));
  std::vector<Complex> z;
  if (static_cast<int>(warm.size()) == D) {
    for (const auto& w : warm) {
      Complex t(prec);
      mpfr_set(t.re.get(), w.re.get(), MPFR_RNDN);
      mpfr_set(t.im.get(), w.im.get(), MPFR_RNDN);
      z.push_back(std::move(t));
    }
  } else {
    // Fujiwara-type bound for the root radius.
    Real R = Real::from(1, prec);
    const Real lead = abs(c[D]);
    for (int i = 0; i < D; ++i) {
      Real q = abs(c[i]) / lead;
      if (q.is_zero()) continue;
      Real root(prec);
      mpfr_rootn_ui(root.get(), q.get(), static_cast<unsigned long>(D - i), MPFR_RNDU);
      if (root > R) R = root;
    }
    R = R * Real::from(2, prec);
    Real pi(prec);
    mpfr_const_pi(pi.get(), MPFR_RNDN);
    for (int k = 0; k < D; ++k) {
      Real angle = (Real::from(2 * k, prec) * pi) / Real::from(D, prec) + Real::from(Rational(2, 5), prec);
      Complex t(prec);
      mpfr_cos(t.re.get(), angle.get(), MPFR_RNDN);
      mpfr_sin(t.im.get(), angle.get(), MPFR_RNDN);
      t.re = t.re * R;
      t.im = t.im * R;
      z.push_back(std::move(t));
    }
  }

  const Real tol = ldexp(Real::from(1, prec), -static_cast<long>(prec) + 8);
  const Complex one(Real::from(1, prec), Real(prec));
  int settled = 0;
  for (int iter = 0; iter < 4000 && settled < 3; ++iter) {
    Real worst(prec);
    for (int k = 0; k < D; ++k) {
      Horner h = horner(c, z[k], prec);
      if (h.value.re.is_zero() && h.value.im.is_zero()) continue;
      Complex ratio = h.value / h.deriv;
      Complex s(prec);
      for (int j = 0; j < D; ++j)
        if (j != k) s = s + one / (z[k] - z[j]);
      Complex w = ratio / (one - ratio * s);
      z[k] = z[k] - w;
      Real scale = abs(z[k]);
      if (scale < Real::from(1, prec)) scale = Real::from(1, prec);
      Real rel = abs(w) / scale;
      if (rel > worst) worst = rel;
    }
    if (worst < tol)
      ++settled;
    else
      settled = 0;
  }
  warm = z;

  // Weierstrass radii with the Horner evaluation error folded in.
  const Real e = eps(prec) * Real::from(4L * D + 4, prec);
  const Real lead = abs(c[D]);
  std::vector<RootBall> balls;
  for (int k = 0; k < D; ++k) {
    Horner h = horner(c, z[k], prec);
    Real num = abs(h.value) + e * h.abs_sum;
    Real den = lead;
    for (int j = 0; j < D; ++j)
      if (j != k) den = den * abs(z[k] - z[j]);
    if (den.is_zero()) return std::nullopt;
    Real r = Real::from(2L * D, prec) * num / den;
    balls.push_back({z[k], r});
  }
  for (int j = 0; j < D; ++j)
    for (int k = j + 1; k < D; ++k)
      if (!(abs(balls[j].center - balls[k].center) > balls[j].radius + balls[k].radius)) return std::nullopt;
  return balls;
}

std::optional<Interval> abs_enclosure(const std::vector<Integer>& num, const Integer& den, const RootBall& ball,
                                      mpfr_prec_t prec) {
  std::vector<Real> c;
  for (const auto& x : num) c.push_back(Real::from(x, prec));
  Complex value(prec);
  const Real az = abs(ball.center);
  const Real azr = az + ball.radius;
  Real at_center(prec), at_outer(prec);
  for (size_t i = c.size(); i-- > 0;) {
    value = value * ball.center + Complex(c[i], Real(prec));
    at_center = at_center * az + abs(c[i]);
    at_outer = at_outer * azr + abs(c[i]);
  }
  // |a(z') - a(z)| <= abar(|z| + r) - abar(|z|) for |z' - z| <= r
  const Real e = eps(prec) * Real::from(4L * static_cast<long>(c.size()) + 4, prec);
  Real err = (at_outer - at_center) + e * at_outer;
  err = err * Real::from(2, prec);
  Real mid = abs(value);
  if (!(mid > err)) return std::nullopt;
  const Interval raw = Interval::around(mid, err);
  return raw / Interval::point(Rational(den), prec);
}

}  // namespace zc
