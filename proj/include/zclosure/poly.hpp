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

#pragma once

#include <sstream>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "zclosure/errors.hpp"
#include "zclosure/rational.hpp"

namespace zc {

namespace detail {
// Unqualified call so argument-dependent lookup finds is_zero for scalar
// types declared after this header; member is_zero() would hide it inside
// class scope.
template <class T>
bool scalar_is_zero(const T& x) {
  return is_zero(x);
}
}  // namespace detail

/// Dense univariate polynomial, coefficients lowest degree first. The zero
/// polynomial has no coefficients; otherwise the leading coefficient is
/// nonzero. T must provide is_zero(), inverse() and construction from int.
template <class T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c_(std::move(coeffs)) { trim(); }
  explicit Poly(const T& constant) : c_{constant} { trim(); }

  static Poly x() { return Poly(std::vector<T>{T(0), T(1)}); }
  static Poly monomial(const T& coeff, int deg) {
    std::vector<T> c(deg + 1, T(0));
    c[deg] = coeff;
    return Poly(std::move(c));
  }
  /// x - root
  static Poly linear(const T& root) { return Poly(std::vector<T>{-root, T(1)}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : T(0); }
  const T& lead() const { return c_.back(); }
  bool is_monic() const { return !c_.empty() && c_.back() == T(1); }

  Poly& operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
  }
  Poly& operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), T(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
  }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator-(Poly a) {
    for (auto& x : a.c_) x = -x;
    return a;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<T> r(a.c_.size() + b.c_.size() - 1, T(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (detail::scalar_is_zero(a.c_[i])) continue;
      for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    }
    return Poly(std::move(r));
  }
  Poly scaled(const T& s) const {
    std::vector<T> r = c_;
    for (auto& x : r) x *= s;
    return Poly(std::move(r));
  }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  T eval(const T& at) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> r(c_.size() - 1, T(0));
    for (size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * T(static_cast<long>(i));
    return Poly(std::move(r));
  }

  Poly monic() const {
    if (is_zero()) return *this;
    return scaled(inverse(lead()));
  }

  /// Coefficient-wise conversion, e.g. Rational -> NfElem.
  template <class U, class Fn>
  Poly<U> map(Fn&& fn) const {
    std::vector<U> r;
    r.reserve(c_.size());
    for (const auto& x : c_) r.push_back(fn(x));
    return Poly<U>(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && detail::scalar_is_zero(c_.back())) c_.pop_back();
  }
  std::vector<T> c_;
};

/// Euclidean division over a field: a = q*b + r, deg r < deg b.
template <class T>
std::pair<Poly<T>, Poly<T>> divmod(const Poly<T>& a, const Poly<T>& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (a.degree() < b.degree()) return {Poly<T>(), a};
  std::vector<T> r = a.coeffs();
  const int db = b.degree();
  std::vector<T> q(a.degree() - db + 1, T(0));
  const T inv_lead = inverse(b.lead());
  const bool monic = b.lead() == T(1);
  for (int k = a.degree() - db; k >= 0; --k) {
    T coef = r[k + db];
    if (detail::scalar_is_zero(coef)) continue;
    if (!monic) coef *= inv_lead;
    q[k] = coef;
    for (int j = 0; j <= db; ++j) r[k + j] -= coef * b.coeffs()[j];
  }
  r.resize(db);
  return {Poly<T>(std::move(q)), Poly<T>(std::move(r))};
}

template <class T>
Poly<T> operator%(const Poly<T>& a, const Poly<T>& b) {
  return divmod(a, b).second;
}

template <class T>
Poly<T> exact_quotient(const Poly<T>& a, const Poly<T>& b) {
  auto [q, r] = divmod(a, b);
  ZC_ASSERT(r.is_zero(), "inexact polynomial division");
  return q;
}

/// Monic gcd over a field (zero if both inputs are zero).
template <class T>
Poly<T> gcd(Poly<T> a, Poly<T> b) {
  while (!b.is_zero()) {
    Poly<T> r = divmod(a, b).second;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// Returns (g, s, t) with s*a + t*b = g = gcd(a, b), g monic.
template <class T>
std::tuple<Poly<T>, Poly<T>, Poly<T>> xgcd(const Poly<T>& a, const Poly<T>& b) {
  Poly<T> r0 = a, r1 = b;
  Poly<T> s0(T(1)), s1, t0, t1(T(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<T> s2 = s0 - q * s1;
    Poly<T> t2 = t0 - q * t1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  T inv = inverse(r0.lead());
  return {r0.scaled(inv), s0.scaled(inv), t0.scaled(inv)};
}

template <class T>
Poly<T> pow(const Poly<T>& base, unsigned e) {
  Poly<T> r(T(1)), b = base;
  while (e) {
    if (e & 1u) r *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return r;
}

/// Product of the distinct irreducible factors (monic), i.e. f / gcd(f, f').
template <class T>
Poly<T> squarefree_part(const Poly<T>& f) {
  Poly<T> g = gcd(f, f.derivative());
  return exact_quotient(f.monic(), g);
}

/// Yun's algorithm over a field of characteristic zero: returns monic
/// squarefree, pairwise coprime (factor, multiplicity) pairs with
/// f = lead(f) * prod factor^multiplicity. Constant factors are dropped.
template <class T>
std::vector<std::pair<Poly<T>, int>> squarefree_decomposition(const Poly<T>& f) {
  std::vector<std::pair<Poly<T>, int>> out;
  if (f.degree() < 1) return out;
  Poly<T> a = f.monic();
  Poly<T> b = a.derivative();
  Poly<T> c = gcd(a, b);
  Poly<T> w = exact_quotient(a, c);
  Poly<T> y = exact_quotient(b, c);
  int i = 1;
  while (w.degree() > 0) {
    Poly<T> z = y - w.derivative();
    Poly<T> g = gcd(w, z);
    if (g.degree() > 0) out.emplace_back(g, i);
    w = exact_quotient(w, g);
    y = exact_quotient(z, g);
    ++i;
  }
  return out;
}

template <class T, class Fmt>
std::string poly_to_string(const Poly<T>& p, Fmt&& fmt, const std::string& var = "x") {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = p.degree(); i >= 0; --i) {
    const T& c = p.coeffs()[i];
    if (detail::scalar_is_zero(c)) continue;
    if (!first) os << " + ";
    first = false;
    os << "(" << fmt(c) << ")";
    if (i >= 1) os << "*" << var;
    if (i >= 2) os << "^" << i;
  }
  return os.str();
}

inline std::string to_string(const Poly<Rational>& p, const std::string& var = "x") {
  return poly_to_string(p, [](const Rational& q) { return to_string(q); }, var);
}

}  // namespace zc
