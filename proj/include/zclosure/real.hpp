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

#include <mpfr.h>

#include <algorithm>
#include <string>
#include <utility>

#include "zclosure/rational.hpp"

namespace zc {

/// RAII MPFR value with its own precision. Arithmetic rounds to nearest and
/// produces the larger precision of the operands.
class Real {
 public:
  explicit Real(mpfr_prec_t prec = 128) {
    mpfr_init2(v_, prec);
    mpfr_set_zero(v_, 1);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, MPFR_PREC_MIN);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  static Real from(long v, mpfr_prec_t prec) {
    Real r(prec);
    mpfr_set_si(r.v_, v, MPFR_RNDN);
    return r;
  }
  static Real from(const Integer& v, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
    Real r(prec);
    mpfr_set_z(r.v_, v.get_mpz_t(), rnd);
    return r;
  }
  static Real from(const Rational& v, mpfr_prec_t prec, mpfr_rnd_t rnd = MPFR_RNDN) {
    Real r(prec);
    mpfr_set_q(r.v_, v.get_mpq_t(), rnd);
    return r;
  }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_zero() const { return mpfr_zero_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  friend Real operator+(const Real& a, const Real& b) { return binop(a, b, mpfr_add); }
  friend Real operator-(const Real& a, const Real& b) { return binop(a, b, mpfr_sub); }
  friend Real operator*(const Real& a, const Real& b) { return binop(a, b, mpfr_mul); }
  friend Real operator/(const Real& a, const Real& b) { return binop(a, b, mpfr_div); }
  friend Real operator-(const Real& a) {
    Real r(a.prec());
    mpfr_neg(r.v_, a.v_, MPFR_RNDN);
    return r;
  }
  friend bool operator<(const Real& a, const Real& b) { return mpfr_less_p(a.v_, b.v_) != 0; }
  friend bool operator>(const Real& a, const Real& b) { return mpfr_greater_p(a.v_, b.v_) != 0; }

 private:
  template <class Op>
  static Real binop(const Real& a, const Real& b, Op op) {
    Real r(std::max(a.prec(), b.prec()));
    op(r.v_, a.v_, b.v_, MPFR_RNDN);
    return r;
  }
  mpfr_t v_;
};

inline Real abs(const Real& a) {
  Real r(a.prec());
  mpfr_abs(r.get(), a.get(), MPFR_RNDN);
  return r;
}

inline Real sqrt(const Real& a) {
  Real r(a.prec());
  mpfr_sqrt(r.get(), a.get(), MPFR_RNDN);
  return r;
}

inline Real ldexp(const Real& a, long e) {
  Real r(a.prec());
  mpfr_mul_2si(r.get(), a.get(), e, MPFR_RNDN);
  return r;
}

struct Complex {
  Real re, im;
  explicit Complex(mpfr_prec_t prec = 128) : re(prec), im(prec) {}
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  friend Complex operator+(const Complex& a, const Complex& b) { return {a.re + b.re, a.im + b.im}; }
  friend Complex operator-(const Complex& a, const Complex& b) { return {a.re - b.re, a.im - b.im}; }
  friend Complex operator*(const Complex& a, const Complex& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
  }
  friend Complex operator/(const Complex& a, const Complex& b) {
    Real d = b.re * b.re + b.im * b.im;
    return {(a.re * b.re + a.im * b.im) / d, (a.im * b.re - a.re * b.im) / d};
  }
};

inline Real abs(const Complex& z) {
  Real r(std::max(z.re.prec(), z.im.prec()));
  mpfr_hypot(r.get(), z.re.get(), z.im.get(), MPFR_RNDN);
  return r;
}

/// Closed interval [lo, hi] with outward rounding.
class Interval {
 public:
  explicit Interval(mpfr_prec_t prec = 128) : lo_(prec), hi_(prec) {}
  Interval(const Real& lo, const Real& hi) : lo_(lo), hi_(hi) {}

  /// [mid - rad, mid + rad] rounded outward.
  static Interval around(const Real& mid, const Real& rad) {
    const mpfr_prec_t p = mid.prec();
    Interval r(p);
    mpfr_sub(r.lo_.get(), mid.get(), rad.get(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), mid.get(), rad.get(), MPFR_RNDU);
    return r;
  }
  static Interval point(const Rational& q, mpfr_prec_t prec) {
    Interval r(prec);
    mpfr_set_q(r.lo_.get(), q.get_mpq_t(), MPFR_RNDD);
    mpfr_set_q(r.hi_.get(), q.get_mpq_t(), MPFR_RNDU);
    return r;
  }

  const Real& lo() const { return lo_; }
  const Real& hi() const { return hi_; }
  bool contains_zero() const { return lo_.sign() <= 0 && hi_.sign() >= 0; }
  Real mid() const { return ldexp(lo_ + hi_, -1); }
  /// Largest absolute value of a point of the interval.
  Real mag() const { return std::max(abs(lo_), abs(hi_)); }

  friend Interval operator+(const Interval& a, const Interval& b) {
    Interval r(prec_of(a, b));
    mpfr_add(r.lo_.get(), a.lo_.get(), b.lo_.get(), MPFR_RNDD);
    mpfr_add(r.hi_.get(), a.hi_.get(), b.hi_.get(), MPFR_RNDU);
    return r;
  }
  friend Interval operator-(const Interval& a, const Interval& b) {
    Interval r(prec_of(a, b));
    mpfr_sub(r.lo_.get(), a.lo_.get(), b.hi_.get(), MPFR_RNDD);
    mpfr_sub(r.hi_.get(), a.hi_.get(), b.lo_.get(), MPFR_RNDU);
    return r;
  }
  friend Interval operator*(const Interval& a, const Interval& b) {
    const mpfr_prec_t p = prec_of(a, b);
    Interval r(p);
    Real t(p);
    bool first = true;
    for (const Real* x : {&a.lo_, &a.hi_})
      for (const Real* y : {&b.lo_, &b.hi_}) {
        mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDD);
        if (first || t < r.lo_) r.lo_ = t;
        mpfr_mul(t.get(), x->get(), y->get(), MPFR_RNDU);
        if (first || t > r.hi_) r.hi_ = t;
        first = false;
      }
    return r;
  }
  /// Requires 0 not in b.
  friend Interval operator/(const Interval& a, const Interval& b) {
    const mpfr_prec_t p = prec_of(a, b);
    Interval inv(p);
    mpfr_ui_div(inv.lo_.get(), 1, b.hi_.get(), MPFR_RNDD);
    mpfr_ui_div(inv.hi_.get(), 1, b.lo_.get(), MPFR_RNDU);
    return a * inv;
  }

  /// Natural log of a positive interval.
  friend Interval log(const Interval& a) {
    Interval r(a.lo_.prec());
    mpfr_log(r.lo_.get(), a.lo_.get(), MPFR_RNDD);
    mpfr_log(r.hi_.get(), a.hi_.get(), MPFR_RNDU);
    return r;
  }

 private:
  static mpfr_prec_t prec_of(const Interval& a, const Interval& b) {
    return std::max(a.lo_.prec(), b.lo_.prec());
  }
  Real lo_, hi_;
};

}  // namespace zc
