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

#include "zclosure/number_field.hpp"

#include <algorithm>
#include <sstream>

#include "zclosure/errors.hpp"

namespace zc {

NumberField::NumberField(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.size() < 2) throw DomainError("defining polynomial must have degree >= 1");
  if (coeffs_.back() != 1) throw DomainError("defining polynomial must be monic");
  const int d = degree();
  // x^d = -(c_0 + ... + c_{d-1} x^{d-1})
  std::vector<Integer> cur(d);
  for (int i = 0; i < d; ++i) cur[i] = -coeffs_[i];
  for (int k = 0; k + 1 < d; ++k) {
    reduce_.push_back(cur);
    // multiply by x
    std::vector<Integer> next(d);
    Integer top = cur[d - 1];
    for (int i = d - 1; i >= 1; --i) next[i] = cur[i - 1];
    next[0] = 0;
    if (top != 0)
      for (int i = 0; i < d; ++i) next[i] -= top * coeffs_[i];
    cur = std::move(next);
  }
}

FieldPtr NumberField::create(std::vector<Integer> coeffs) {
  return std::make_shared<const NumberField>(std::move(coeffs));
}

const FieldPtr& NumberField::rationals() {
  static const FieldPtr q = create({Integer(0), Integer(1)});
  return q;
}

Poly<Rational> NumberField::defining_poly() const {
  std::vector<Rational> c;
  for (const auto& x : coeffs_) c.emplace_back(x);
  return Poly<Rational>(std::move(c));
}

std::string NumberField::to_string(const std::string& var) const {
  return zc::to_string(defining_poly(), var);
}

bool same_field(const FieldPtr& a, const FieldPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return a->coefficients() == b->coefficients();
}

// ---------------------------------------------------------------------------

NfElem::NfElem(FieldPtr field, const Rational& q)
    : field_(std::move(field)), num_(field_->degree(), Integer(0)), den_(q.get_den()) {
  num_[0] = q.get_num();
}

NfElem::NfElem(FieldPtr field, const std::vector<Rational>& coords) : field_(std::move(field)) {
  const int d = field_->degree();
  if (static_cast<int>(coords.size()) > d) throw DomainError("too many coordinates for field");
  den_ = common_denominator(coords);
  num_.assign(d, Integer(0));
  for (size_t i = 0; i < coords.size(); ++i) {
    Rational scaled = coords[i] * den_;
    num_[i] = scaled.get_num();
  }
  normalize();
}

NfElem::NfElem(FieldPtr field, std::vector<Integer> num, Integer den)
    : field_(std::move(field)), num_(std::move(num)), den_(std::move(den)) {
  if (field_) num_.resize(field_->degree(), Integer(0));
  if (den_ == 0) throw DomainError("zero denominator");
  normalize();
}

NfElem NfElem::generator(const FieldPtr& field) {
  const int d = field->degree();
  std::vector<Integer> num(d, Integer(0));
  if (d == 1)
    num[0] = -field->coefficients()[0];
  else
    num[1] = 1;
  return NfElem(field, std::move(num), Integer(1));
}

void NfElem::normalize() {
  if (den_ < 0) {
    den_ = -den_;
    for (auto& x : num_) x = -x;
  }
  if (den_ == 1) return;
  Integer g = den_;
  for (const auto& x : num_) {
    if (g == 1) break;
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  }
  if (g == 1) return;
  bool all_zero = std::all_of(num_.begin(), num_.end(), [](const Integer& x) { return x == 0; });
  if (all_zero) {
    den_ = 1;
    return;
  }
  for (auto& x : num_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
}

bool NfElem::is_rational() const {
  for (size_t i = 1; i < num_.size(); ++i)
    if (num_[i] != 0) return false;
  return true;
}

Rational NfElem::rational_value() const {
  if (!is_rational()) throw DomainError("element is not rational");
  Rational r(num_[0], den_);
  r.canonicalize();
  return r;
}

Rational NfElem::coord(int i) const {
  if (i < 0 || i >= static_cast<int>(num_.size())) return Rational(0);
  Rational r(num_[i], den_);
  r.canonicalize();
  return r;
}

std::vector<Rational> NfElem::coords() const {
  std::vector<Rational> r;
  r.reserve(num_.size());
  for (size_t i = 0; i < num_.size(); ++i) r.push_back(coord(static_cast<int>(i)));
  return r;
}

NfElem NfElem::in_field(const FieldPtr& field) const {
  if (field_) {
    if (!same_field(field_, field)) throw DomainError("element belongs to a different field");
    return *this;
  }
  NfElem r(*this);
  r.field_ = field;
  r.num_.resize(field->degree(), Integer(0));
  return r;
}

namespace {

const FieldPtr& common_field(const FieldPtr& a, const FieldPtr& b) {
  if (!a) return b;
  if (!b) return a;
  if (a != b && !same_field(a, b)) throw DomainError("mixing elements of different number fields");
  return a;
}

}  // namespace

NfElem& NfElem::operator+=(const NfElem& o) {
  field_ = common_field(field_, o.field_);
  if (o.num_.size() > num_.size()) num_.resize(o.num_.size(), Integer(0));
  if (den_ == o.den_) {
    for (size_t i = 0; i < o.num_.size(); ++i) num_[i] += o.num_[i];
  } else {
    for (size_t i = 0; i < num_.size(); ++i) num_[i] *= o.den_;
    for (size_t i = 0; i < o.num_.size(); ++i) num_[i] += o.num_[i] * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

NfElem& NfElem::operator-=(const NfElem& o) {
  field_ = common_field(field_, o.field_);
  if (o.num_.size() > num_.size()) num_.resize(o.num_.size(), Integer(0));
  if (den_ == o.den_) {
    for (size_t i = 0; i < o.num_.size(); ++i) num_[i] -= o.num_[i];
  } else {
    for (size_t i = 0; i < num_.size(); ++i) num_[i] *= o.den_;
    for (size_t i = 0; i < o.num_.size(); ++i) num_[i] -= o.num_[i] * den_;
    den_ *= o.den_;
  }
  normalize();
  return *this;
}

NfElem& NfElem::operator*=(const NfElem& o) {
  field_ = common_field(field_, o.field_);
  if (o.num_.size() == 1) {
    for (auto& x : num_) x *= o.num_[0];
  } else if (num_.size() == 1) {
    Integer s = num_[0];
    num_ = o.num_;
    for (auto& x : num_) x *= s;
  } else {
    const int d = static_cast<int>(num_.size());
    std::vector<Integer> prod(2 * d - 1, Integer(0));
    for (int i = 0; i < d; ++i) {
      if (num_[i] == 0) continue;
      for (int j = 0; j < d; ++j)
        if (o.num_[j] != 0) mpz_addmul(prod[i + j].get_mpz_t(), num_[i].get_mpz_t(), o.num_[j].get_mpz_t());
    }
    const auto& table = field_->reduction_table();
    for (int k = d; k <= 2 * d - 2; ++k) {
      if (prod[k] == 0) continue;
      const auto& r = table[k - d];
      for (int i = 0; i < d; ++i)
        if (r[i] != 0) mpz_addmul(prod[i].get_mpz_t(), prod[k].get_mpz_t(), r[i].get_mpz_t());
    }
    prod.resize(d);
    num_ = std::move(prod);
  }
  den_ *= o.den_;
  normalize();
  return *this;
}

bool operator==(const NfElem& a, const NfElem& b) {
  if (a.field_ && b.field_ && a.field_ != b.field_ && !same_field(a.field_, b.field_)) return false;
  if (a.den_ != b.den_) return false;
  const size_t n = std::max(a.num_.size(), b.num_.size());
  for (size_t i = 0; i < n; ++i) {
    const Integer zero(0);
    const Integer& x = i < a.num_.size() ? a.num_[i] : zero;
    const Integer& y = i < b.num_.size() ? b.num_[i] : zero;
    if (x != y) return false;
  }
  return true;
}

bool NfElem::is_zero() const {
  return std::all_of(num_.begin(), num_.end(), [](const Integer& x) { return x == 0; });
}

NfElem NfElem::inverse() const {
  if (is_zero()) throw DomainError("inverse of zero");
  if (num_.size() == 1) {
    NfElem r(*this);
    std::swap(r.num_[0], r.den_);
    r.normalize();
    return r;
  }
  std::vector<Rational> c;
  c.reserve(num_.size());
  for (const auto& x : num_) c.emplace_back(x);
  Poly<Rational> a(std::move(c));
  auto [g, s, t] = xgcd(a, field_->defining_poly());
  if (g.degree() != 0) throw DomainError("zero divisor: defining polynomial is reducible");
  // s * (num/den) = 1 mod f  =>  inverse = den * s
  std::vector<Rational> coords = s.coeffs();
  for (auto& x : coords) x *= den_;
  return NfElem(field_, coords);
}

std::string NfElem::to_string(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0) continue;
    Rational c(num_[i], den_);
    c.canonicalize();
    if (!first) os << " + ";
    first = false;
    if (i == 0) {
      os << c.get_str();
    } else {
      if (c != 1) os << c.get_str() << "*";
      os << var;
      if (i > 1) os << "^" << i;
    }
  }
  return first ? "0" : os.str();
}

NfElem pow(const NfElem& a, long e) {
  if (e < 0) return pow(a.inverse(), -e);
  NfElem r = a.field() ? NfElem(a.field(), Rational(1)) : NfElem(1);
  NfElem b = a;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Poly<Rational> min_poly(const NfElem& a) {
  if (!a.field() || a.is_rational()) return Poly<Rational>::linear(a.rational_value());
  const int d = a.field()->degree();
  struct Row {
    std::vector<Rational> vec;
    std::vector<Rational> comb;
    int pivot;
  };
  std::vector<Row> rows;
  NfElem power(a.field(), Rational(1));
  for (int k = 0; k <= d; ++k) {
    std::vector<Rational> vec = power.coords();
    std::vector<Rational> comb(d + 1, Rational(0));
    comb[k] = 1;
    for (const auto& row : rows) {
      const Rational f = vec[row.pivot];
      if (f == 0) continue;
      for (int i = 0; i < d; ++i) vec[i] -= f * row.vec[i];
      for (int i = 0; i <= d; ++i) comb[i] -= f * row.comb[i];
    }
    int pivot = -1;
    for (int i = 0; i < d; ++i)
      if (vec[i] != 0) {
        pivot = i;
        break;
      }
    if (pivot < 0) {
      comb.resize(k + 1);
      return Poly<Rational>(std::move(comb));
    }
    const Rational inv = 1 / vec[pivot];
    for (auto& x : vec) x *= inv;
    for (auto& x : comb) x *= inv;
    rows.push_back({std::move(vec), std::move(comb), pivot});
    power *= a;
  }
  throw InvariantViolation("minimal polynomial search did not terminate");
}

Integer bareiss_determinant(std::vector<Integer> a, size_t n);

Rational norm(const NfElem& a) {
  const int d = a.field() ? a.field()->degree() : 1;
  if (!a.field() || a.is_rational()) return pow(a.rational_value(), d);
  // det of multiplication by the numerator, over den^d
  const auto& f = a.field()->coefficients();
  std::vector<Integer> v = a.numerators();
  std::vector<Integer> m(static_cast<size_t>(d) * d);
  for (int j = 0; j < d; ++j) {
    for (int i = 0; i < d; ++i) m[i * d + j] = v[i];
    Integer top = v[d - 1];
    for (int i = d - 1; i >= 1; --i) v[i] = v[i - 1];
    v[0] = 0;
    if (top != 0)
      for (int i = 0; i < d; ++i) mpz_submul(v[i].get_mpz_t(), top.get_mpz_t(), f[i].get_mpz_t());
  }
  Integer den;
  mpz_pow_ui(den.get_mpz_t(), a.denominator().get_mpz_t(), d);
  Rational r(bareiss_determinant(std::move(m), d), den);
  r.canonicalize();
  return r;
}

long totient(long m) {
  long result = m;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

Poly<Rational> cyclotomic_poly(long m) {
  Poly<Rational> num = Poly<Rational>::monomial(Rational(1), static_cast<int>(m)) - Poly<Rational>(Rational(1));
  for (long d = 1; d < m; ++d)
    if (m % d == 0) num = exact_quotient(num, cyclotomic_poly(d));
  return num;
}

std::optional<long> root_of_unity_order(const NfElem& a) {
  if (a.is_zero()) return std::nullopt;
  Poly<Rational> m = min_poly(a);
  for (const auto& c : m.coeffs())
    if (c.get_den() != 1) return std::nullopt;
  if (abs(m.coeff(0)) != 1) return std::nullopt;
  const long k = m.degree();
  for (long n = 1; n <= 2 * k * k + 2; ++n) {
    if (totient(n) != k) continue;
    if (!(cyclotomic_poly(n) == m)) continue;
    NfElem one = a.field() ? NfElem(a.field(), Rational(1)) : NfElem(1);
    ZC_ASSERT(pow(a, n) == one, "cyclotomic minimal polynomial but a^n != 1");
    return n;
  }
  return std::nullopt;
}

}  // namespace zc
