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

#include "zclosure/factor.hpp"

#include <gmp.h>

#include <algorithm>
#include <cstdint>
#include <random>

#include "zclosure/errors.hpp"

namespace zc {

namespace {

// ---------------------------------------------------------------------------
// Integer polynomials (lowest degree first, trimmed).

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int zdeg(const ZPoly& a) { return static_cast<int>(a.size()) - 1; }

Integer content(const ZPoly& a) {
  Integer g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

/// Primitive integer polynomial with positive leading coefficient, associated
/// to a nonzero rational polynomial.
ZPoly primitive_integer(const Poly<Rational>& f) {
  Integer den = common_denominator(f.coeffs());
  ZPoly r;
  for (const auto& c : f.coeffs()) {
    Rational s = c * den;
    r.push_back(s.get_num());
  }
  Integer g = content(r);
  if (r.back() < 0) g = -g;
  for (auto& c : r) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return r;
}

Poly<Rational> to_monic_rational(const ZPoly& a) {
  std::vector<Rational> c;
  for (const auto& x : a) c.emplace_back(x);
  return Poly<Rational>(std::move(c)).monic();
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, Integer(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j)
      mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
  }
  ztrim(r);
  return r;
}

/// Exact division over Z; nullopt when b does not divide a in Z[x].
std::optional<ZPoly> zdiv_exact(const ZPoly& a, const ZPoly& b) {
  if (zdeg(a) < zdeg(b)) return std::nullopt;
  ZPoly r = a;
  ZPoly q(a.size() - b.size() + 1, Integer(0));
  const int db = zdeg(b);
  for (int k = zdeg(a) - db; k >= 0; --k) {
    const Integer& top = r[k + db];
    if (top == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), b.back().get_mpz_t())) return std::nullopt;
    mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), b.back().get_mpz_t());
    for (int j = 0; j <= db; ++j) mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), b[j].get_mpz_t());
  }
  for (const auto& c : r)
    if (c != 0) return std::nullopt;
  ztrim(q);
  return q;
}

// ---------------------------------------------------------------------------
// Polynomials over Z/p for word-size primes p < 2^31.

using u64 = std::uint64_t;
using MPoly = std::vector<u64>;

void mtrim(MPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int mdeg(const MPoly& a) { return static_cast<int>(a.size()) - 1; }

u64 mpow(u64 b, u64 e, u64 p) {
  u64 r = 1;
  b %= p;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

u64 minv(u64 a, u64 p) { return mpow(a, p - 2, p); }

MPoly mreduce(const ZPoly& a, u64 p) {
  MPoly r;
  for (const auto& c : a) r.push_back(mpz_fdiv_ui(c.get_mpz_t(), p));
  mtrim(r);
  return r;
}

MPoly msub(MPoly a, const MPoly& b, u64 p) {
  if (b.size() > a.size()) a.resize(b.size(), 0);
  for (size_t i = 0; i < b.size(); ++i) a[i] = (a[i] + p - b[i]) % p;
  mtrim(a);
  return a;
}

MPoly mmul(const MPoly& a, const MPoly& b, u64 p) {
  if (a.empty() || b.empty()) return {};
  MPoly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  }
  mtrim(r);
  return r;
}

MPoly mscale(MPoly a, u64 s, u64 p) {
  for (auto& c : a) c = c * s % p;
  mtrim(a);
  return a;
}

MPoly mmonic(const MPoly& a, u64 p) { return a.empty() ? a : mscale(a, minv(a.back(), p), p); }

std::pair<MPoly, MPoly> mdivmod(const MPoly& a, const MPoly& b, u64 p) {
  if (mdeg(a) < mdeg(b)) return {{}, a};
  MPoly r = a;
  MPoly q(a.size() - b.size() + 1, 0);
  const int db = mdeg(b);
  const u64 inv = minv(b.back(), p);
  for (int k = mdeg(a) - db; k >= 0; --k) {
    u64 c = r[k + db] * inv % p;
    if (!c) continue;
    q[k] = c;
    for (int j = 0; j <= db; ++j) r[k + j] = (r[k + j] + (p - c) * b[j]) % p;
  }
  r.resize(db);
  mtrim(r);
  mtrim(q);
  return {q, r};
}

MPoly mmod(const MPoly& a, const MPoly& b, u64 p) { return mdivmod(a, b, p).second; }

MPoly mgcd(MPoly a, MPoly b, u64 p) {
  while (!b.empty()) {
    MPoly r = mmod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return mmonic(a, p);
}

/// (s, t) with s*a + t*b = 1 for coprime a, b.
std::pair<MPoly, MPoly> mxgcd(const MPoly& a, const MPoly& b, u64 p) {
  MPoly r0 = a, r1 = b, s0{1}, s1, t0, t1{1};
  while (!r1.empty()) {
    auto [q, r] = mdivmod(r0, r1, p);
    MPoly s2 = msub(s0, mmul(q, s1, p), p);
    MPoly t2 = msub(t0, mmul(q, t1, p), p);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  ZC_ASSERT(mdeg(r0) == 0, "modular xgcd of non-coprime polynomials");
  const u64 inv = minv(r0[0], p);
  return {mscale(s0, inv, p), mscale(t0, inv, p)};
}

MPoly mderivative(const MPoly& a, u64 p) {
  MPoly r;
  for (size_t i = 1; i < a.size(); ++i) r.push_back(a[i] * (i % p) % p);
  mtrim(r);
  return r;
}

MPoly mpowmod(MPoly base, const Integer& e, const MPoly& mod, u64 p) {
  MPoly r{1};
  base = mmod(base, mod, p);
  const size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
  for (size_t i = bits; i-- > 0;) {
    r = mmod(mmul(r, r, p), mod, p);
    if (mpz_tstbit(e.get_mpz_t(), i)) r = mmod(mmul(r, base, p), mod, p);
  }
  return r;
}

/// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<MPoly, int>> ddf(MPoly f, u64 p) {
  std::vector<std::pair<MPoly, int>> out;
  const MPoly x{0, 1};
  MPoly h = x;
  int i = 0;
  while (mdeg(f) >= 2 * (i + 1)) {
    ++i;
    h = mpowmod(h, Integer(static_cast<unsigned long>(p)), f, p);
    MPoly g = mgcd(msub(h, x, p), f, p);
    if (mdeg(g) > 0) {
      out.emplace_back(g, i);
      f = mdivmod(f, g, p).first;
      h = mmod(h, f, p);
    }
  }
  if (mdeg(f) > 0) out.emplace_back(f, mdeg(f));
  return out;
}

/// Equal-degree splitting (Cantor-Zassenhaus), p odd.
void edf(const MPoly& g, int d, u64 p, std::mt19937_64& rng, std::vector<MPoly>& out) {
  if (mdeg(g) == d) {
    out.push_back(g);
    return;
  }
  Integer e;
  mpz_ui_pow_ui(e.get_mpz_t(), p, d);
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> coef(0, p - 1);
  for (;;) {
    MPoly a(mdeg(g), 0);
    for (auto& c : a) c = coef(rng);
    mtrim(a);
    if (mdeg(a) < 1) continue;
    MPoly b = msub(mpowmod(a, e, g, p), MPoly{1}, p);
    MPoly h = mgcd(b, g, p);
    if (mdeg(h) > 0 && mdeg(h) < mdeg(g)) {
      edf(h, d, p, rng, out);
      edf(mdivmod(g, h, p).first, d, p, rng, out);
      return;
    }
  }
}

bool is_prime_u64(u64 n) {
  if (n < 2) return false;
  for (u64 q = 2; q * q <= n; ++q)
    if (n % q == 0) return false;
  return true;
}

/// Good primes: do not divide the leading coefficient and keep f squarefree.
bool good_prime(const ZPoly& f, u64 p, MPoly& fp) {
  if (mpz_fdiv_ui(f.back().get_mpz_t(), p) == 0) return false;
  fp = mmonic(mreduce(f, p), p);
  return mdeg(mgcd(fp, mderivative(fp, p), p)) == 0;
}

// ---------------------------------------------------------------------------
// Hensel lifting modulo m = p^k with Integer coefficients in [0, m).

using HPoly = std::vector<Integer>;

HPoly hreduce(HPoly a, const Integer& m) {
  for (auto& c : a) mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  ztrim(a);
  return a;
}

HPoly hfrom(const MPoly& a) {
  HPoly r;
  for (u64 c : a) r.emplace_back(static_cast<unsigned long>(c));
  return r;
}

HPoly hadd(HPoly a, const HPoly& b, const Integer& m) {
  if (b.size() > a.size()) a.resize(b.size(), Integer(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] += b[i];
  return hreduce(std::move(a), m);
}

HPoly hsub(HPoly a, const HPoly& b, const Integer& m) {
  if (b.size() > a.size()) a.resize(b.size(), Integer(0));
  for (size_t i = 0; i < b.size(); ++i) a[i] -= b[i];
  return hreduce(std::move(a), m);
}

HPoly hmul(const HPoly& a, const HPoly& b, const Integer& m) { return hreduce(zmul(a, b), m); }

/// Division by a monic polynomial modulo m.
std::pair<HPoly, HPoly> hdivmod(const HPoly& a, const HPoly& b, const Integer& m) {
  if (zdeg(a) < zdeg(b)) return {{}, a};
  HPoly r = a;
  HPoly q(a.size() - b.size() + 1, Integer(0));
  const int db = zdeg(b);
  for (int k = zdeg(a) - db; k >= 0; --k) {
    Integer c = r[k + db];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    if (c == 0) continue;
    q[k] = c;
    for (int j = 0; j <= db; ++j) mpz_submul(r[k + j].get_mpz_t(), c.get_mpz_t(), b[j].get_mpz_t());
  }
  r.resize(db);
  return {hreduce(std::move(q), m), hreduce(std::move(r), m)};
}

/// One quadratic Hensel step: f = g*h mod m, s*g + t*h = 1 mod m, h monic.
/// Lifts all four to modulus m2 = m^2.
void hensel_step(const HPoly& f, HPoly& g, HPoly& h, HPoly& s, HPoly& t, const Integer& m2) {
  HPoly e = hsub(hreduce(f, m2), hmul(g, h, m2), m2);
  auto [q, r] = hdivmod(hmul(s, e, m2), h, m2);
  HPoly g2 = hadd(hadd(g, hmul(t, e, m2), m2), hmul(q, g, m2), m2);
  HPoly h2 = hadd(h, r, m2);
  HPoly b = hsub(hadd(hmul(s, g2, m2), hmul(t, h2, m2), m2), HPoly{Integer(1)}, m2);
  auto [c, d] = hdivmod(hmul(s, b, m2), h2, m2);
  s = hsub(s, d, m2);
  t = hsub(hsub(t, hmul(t, b, m2), m2), hmul(c, g2, m2), m2);
  g = std::move(g2);
  h = std::move(h2);
}

/// Lifts the monic modular factors of f (mod p) to monic factors mod p^k.
void multi_lift(const HPoly& f, const std::vector<MPoly>& facs, size_t lo, size_t hi, u64 p,
                const Integer& pk, std::vector<HPoly>& out) {
  if (hi - lo == 1) {
    Integer inv;
    mpz_invert(inv.get_mpz_t(), f.back().get_mpz_t(), pk.get_mpz_t());
    HPoly r = f;
    for (auto& c : r) c *= inv;
    out.push_back(hreduce(std::move(r), pk));
    return;
  }
  const size_t mid = lo + (hi - lo) / 2;
  MPoly g0{mpz_fdiv_ui(f.back().get_mpz_t(), p)}, h0{1};
  for (size_t i = lo; i < mid; ++i) g0 = mmul(g0, facs[i], p);
  for (size_t i = mid; i < hi; ++i) h0 = mmul(h0, facs[i], p);
  auto [s0, t0] = mxgcd(g0, h0, p);
  HPoly g = hfrom(g0), h = hfrom(h0), s = hfrom(s0), t = hfrom(t0);
  Integer m(static_cast<unsigned long>(p));
  while (m < pk) {
    Integer m2 = m * m;
    hensel_step(f, g, h, s, t, m2);
    m = m2;
  }
  g = hreduce(g, pk);
  h = hreduce(h, pk);
  multi_lift(g, facs, lo, mid, p, pk, out);
  multi_lift(h, facs, mid, hi, p, pk, out);
}

Integer symmetric(const Integer& c, const Integer& m) {
  Integer r;
  mpz_fdiv_r(r.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  if (2 * r > m) r -= m;
  return r;
}

ZPoly primitive_part(ZPoly a) {
  Integer g = content(a);
  if (a.back() < 0) g = -g;
  for (auto& c : a) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return a;
}

/// Factors a primitive squarefree integer polynomial with f(0) != 0 and
/// positive leading coefficient into primitive irreducibles.
std::vector<ZPoly> zassenhaus(const ZPoly& f) {
  if (zdeg(f) <= 1) return {f};
  // Choose among a few good primes the one with fewest modular factors.
  u64 best_p = 0;
  std::vector<std::pair<MPoly, int>> best_ddf;
  size_t best_count = SIZE_MAX;
  int tried = 0;
  for (u64 p = 3; tried < 6; p += 2) {
    if (!is_prime_u64(p)) continue;
    MPoly fp;
    if (!good_prime(f, p, fp)) continue;
    ++tried;
    auto parts = ddf(fp, p);
    size_t count = 0;
    for (const auto& [g, d] : parts) count += mdeg(g) / d;
    if (count < best_count) {
      best_count = count;
      best_p = p;
      best_ddf = std::move(parts);
    }
    if (count == 1) return {f};
  }
  const u64 p = best_p;
  std::mt19937_64 rng(0x5eed + p);
  std::vector<MPoly> facs;
  for (const auto& [g, d] : best_ddf) edf(g, d, p, rng, facs);
  std::sort(facs.begin(), facs.end());

  // Mignotte-type bound on coefficients of lc(f) * (any factor).
  Integer norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  Integer root;
  mpz_sqrt(root.get_mpz_t(), norm2.get_mpz_t());
  root += 1;
  Integer bound = root * abs(f.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), zdeg(f));
  Integer pk(static_cast<unsigned long>(p));
  while (pk <= 2 * bound) pk *= static_cast<unsigned long>(p);

  std::vector<HPoly> lifted;
  multi_lift(hreduce(f, pk), facs, 0, facs.size(), p, pk, lifted);

  std::vector<ZPoly> result;
  ZPoly cur = f;
  std::vector<HPoly> pool = lifted;
  size_t s = 1;
  while (2 * s <= pool.size()) {
    bool found = false;
    std::vector<size_t> idx(s);
    for (size_t i = 0; i < s; ++i) idx[i] = i;
    const Integer lc = cur.back();
    const Integer target0 = lc * cur[0];
    for (;;) {
      // constant-term screen
      Integer c0 = lc;
      for (size_t i : idx) c0 = (c0 * pool[i][0]) % pk;
      c0 = symmetric(c0, pk);
      if (c0 != 0 && mpz_divisible_p(target0.get_mpz_t(), c0.get_mpz_t())) {
        HPoly g{lc};
        for (size_t i : idx) g = hmul(g, pool[i], pk);
        ZPoly cand;
        for (const auto& c : g) cand.push_back(symmetric(c, pk));
        ztrim(cand);
        cand = primitive_part(std::move(cand));
        if (auto q = zdiv_exact(cur, cand)) {
          result.push_back(cand);
          cur = std::move(*q);
          for (size_t k = s; k-- > 0;) pool.erase(pool.begin() + static_cast<long>(idx[k]));
          found = true;
          break;
        }
      }
      // next combination
      size_t k = s;
      while (k > 0 && idx[k - 1] == pool.size() - s + k - 1) --k;
      if (k == 0) break;
      ++idx[k - 1];
      for (size_t j = k; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (zdeg(cur) > 0) result.push_back(primitive_part(cur));
  return result;
}

bool poly_less(const Poly<Rational>& a, const Poly<Rational>& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  for (int i = 0; i <= a.degree(); ++i) {
    int c = cmp(a.coeffs()[i], b.coeffs()[i]);
    if (c) return c < 0;
  }
  return false;
}

bool modular_squarefree(const ZPoly& f) {
  int tried = 0;
  for (u64 p = 1000003; tried < 4; p += 2) {
    if (!is_prime_u64(p)) continue;
    ++tried;
    MPoly fp;
    if (good_prime(f, p, fp)) return true;
  }
  return false;
}

/// Factors one squarefree rational polynomial, appending (factor, mult).
void factor_squarefree(const Poly<Rational>& g, int mult, QFactorization& out) {
  Poly<Rational> rest = g.monic();
  if (rest.coeff(0) == 0) {
    out.emplace_back(Poly<Rational>::x(), mult);
    rest = exact_quotient(rest, Poly<Rational>::x());
  }
  if (rest.degree() < 1) return;
  for (const auto& z : zassenhaus(primitive_integer(rest))) out.emplace_back(to_monic_rational(z), mult);
}

}  // namespace

QFactorization factor_over_q(const Poly<Rational>& f) {
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  QFactorization out;
  if (f.degree() < 1) return out;
  if (is_squarefree_over_q(f)) {
    factor_squarefree(f, 1, out);
  } else {
    for (const auto& [g, m] : squarefree_decomposition(f)) factor_squarefree(g, m, out);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first == b.first) return a.second < b.second;
    return poly_less(a.first, b.first);
  });
  return out;
}

bool is_squarefree_over_q(const Poly<Rational>& f) {
  if (f.degree() < 2) return true;
  if (modular_squarefree(primitive_integer(f))) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

bool is_irreducible_over_q(const Poly<Rational>& f) {
  if (f.degree() < 1) return false;
  auto fac = factor_over_q(f);
  return fac.size() == 1 && fac[0].second == 1;
}

Poly<NfElem> shift_by_generator(const Poly<NfElem>& f, const FieldPtr& K, long c) {
  if (c == 0) return f;
  const NfElem a = NfElem::generator(K) * NfElem(c);
  const Poly<NfElem> lin = Poly<NfElem>::linear(a);  // x - c*theta
  Poly<NfElem> acc;
  for (int i = f.degree(); i >= 0; --i) acc = acc * lin + Poly<NfElem>(f.coeffs()[i]);
  return acc;
}

Poly<Rational> poly_norm(const Poly<NfElem>& f, const FieldPtr& K) {
  if (f.is_zero()) return {};
  const int D = f.degree() * K->degree();
  // Interpolate N(x) = norm(f(x)) through D + 1 integer points.
  std::vector<Rational> xs, ys;
  for (int k = 0; k <= D; ++k) {
    const long x = k - D / 2;
    xs.emplace_back(x);
    NfElem v = f.eval(NfElem(K, Rational(x)));
    ys.push_back(norm(v.in_field(K)));
  }
  // Newton divided differences.
  std::vector<Rational> dd = ys;
  for (int j = 1; j <= D; ++j)
    for (int i = D; i >= j; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - j]);
  Poly<Rational> acc(dd[D]);
  for (int i = D - 1; i >= 0; --i) acc = acc * Poly<Rational>::linear(xs[i]) + Poly<Rational>(dd[i]);
  return acc;
}

KFactorization factor_over_field(const Poly<NfElem>& f, const FieldPtr& K, const FieldLimits& limits) {
  if (f.is_zero()) throw DomainError("cannot factor the zero polynomial");
  KFactorization out;
  if (f.degree() < 1) return out;
  auto into_k = [&](const Rational& q) { return NfElem(K, q); };
  if (K->is_rationals()) {
    Poly<Rational> fq = f.map<Rational>([](const NfElem& a) { return a.rational_value(); });
    for (const auto& [g, m] : factor_over_q(fq)) out.emplace_back(g.map<NfElem>(into_k), m);
    return out;
  }
  Poly<NfElem> fk = f.map<NfElem>([&](const NfElem& a) { return a.in_field(K); }).monic();
  std::vector<std::pair<Poly<NfElem>, int>> parts;
  if (gcd(fk, fk.derivative()).degree() == 0)
    parts.emplace_back(fk, 1);
  else
    parts = squarefree_decomposition(fk);
  for (const auto& [g, mult] : parts) {
    if (g.degree() == 1) {
      out.emplace_back(g, mult);
      continue;
    }
    if (g.degree() * K->degree() > limits.max_norm_degree)
      throw ResourceLimitError("norm degree " + std::to_string(g.degree() * K->degree()) +
                               " exceeds limit");
    long shift = 0;
    Poly<NfElem> gc;
    Poly<Rational> N;
    for (int attempt = 0;; ++attempt) {
      shift = (attempt % 2 == 1) ? (attempt + 1) / 2 : -(attempt / 2);
      gc = shift_by_generator(g, K, shift);
      N = poly_norm(gc, K);
      if (is_squarefree_over_q(N)) break;
      ZC_ASSERT(attempt < 200, "no squarefree norm found");
    }
    auto qf = factor_over_q(N);
    if (qf.size() == 1) {
      out.emplace_back(g, mult);
      continue;
    }
    int total = 0;
    for (const auto& [h, one] : qf) {
      Poly<NfElem> G = gcd(gc, h.map<NfElem>(into_k));
      ZC_ASSERT(G.degree() >= 1, "norm factor has trivial gcd");
      total += G.degree();
      out.emplace_back(shift_by_generator(G, K, -shift), mult);
    }
    ZC_ASSERT(total == g.degree(), "norm factors do not account for the polynomial");
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (a.first.degree() != b.first.degree()) return a.first.degree() < b.first.degree();
    for (int i = 0; i <= a.first.degree(); ++i) {
      const auto ka = a.first.coeffs()[i].coords(), kb = b.first.coeffs()[i].coords();
      for (size_t j = 0; j < ka.size() && j < kb.size(); ++j) {
        int c = cmp(ka[j], kb[j]);
        if (c) return c < 0;
      }
    }
    return a.second < b.second;
  });
  return out;
}

}  // namespace zc
