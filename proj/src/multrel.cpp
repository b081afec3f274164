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

#include "zclosure/multrel.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "zclosure/embedding.hpp"
#include "zclosure/errors.hpp"
#include "zclosure/matrix.hpp"
#include "zclosure/torus.hpp"

namespace zc {

std::vector<Integer> coprime_base(const std::vector<Integer>& xs) {
  std::vector<Integer> s;
  for (const auto& x : xs) {
    Integer a = abs(x);
    if (a > 1) s.push_back(a);
  }
  for (;;) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
    bool changed = false;
    for (size_t i = 0; i < s.size() && !changed; ++i)
      for (size_t j = i + 1; j < s.size() && !changed; ++j) {
        Integer g = gcd(s[i], s[j]);
        if (g == 1) continue;
        Integer a = s[i] / g, b = s[j] / g;
        s.erase(s.begin() + static_cast<long>(j));
        s.erase(s.begin() + static_cast<long>(i));
        for (const Integer* v : {&a, &b, &g})
          if (*v > 1) s.push_back(*v);
        changed = true;
      }
    if (!changed) return s;
  }
}

long valuation(Integer x, const Integer& b) {
  ZC_ASSERT(b > 1, "valuation base must exceed 1");
  x = abs(x);
  if (x == 0) throw DomainError("valuation of zero");
  long v = 0;
  while (x % b == 0) {
    x /= b;
    ++v;
  }
  return v;
}

namespace {

FieldPtr common_field(const std::vector<NfElem>& alphas) {
  for (const auto& a : alphas)
    if (a.field() && !a.field()->is_rationals()) return a.field();
  return NumberField::rationals();
}

// Rows v_b(|q_i|) over a coprime base of the numerators and denominators.
std::vector<IntVec> valuation_rows(const std::vector<Rational>& qs) {
  std::vector<Integer> parts;
  for (const auto& q : qs) {
    parts.push_back(q.get_num());
    parts.push_back(q.get_den());
  }
  std::vector<IntVec> rows;
  for (const auto& b : coprime_base(parts)) {
    IntVec row(qs.size());
    for (size_t i = 0; i < qs.size(); ++i)
      row[i] = valuation(qs[i].get_num(), b) - valuation(qs[i].get_den(), b);
    rows.push_back(std::move(row));
  }
  return rows;
}

// alpha^j = r with r rational, if such j exists. With k = deg minpoly and
// N the norm from Q(alpha), alpha^k / N is a root of unity exactly when some
// power of alpha is rational.
struct RadicalPower {
  Integer j;
  Rational r;
};

std::optional<RadicalPower> radical_power(const NfElem& a) {
  if (a.is_rational()) return RadicalPower{Integer(1), a.rational_value()};
  const Poly<Rational> m = min_poly(a);
  const int k = m.degree();
  Rational n = m.coeff(0);
  if (k % 2 == 1) n = -n;
  const auto o = root_of_unity_order(pow(a, k) / NfElem(a.field(), n));
  if (!o) return std::nullopt;
  Rational r = 1;
  for (long i = 0; i < *o; ++i) r *= n;
  return RadicalPower{Integer(k) * *o, r};
}

Integer lcm_int(const Integer& a, const Integer& b) { return a / gcd(a, b) * b; }

IntVec combine(const std::vector<IntVec>& basis, const IntVec& y, size_t k) {
  IntVec e(k, Integer(0));
  for (size_t j = 0; j < basis.size(); ++j)
    if (y[j] != 0)
      for (size_t i = 0; i < k; ++i) e[i] += y[j] * basis[j][i];
  return e;
}

// Given a lattice S whose elements all map to roots of unity, the sublattice
// mapping to 1.
IntegerLattice torsion_refine(const std::vector<NfElem>& u, const FieldPtr& K, const IntegerLattice& s) {
  const size_t k = u.size();
  const auto& sb = s.basis();
  if (sb.empty()) return IntegerLattice(k);
  std::vector<NfElem> gammas;
  std::vector<long> orders;
  long big_m = 1;
  for (const auto& v : sb) {
    gammas.push_back(power_product(u, v, K));
    const auto o = root_of_unity_order(gammas.back());
    ZC_ASSERT(o.has_value(), "torsion candidate is not a root of unity");
    orders.push_back(*o);
    big_m = std::lcm(big_m, *o);
  }
  // A generator of the cyclic group: one factor of order p^a per prime.
  NfElem omega(K, Rational(1));
  long rest = big_m;
  for (long p = 2; rest > 1; ++p) {
    if (rest % p != 0) continue;
    long pa = 1;
    while (rest % p == 0) {
      rest /= p;
      pa *= p;
    }
    for (size_t j = 0; j < orders.size(); ++j)
      if (orders[j] % pa == 0) {
        omega *= pow(gammas[j], orders[j] / pa);
        break;
      }
  }
  std::map<std::string, long> dlog;
  NfElem w(K, Rational(1));
  for (long t = 0; t < big_m; ++t) {
    dlog.emplace(scalar_key(w), t);
    w *= omega;
  }
  ZC_ASSERT(w == NfElem(K, Rational(1)) && dlog.size() == static_cast<size_t>(big_m),
            "root of unity generator has the wrong order");
  IntVec logs;
  for (const auto& g : gammas) {
    const auto it = dlog.find(scalar_key(g));
    ZC_ASSERT(it != dlog.end(), "root of unity outside the generated group");
    logs.push_back(Integer(it->second));
  }
  const IntegerLattice ys = integer_kernel_mod({}, {logs}, {Integer(big_m)}, sb.size());
  std::vector<IntVec> gens;
  for (const auto& y : ys.basis()) gens.push_back(combine(sb, y, k));
  return IntegerLattice::generated_by(k, gens);
}

// Continued-fraction approximation p/q of x with |x - p/q| < tol, q <= qmax.
std::optional<Rational> rationalize(const Real& x, const Rational& tol, const Integer& qmax) {
  Rational xq;
  mpfr_get_q(xq.get_mpq_t(), x.get());
  Integer h0 = 0, h1 = 1, k0 = 1, k1 = 0;
  Rational rest = xq;
  for (int iter = 0; iter < 4096; ++iter) {
    Integer a;
    mpz_fdiv_q(a.get_mpz_t(), rest.get_num_mpz_t(), rest.get_den_mpz_t());
    Integer h2 = a * h1 + h0, k2 = a * k1 + k0;
    h0 = h1, h1 = h2, k0 = k1, k1 = k2;
    if (k1 > qmax) return std::nullopt;
    Rational approx(h1, k1);
    approx.canonicalize();
    if (abs(xq - approx) < tol) return approx;
    rest -= a;
    if (rest == 0) return approx;
    rest = 1 / rest;
  }
  return std::nullopt;
}

struct NumericKernel {
  std::vector<size_t> pivot_rows, pivot_cols;
  std::vector<std::vector<Real>> r;  // reduced matrix
  size_t cols = 0;
};

NumericKernel numeric_rref(std::vector<std::vector<Real>> m, size_t cols, mpfr_prec_t prec) {
  NumericKernel out;
  out.cols = cols;
  Real maxabs = Real::from(1L, prec);
  for (const auto& row : m)
    for (const auto& x : row)
      if (abs(x) > maxabs) maxabs = abs(x);
  const Real tau = ldexp(maxabs, -static_cast<long>(prec / 2));
  std::vector<bool> used(m.size(), false);
  for (size_t c = 0; c < cols; ++c) {
    long best = -1;
    for (size_t i = 0; i < m.size(); ++i)
      if (!used[i] && (best < 0 || abs(m[i][c]) > abs(m[best][c]))) best = static_cast<long>(i);
    if (best < 0 || !(abs(m[best][c]) > tau)) continue;
    const size_t p = static_cast<size_t>(best);
    used[p] = true;
    const Real piv = m[p][c];
    for (auto& x : m[p]) x = x / piv;
    for (size_t i = 0; i < m.size(); ++i) {
      if (i == p || m[i][c].is_zero()) continue;
      const Real f = m[i][c];
      for (size_t j = 0; j < cols; ++j) m[i][j] = m[i][j] - f * m[p][j];
    }
    out.pivot_rows.push_back(p);
    out.pivot_cols.push_back(c);
  }
  out.r = std::move(m);
  return out;
}

// Nonsingularity of an interval matrix by interval Gaussian elimination.
bool interval_nonsingular(std::vector<std::vector<Interval>> a) {
  const size_t n = a.size();
  for (size_t c = 0; c < n; ++c) {
    size_t best = c;
    for (size_t i = c + 1; i < n; ++i)
      if (abs(a[i][c].mid()) > abs(a[best][c].mid())) best = i;
    std::swap(a[c], a[best]);
    if (a[c][c].contains_zero()) return false;
    for (size_t i = c + 1; i < n; ++i) {
      const Interval f = a[i][c] / a[c][c];
      for (size_t j = c; j < n; ++j) a[i][j] = a[i][j] - f * a[c][j];
    }
  }
  return true;
}

struct AbsResult {
  IntegerLattice lattice;
  bool certified = false;
  mpfr_prec_t precision = 0;
};

// Lattice of e in L_norm with prod u^e a root of unity, from the
// archimedean log embedding. Elements of the result are verified exactly;
// completeness holds when `certified`.
AbsResult archimedean_part(const std::vector<NfElem>& u, const FieldPtr& K, const IntegerLattice& lnorm,
                           const MultRelOptions& opts) {
  const size_t k = u.size();
  const auto& bb = lnorm.basis();
  const size_t r = bb.size();
  AbsResult res{IntegerLattice(k), false, 0};
  if (r == 0) {
    res.certified = true;
    return res;
  }
  std::vector<IntVec> verified;
  auto verify = [&](const IntVec& y) {
    const NfElem g = power_product(u, combine(bb, y, k), K);
    return root_of_unity_order(g).has_value();
  };
  std::vector<Complex> warm;
  const auto& f = K->coefficients();
  for (mpfr_prec_t prec = opts.start_precision; prec <= opts.max_precision; prec *= 2) {
    res.precision = prec;
    const auto balls = isolate_roots(f, prec, warm);
    if (!balls) continue;
    const size_t d = balls->size();
    std::vector<std::vector<Interval>> g(d, std::vector<Interval>(r, Interval(prec)));
    bool ok = true;
    for (size_t i = 0; i < k && ok; ++i) {
      for (size_t j = 0; j < d; ++j) {
        const auto e = abs_enclosure(u[i].numerators(), u[i].denominator(), (*balls)[j], prec);
        if (!e) {
          ok = false;
          break;
        }
        const Interval lg = log(*e);
        for (size_t l = 0; l < r; ++l)
          if (bb[l][i] != 0) g[j][l] = g[j][l] + lg * Interval::point(Rational(bb[l][i]), prec);
      }
    }
    if (!ok) continue;
    std::vector<std::vector<Real>> mids(d, std::vector<Real>(r, Real(prec)));
    for (size_t j = 0; j < d; ++j)
      for (size_t l = 0; l < r; ++l) mids[j][l] = g[j][l].mid();
    const NumericKernel nk = numeric_rref(mids, r, prec);
    const size_t rho = nk.pivot_cols.size();
    std::vector<bool> is_pivot(r, false);
    for (size_t c : nk.pivot_cols) is_pivot[c] = true;
    Rational tol(1);
    mpq_div_2exp(tol.get_mpq_t(), tol.get_mpq_t(), static_cast<mp_bitcnt_t>(prec / 3));
    Integer qmax(1);
    mpz_mul_2exp(qmax.get_mpz_t(), qmax.get_mpz_t(), static_cast<mp_bitcnt_t>(prec / 6));
    std::vector<IntVec> cands;
    for (size_t fc = 0; fc < r && ok; ++fc) {
      if (is_pivot[fc]) continue;
      std::vector<Rational> y(r, Rational(0));
      y[fc] = 1;
      for (size_t t = 0; t < rho && ok; ++t) {
        const auto q = rationalize(-nk.r[nk.pivot_rows[t]][fc], tol, qmax);
        if (!q) ok = false;
        else y[nk.pivot_cols[t]] = *q;
      }
      if (ok) cands.push_back(primitive_integer_vector(y));
    }
    if (!ok) continue;
    const IntegerLattice s = saturate(IntegerLattice::generated_by(r, cands));
    bool all = s.rank() == r - rho;
    for (const auto& y : s.basis()) {
      if (verify(y)) verified.push_back(y);
      else all = false;
    }
    if (!all) continue;
    std::vector<std::vector<Interval>> sub;
    for (size_t pr : nk.pivot_rows) {
      std::vector<Interval> row;
      for (size_t pc : nk.pivot_cols) row.push_back(g[pr][pc]);
      sub.push_back(std::move(row));
    }
    std::vector<IntVec> gens;
    for (const auto& y : s.basis()) gens.push_back(combine(bb, y, k));
    res.lattice = IntegerLattice::generated_by(k, gens);
    if (interval_nonsingular(sub)) {
      res.certified = true;
      return res;
    }
  }
  // Best effort: everything verified along the way.
  std::vector<IntVec> gens;
  for (const auto& y : verified) gens.push_back(combine(bb, y, k));
  res.lattice = IntegerLattice::generated_by(k, gens);
  return res;
}

}  // namespace

RelationLattice relations(const std::vector<NfElem>& alphas, const MultRelOptions& opts) {
  const FieldPtr K = common_field(alphas);
  const size_t n = alphas.size();
  RelationLattice out;
  out.lattice = IntegerLattice(n);
  std::vector<NfElem> all;
  for (const auto& a : alphas) {
    if (a.is_zero()) throw DomainError("relations of zero");
    all.push_back(a.in_field(K));
  }
  out.alphas = all;

  // Equal entries give the relations e_i - e_first directly.
  std::vector<NfElem> u;
  std::vector<size_t> first, idx(n);
  std::map<std::string, size_t> seen;
  for (size_t i = 0; i < n; ++i) {
    const auto [it, fresh] = seen.emplace(scalar_key(all[i]), u.size());
    if (fresh) {
      u.push_back(all[i]);
      first.push_back(i);
    }
    idx[i] = it->second;
  }
  const size_t k = u.size();

  IntegerLattice core(k);
  std::vector<std::optional<RadicalPower>> rad;
  bool radical = true;
  for (const auto& a : u) {
    rad.push_back(radical_power(a));
    radical = radical && rad.back().has_value();
  }
  if (radical) {
    Integer big_j = 1;
    for (const auto& rp : rad) big_j = lcm_int(big_j, rp->j);
    std::vector<Rational> rs;
    for (const auto& rp : rad) rs.push_back(rp->r);
    std::vector<IntVec> rows = valuation_rows(rs);
    for (auto& row : rows)
      for (size_t i = 0; i < k; ++i) row[i] *= big_j / rad[i]->j;
    core = torsion_refine(u, K, integer_kernel(rows, k));
    out.certified = true;
    out.method = "radical";
  } else {
    std::vector<Rational> norms;
    for (const auto& a : u) norms.push_back(abs(norm(a)));
    const IntegerLattice lnorm = integer_kernel(valuation_rows(norms), k);
    const AbsResult ar = archimedean_part(u, K, lnorm, opts);
    core = torsion_refine(u, K, ar.lattice);
    out.certified = ar.certified;
    out.method = ar.certified ? "archimedean" : "partial";
    out.precision = ar.precision;
  }

  std::vector<IntVec> gens;
  for (size_t i = 0; i < n; ++i)
    if (first[idx[i]] != i) {
      IntVec e(n, Integer(0));
      e[i] = 1;
      e[first[idx[i]]] = -1;
      gens.push_back(std::move(e));
    }
  for (const auto& y : core.basis()) {
    IntVec e(n, Integer(0));
    for (size_t j = 0; j < k; ++j) e[first[j]] = y[j];
    gens.push_back(std::move(e));
  }
  out.lattice = IntegerLattice::generated_by(n, gens);
  for (const auto& e : out.lattice.basis())
    ZC_ASSERT(relation_holds(all, e, K), "reported relation does not hold");
  return out;
}

std::optional<bool> is_trivial_quick(const std::vector<NfElem>& alphas) {
  if (alphas.empty()) return true;
  const FieldPtr K = common_field(alphas);
  std::vector<Rational> norms;
  for (const auto& a : alphas) {
    if (a.is_zero()) throw DomainError("relations of zero");
    norms.push_back(abs(norm(a.in_field(K))));
  }
  const auto rows = valuation_rows(norms);
  if (integer_kernel(rows, alphas.size()).rank() == 0) return true;
  return std::nullopt;
}

}  // namespace zc
