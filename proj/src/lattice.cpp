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

#include "zclosure/lattice.hpp"

#include <sstream>

#include "zclosure/errors.hpp"
#include "zclosure/linalg.hpp"

namespace zc {

namespace {

bool is_zero_vec(const IntVec& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

// r_i <- s r_i + t r_j, r_j <- u r_i + v r_j on the concatenation of two
// row blocks (the second may be empty).
void combine(IntVec& ri, IntVec& rj, const Integer& s, const Integer& t, const Integer& u, const Integer& v) {
  for (size_t k = 0; k < ri.size(); ++k) {
    Integer a = s * ri[k] + t * rj[k];
    Integer b = u * ri[k] + v * rj[k];
    ri[k] = std::move(a);
    rj[k] = std::move(b);
  }
}

/// Row HNF on the first `ncols` columns of `rows`; the remaining columns are
/// carried along. Returns the rank; rows past it are zero on those columns.
size_t hnf_in_place(std::vector<IntVec>& rows, size_t ncols) {
  size_t r = 0;
  for (size_t col = 0; col < ncols && r < rows.size(); ++col) {
    // gcd-combine every lower row into row r
    size_t first = r;
    while (first < rows.size() && rows[first][col] == 0) ++first;
    if (first == rows.size()) continue;
    std::swap(rows[r], rows[first]);
    for (size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][col] == 0) continue;
      const Integer a = rows[r][col], b = rows[i][col];
      Integer g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
      Integer ag, bg;
      mpz_divexact(ag.get_mpz_t(), a.get_mpz_t(), g.get_mpz_t());
      mpz_divexact(bg.get_mpz_t(), b.get_mpz_t(), g.get_mpz_t());
      // [s t; -b/g a/g] has determinant 1
      combine(rows[r], rows[i], s, t, -bg, ag);
    }
    if (rows[r][col] < 0)
      for (auto& x : rows[r]) x = -x;
    const Integer& piv = rows[r][col];
    for (size_t i = 0; i < r; ++i) {
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), rows[i][col].get_mpz_t(), piv.get_mpz_t());
      if (q != 0)
        for (size_t k = 0; k < rows[i].size(); ++k) rows[i][k] -= q * rows[r][k];
    }
    ++r;
  }
  return r;
}

}  // namespace

std::vector<IntVec> hnf_rows(std::vector<IntVec> rows, size_t ambient) {
  for (const auto& v : rows)
    if (v.size() != ambient) throw DomainError("lattice generator has wrong length");
  size_t r = hnf_in_place(rows, ambient);
  rows.resize(r);
  return rows;
}

HnfTransform hnf_with_transform(const std::vector<IntVec>& rows, size_t ambient) {
  const size_t m = rows.size();
  std::vector<IntVec> aug;
  for (size_t i = 0; i < m; ++i) {
    if (rows[i].size() != ambient) throw DomainError("lattice generator has wrong length");
    IntVec v = rows[i];
    v.resize(ambient + m, Integer(0));
    v[ambient + i] = 1;
    aug.push_back(std::move(v));
  }
  HnfTransform out;
  out.rank = hnf_in_place(aug, ambient);
  for (auto& v : aug) {
    out.h.emplace_back(v.begin(), v.begin() + static_cast<long>(ambient));
    out.u.emplace_back(v.begin() + static_cast<long>(ambient), v.end());
  }
  return out;
}

IntegerLattice IntegerLattice::generated_by(size_t ambient, const std::vector<IntVec>& gens) {
  IntegerLattice L(ambient);
  L.basis_ = hnf_rows(gens, ambient);
  return L;
}

IntegerLattice IntegerLattice::full(size_t ambient) {
  std::vector<IntVec> e;
  for (size_t i = 0; i < ambient; ++i) {
    IntVec v(ambient, Integer(0));
    v[i] = 1;
    e.push_back(std::move(v));
  }
  return generated_by(ambient, e);
}

bool IntegerLattice::contains(const IntVec& v_in) const {
  if (v_in.size() != ambient_) throw DomainError("vector length does not match lattice");
  IntVec v = v_in;
  for (const auto& row : basis_) {
    size_t p = 0;
    while (row[p] == 0) ++p;
    for (size_t j = 0; j < p; ++j)
      if (v[j] != 0) return false;
    if (!mpz_divisible_p(v[p].get_mpz_t(), row[p].get_mpz_t())) return false;
    Integer q;
    mpz_divexact(q.get_mpz_t(), v[p].get_mpz_t(), row[p].get_mpz_t());
    if (q != 0)
      for (size_t k = p; k < ambient_; ++k) v[k] -= q * row[k];
  }
  return is_zero_vec(v);
}

bool IntegerLattice::contains(const IntegerLattice& other) const {
  for (const auto& v : other.basis_)
    if (!contains(v)) return false;
  return true;
}

std::string IntegerLattice::to_string() const {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < basis_.size(); ++i) {
    os << (i ? ", (" : "(");
    for (size_t j = 0; j < ambient_; ++j) os << (j ? "," : "") << basis_[i][j].get_str();
    os << ")";
  }
  os << "]";
  return os.str();
}

IntegerLattice integer_kernel(const std::vector<IntVec>& m, size_t cols) {
  // Kernel vectors v satisfy v^T m^T = 0: transform rows of the HNF of m^T
  // whose reduced part vanishes.
  std::vector<IntVec> mt(cols, IntVec(m.size(), Integer(0)));
  for (size_t i = 0; i < m.size(); ++i) {
    if (m[i].size() != cols) throw DomainError("integer matrix has ragged rows");
    for (size_t j = 0; j < cols; ++j) mt[j][i] = m[i][j];
  }
  HnfTransform t = hnf_with_transform(mt, m.size());
  std::vector<IntVec> ker(t.u.begin() + static_cast<long>(t.rank), t.u.end());
  return IntegerLattice::generated_by(cols, ker);
}

IntegerLattice integer_kernel(const Matrix<Rational>& m) {
  std::vector<IntVec> rows;
  for (size_t i = 0; i < m.rows(); ++i) {
    std::vector<Rational> r;
    for (size_t j = 0; j < m.cols(); ++j) r.push_back(m(i, j));
    Integer d = common_denominator(r);
    IntVec v;
    for (const auto& q : r) {
      Rational s = q * d;
      v.push_back(s.get_num());
    }
    rows.push_back(std::move(v));
  }
  return integer_kernel(rows, m.cols());
}

IntegerLattice integer_kernel_mod(const std::vector<IntVec>& a, const std::vector<IntVec>& b,
                                  const std::vector<Integer>& moduli, size_t cols) {
  if (b.size() != moduli.size()) throw DomainError("one modulus per congruence row required");
  const size_t extra = b.size();
  std::vector<IntVec> rows;
  for (const auto& r : a) {
    IntVec v = r;
    v.resize(cols + extra, Integer(0));
    rows.push_back(std::move(v));
  }
  for (size_t i = 0; i < b.size(); ++i) {
    IntVec v = b[i];
    v.resize(cols + extra, Integer(0));
    v[cols + i] = -moduli[i];
    rows.push_back(std::move(v));
  }
  IntegerLattice big = integer_kernel(rows, cols + extra);
  std::vector<IntVec> proj;
  for (const auto& v : big.basis()) proj.emplace_back(v.begin(), v.begin() + static_cast<long>(cols));
  return IntegerLattice::generated_by(cols, proj);
}

IntVec primitive_integer_vector(const std::vector<Rational>& v) {
  Integer d = common_denominator(v);
  IntVec out;
  Integer g = 0;
  for (const auto& q : v) {
    Rational s = q * d;
    out.push_back(s.get_num());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), out.back().get_mpz_t());
  }
  if (g > 1)
    for (auto& x : out) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
  return out;
}

IntegerLattice saturate(const IntegerLattice& L) {
  const size_t n = L.ambient_dim();
  if (L.rank() == 0) return L;
  if (L.rank() == n) return IntegerLattice::full(n);
  // Orthogonal complement W of span(L); saturation = integer kernel of W.
  Matrix<Rational> b(L.rank(), n);
  for (size_t i = 0; i < L.rank(); ++i)
    for (size_t j = 0; j < n; ++j) b(i, j) = Rational(L.basis()[i][j]);
  Subspace<Rational> perp = kernel(b);
  std::vector<IntVec> w;
  for (const auto& v : perp.basis()) w.push_back(primitive_integer_vector(v));
  return integer_kernel(w, n);
}

bool is_pure(const IntegerLattice& L) { return saturate(L) == L; }

IntegerLattice intersect(const IntegerLattice& a, const IntegerLattice& b) {
  const size_t n = a.ambient_dim();
  if (b.ambient_dim() != n) throw DomainError("lattice dimensions differ");
  if (a.rank() == 0 || b.rank() == 0) return IntegerLattice(n);
  // x * A = y * B  <=>  (x, y) in kernel of [A^T | -B^T]
  const size_t ra = a.rank(), rb = b.rank();
  std::vector<IntVec> m(n, IntVec(ra + rb, Integer(0)));
  for (size_t j = 0; j < n; ++j) {
    for (size_t i = 0; i < ra; ++i) m[j][i] = a.basis()[i][j];
    for (size_t i = 0; i < rb; ++i) m[j][ra + i] = -b.basis()[i][j];
  }
  IntegerLattice k = integer_kernel(m, ra + rb);
  std::vector<IntVec> gens;
  for (const auto& v : k.basis()) {
    IntVec x(n, Integer(0));
    for (size_t i = 0; i < ra; ++i)
      if (v[i] != 0)
        for (size_t j = 0; j < n; ++j) x[j] += v[i] * a.basis()[i][j];
    gens.push_back(std::move(x));
  }
  return IntegerLattice::generated_by(n, gens);
}

}  // namespace zc
