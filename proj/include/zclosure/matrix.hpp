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

#include <concepts>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "zclosure/errors.hpp"
#include "zclosure/number_field.hpp"
#include "zclosure/rational.hpp"

namespace zc {

/// Exact scalar types the algebra is instantiated for.
template <class F>
concept Scalar = std::same_as<F, Rational> || std::same_as<F, NfElem>;

inline std::string scalar_key(const Rational& q) { return q.get_str(); }
inline std::string scalar_key(const NfElem& a) {
  std::string s = "[";
  for (const auto& c : a.coords()) s += c.get_str() + ",";
  return s + "]";
}

/// Q-coordinates: a single entry for rationals, the power-basis coordinates
/// for number field elements.
inline std::vector<Rational> rational_coords(const Rational& q) { return {q}; }
inline std::vector<Rational> rational_coords(const NfElem& a) { return a.coords(); }

/// Dense row-major matrix over an exact field.
template <class F>
class Matrix {
 public:
  Matrix() = default;
  Matrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, F(0)) {}
  Matrix(size_t rows, size_t cols, std::vector<F> data)
      : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (data_.size() != rows * cols) throw DomainError("matrix data size mismatch");
  }
  Matrix(std::initializer_list<std::initializer_list<F>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    for (const auto& r : rows) {
      if (r.size() != cols_) throw DomainError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(size_t n) {
    Matrix m(n, n);
    for (size_t i = 0; i < n; ++i) m(i, i) = F(1);
    return m;
  }
  static Matrix diagonal(const std::vector<F>& d) {
    Matrix m(d.size(), d.size());
    for (size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  /// Inverse of flatten() for square matrices.
  static Matrix from_flat(size_t n, std::vector<F> v) { return Matrix(n, n, std::move(v)); }

  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  F& operator()(size_t i, size_t j) { return data_[i * cols_ + j]; }
  const F& operator()(size_t i, size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<F>& flatten() const { return data_; }

  Matrix& operator+=(const Matrix& o) {
    check_same_shape(o);
    for (size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same_shape(o);
    for (size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const F& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }
  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const F& s) { return a *= s; }
  friend Matrix operator*(const F& s, Matrix a) { return a *= s; }
  friend Matrix operator-(Matrix a) {
    for (auto& x : a.data_) x = -x;
    return a;
  }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw DomainError("matrix product shape mismatch");
    Matrix r(a.rows_, b.cols_);
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t k = 0; k < a.cols_; ++k) {
        const F& aik = a(i, k);
        if (detail::scalar_is_zero(aik)) continue;
        for (size_t j = 0; j < b.cols_; ++j)
          if (!detail::scalar_is_zero(b(k, j))) r(i, j) += aik * b(k, j);
      }
    return r;
  }
  friend std::vector<F> operator*(const Matrix& a, const std::vector<F>& v) {
    if (a.cols_ != v.size()) throw DomainError("matrix-vector shape mismatch");
    std::vector<F> r(a.rows_, F(0));
    for (size_t i = 0; i < a.rows_; ++i)
      for (size_t j = 0; j < a.cols_; ++j)
        if (!detail::scalar_is_zero(a(i, j)) && !detail::scalar_is_zero(v[j])) r[i] += a(i, j) * v[j];
    return r;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }
  bool is_zero() const {
    for (const auto& x : data_)
      if (!detail::scalar_is_zero(x)) return false;
    return true;
  }
  bool is_diagonal() const {
    for (size_t i = 0; i < rows_; ++i)
      for (size_t j = 0; j < cols_; ++j)
        if (i != j && !detail::scalar_is_zero((*this)(i, j))) return false;
    return true;
  }
  bool is_identity() const { return is_square() && *this == identity(rows_); }
  std::vector<F> diagonal_entries() const {
    std::vector<F> d;
    for (size_t i = 0; i < std::min(rows_, cols_); ++i) d.push_back((*this)(i, i));
    return d;
  }
  std::vector<F> column(size_t j) const {
    std::vector<F> c;
    for (size_t i = 0; i < rows_; ++i) c.push_back((*this)(i, j));
    return c;
  }

  template <class U, class Fn>
  Matrix<U> map(Fn&& fn) const {
    std::vector<U> d;
    d.reserve(data_.size());
    for (const auto& x : data_) d.push_back(fn(x));
    return Matrix<U>(rows_, cols_, std::move(d));
  }

  /// Canonical text key; equal matrices have equal keys.
  std::string key() const {
    std::string s = std::to_string(rows_) + "x" + std::to_string(cols_) + ":";
    for (const auto& x : data_) s += scalar_key(x) + ";";
    return s;
  }

 private:
  void check_same_shape(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw DomainError("matrix shape mismatch");
  }
  size_t rows_ = 0, cols_ = 0;
  std::vector<F> data_;
};

template <class F>
Matrix<F> commutator(const Matrix<F>& a, const Matrix<F>& b) {
  return a * b - b * a;
}

template <class F>
Matrix<F> matrix_pow(const Matrix<F>& m, unsigned e) {
  Matrix<F> r = Matrix<F>::identity(m.rows()), b = m;
  while (e) {
    if (e & 1u) r = r * b;
    e >>= 1u;
    if (e) b = b * b;
  }
  return r;
}

/// p(m) by Horner's rule.
template <class F>
Matrix<F> evaluate(const Poly<F>& p, const Matrix<F>& m) {
  const size_t n = m.rows();
  Matrix<F> acc(n, n);
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * m;
    if (!detail::scalar_is_zero(p.coeffs()[i]))
      for (size_t k = 0; k < n; ++k) acc(k, k) += p.coeffs()[i];
  }
  return acc;
}

template <class F>
std::string to_string(const Matrix<F>& m) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < m.rows(); ++i) {
    os << (i ? ", [" : "[");
    for (size_t j = 0; j < m.cols(); ++j) os << (j ? ", " : "") << to_string(m(i, j));
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace zc
