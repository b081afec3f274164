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

// Small helpers shared by the unit tests.

#pragma once

#include <initializer_list>
#include <random>
#include <vector>

#include "zclosure/lattice.hpp"
#include "zclosure/matrix.hpp"

namespace zc::testing {

using QMatrix = Matrix<Rational>;

inline QMatrix qm(std::initializer_list<std::initializer_list<long>> rows) {
  std::vector<Rational> d;
  size_t r = 0, c = 0;
  for (const auto& row : rows) {
    c = row.size();
    ++r;
    for (long x : row) d.emplace_back(x);
  }
  return QMatrix(r, c, std::move(d));
}

inline QMatrix qdiag(std::initializer_list<Rational> d) { return QMatrix::diagonal(std::vector<Rational>(d)); }

inline IntVec iv(std::initializer_list<long> xs) {
  IntVec v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

inline QMatrix random_int_matrix(std::mt19937_64& rng, size_t n, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  QMatrix m(n, n);
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) m(i, j) = Rational(d(rng));
  return m;
}

inline IntVec random_int_vector(std::mt19937_64& rng, size_t n, long bound) {
  std::uniform_int_distribution<long> d(-bound, bound);
  IntVec v;
  for (size_t i = 0; i < n; ++i) v.emplace_back(d(rng));
  return v;
}

}  // namespace zc::testing
