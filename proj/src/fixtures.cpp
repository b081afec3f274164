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

#include "zclosure/fixtures.hpp"

#include "zclosure/errors.hpp"

namespace zc {

namespace {

Matrix<Rational> int_matrix(std::initializer_list<std::initializer_list<long>> rows) {
  const size_t n = rows.size();
  std::vector<Rational> v;
  for (const auto& r : rows) {
    if (r.size() != n) throw DomainError("fixture matrix is not square");
    for (long x : r) v.emplace_back(x);
  }
  return Matrix<Rational>::from_flat(n, std::move(v));
}

std::vector<Fixture> build() {
  std::vector<Fixture> fx;
  fx.push_back({"g2", "type G2 acting on a 7-dimensional module",
                {int_matrix({{0, 0, 0, 0, -1, 0, -3},
                             {0, 0, 0, 0, 0, 0, -1},
                             {0, -1, 0, 6, -18, -9, 27},
                             {0, 0, 0, 1, -3, -3, 9},
                             {0, 0, 0, 0, 0, -1, 3},
                             {1, -3, 3, -18, 27, 0, 0},
                             {0, 0, 1, -6, 9, 0, 0}}),
                 int_matrix({{0, 0, 0, 0, 0, 0, -1},
                             {0, 0, 0, 0, -3, 10, 0},
                             {0, 0, 0, 0, 1, -3, 0},
                             {0, 0, 0, -1, 0, 0, 0},
                             {0, 3, 10, 0, 0, 0, 0},
                             {0, 1, 3, 0, 0, 0, 0},
                             {-1, 0, 0, 0, 0, 0, 0}})}});
  fx.push_back({"a3", "type A3 acting on a 6-dimensional module",
                {int_matrix({{0, 0, 0, 0, 0, -1},
                             {0, 0, -1, 0, 3, 0},
                             {0, 0, 0, 0, 1, 0},
                             {0, -1, 3, 3, -9, 0},
                             {0, 0, 0, 1, -3, 0},
                             {-1, 0, 0, 0, 0, 0}}),
                 int_matrix({{0, -3, 1, 0, 0, 0},
                             {0, -1, 0, 0, 0, 0},
                             {1, -3, 0, 0, 0, 0},
                             {0, 0, 0, 0, 0, 1},
                             {0, 0, 0, 3, -1, 3},
                             {0, 0, 0, 1, 0, 0}}),
                 int_matrix({{0, 0, 0, -1, 0, 0},
                             {-1, -3, 0, -9, 0, 0},
                             {0, 0, 0, 0, -1, -3},
                             {0, 1, 0, 3, 0, 0},
                             {0, 0, 0, 0, 0, 1},
                             {0, 0, -1, 0, -3, 0}})}});
  fx.push_back({"b2", "type B2 on two 4-dimensional blocks, second generator composed with the block swap",
                {int_matrix({{0, 0, -1, 0, 0, 0, 0, 0},
                             {-1, 0, 0, -3, 0, 0, 0, 0},
                             {0, 0, 0, 1, 0, 0, 0, 0},
                             {0, -1, -3, 0, 0, 0, 0, 0},
                             {0, 0, 0, 0, 0, 0, -1, 0},
                             {0, 0, 0, 0, -1, 0, 0, -3},
                             {0, 0, 0, 0, 0, 0, 0, 1},
                             {0, 0, 0, 0, 0, -1, -3, 0}}),
                 int_matrix({{0, 0, 0, 0, -3, 9, -1, 3},
                             {0, 0, 0, 0, -1, 3, 0, 0},
                             {0, 0, 0, 0, 0, -3, 0, 1},
                             {0, 0, 0, 0, 0, -1, 0, 0},
                             {-3, 9, -1, 3, 0, 0, 0, 0},
                             {-1, 3, 0, 0, 0, 0, 0, 0},
                             {0, -3, 0, 1, 0, 0, 0, 0},
                             {0, -1, 0, 0, 0, 0, 0, 0}})}});
  return fx;
}

}  // namespace

const std::vector<Fixture>& fixtures() {
  static const std::vector<Fixture> fx = build();
  return fx;
}

const Fixture& fixture(const std::string& name) {
  for (const auto& f : fixtures())
    if (f.name == name) return f;
  throw DomainError("unknown fixture: " + name);
}

}  // namespace zc
