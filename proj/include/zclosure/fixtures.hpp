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

#include <string>
#include <vector>

#include "zclosure/matrix.hpp"

namespace zc {

struct Fixture {
  std::string name;
  std::string description;
  std::vector<Matrix<Rational>> generators;
};

/// Built-in generator sets: "g2" (two 7x7), "a3" (three 6x6), "b2" (two
/// 8x8, the second already multiplied by the block swap).
const std::vector<Fixture>& fixtures();

/// Throws DomainError for an unknown name.
const Fixture& fixture(const std::string& name);

}  // namespace zc
