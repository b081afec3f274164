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

#include <optional>
#include <vector>

#include "zclosure/real.hpp"
#include "zclosure/rational.hpp"

namespace zc {

/// A disk known to contain exactly one root of a polynomial.
struct RootBall {
  Complex center;
  Real radius;
};

/// Inclusion disks for all complex roots of a squarefree integer polynomial
/// (lowest degree first), computed by Aberth iteration at `prec` bits and
/// certified with Weierstrass-correction radii. nullopt when the disks are
/// not pairwise disjoint at this precision. `warm` (if non-empty) holds
/// starting approximations and receives the refined ones.
std::optional<std::vector<RootBall>> isolate_roots(const std::vector<Integer>& f, mpfr_prec_t prec,
                                                   std::vector<Complex>& warm);

/// Enclosure of |num(z)| / den over the disk, or nullopt if the enclosure
/// touches zero.
std::optional<Interval> abs_enclosure(const std::vector<Integer>& num, const Integer& den, const RootBall& ball,
                                      mpfr_prec_t prec);

}  // namespace zc
