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

#include "zclosure/closure.hpp"

namespace zc {

struct MembershipVerdict {
  bool member = false;
  std::optional<size_t> component_index;
};

/// g in G: g b^-1 in G° for exactly one component representative b.
template <class F>
MembershipVerdict member(const GroupDescription<F>& G, const Matrix<F>& g, const ClosureConfig& config = {});

}  // namespace zc
