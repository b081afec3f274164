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

#include "zclosure/membership.hpp"

#include "zclosure/linalg.hpp"

namespace zc {

template <class F>
MembershipVerdict member(const GroupDescription<F>& G, const Matrix<F>& g, const ClosureConfig& config) {
  if (g.rows() != G.n || g.cols() != G.n) throw DomainError("matrix size differs from the group");
  if (is_zero(determinant(g))) throw DomainError("singular input");
  MembershipVerdict v;
  for (size_t i = 0; i < G.components.size(); ++i) {
    if (!member_connected(G.lie_algebra, g * inverse(G.components[i]), G.field, config)) continue;
    ZC_ASSERT(!v.member, "element lies in two components");
    v.member = true;
    v.component_index = i;
  }
  return v;
}

template MembershipVerdict member<Rational>(const GroupDescription<Rational>&, const Matrix<Rational>&,
                                            const ClosureConfig&);
template MembershipVerdict member<NfElem>(const GroupDescription<NfElem>&, const Matrix<NfElem>&,
                                          const ClosureConfig&);

}  // namespace zc
