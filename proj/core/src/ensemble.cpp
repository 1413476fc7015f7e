// Copyright 2026 The qunc Authors
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

#include "qunc/ensemble.hpp"

#include <cmath>
#include <sstream>

#include "qunc/errors.hpp"

namespace qunc {

PureStateEnsemble::PureStateEnsemble(std::vector<Member> members, double tol)
    : members_(std::move(members)) {
  if (members_.empty()) throw DimensionError("ensemble must have at least one member");
  double total = 0.0;
  const int d = members_.front().state.dim();
  for (const Member& m : members_) {
    if (m.state.dim() != d) throw DimensionError("ensemble members differ in dimension");
    if (!(m.weight > 0.0) || m.weight > 1.0 + tol) {
      std::ostringstream os;
      os << "ensemble weight " << m.weight << " outside (0, 1]";
      throw InvariantError(os.str());
    }
    total += m.weight;
  }
  if (std::abs(total - 1.0) > tol) {
    std::ostringstream os;
    os << "ensemble weights sum to " << total << ", |sum - 1| exceeds " << tol;
    throw InvariantError(os.str());
  }
}

ComplexMatrix PureStateEnsemble::mixture() const {
  ComplexMatrix m = ComplexMatrix::Zero(dim(), dim());
  for (const Member& member : members_) m += member.weight * member.state.projector();
  return m;
}

}  // namespace qunc
