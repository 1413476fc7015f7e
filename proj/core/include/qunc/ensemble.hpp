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

#pragma once

#include <vector>

#include "qunc/types.hpp"

namespace qunc {

// Weighted pure-state decomposition sum_k p_k |psi_k><psi_k|.
class PureStateEnsemble {
 public:
  struct Member {
    double weight;
    PureState state;
  };

  // Weights must lie in (0, 1] and sum to 1 within tol.
  explicit PureStateEnsemble(std::vector<Member> members, double tol = kTolStruct);

  int dim() const { return members_.front().state.dim(); }
  std::size_t size() const { return members_.size(); }
  const std::vector<Member>& members() const { return members_; }

  ComplexMatrix mixture() const;

 private:
  std::vector<Member> members_;
};

}  // namespace qunc
