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

#include <utility>

#include "qunc/types.hpp"

namespace qunc {

struct EigenDecomposition {
  RealVector values;     // descending
  ComplexMatrix vectors; // columns; first non-negligible entry real-positive
};

// Spectral decomposition of a Hermitian matrix. Throws HermiticityError when
// the asymmetry exceeds tol.
EigenDecomposition eigendecompose(const ComplexMatrix& m, double tol = kTolStruct);

// Principal square root. Eigenvalues in [-tol, 0) are clamped to zero; lower
// ones raise PositivityError.
ComplexMatrix matrix_sqrt(const DensityMatrix& rho, double tol = kTolStruct);

// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2, evaluated as the
// squared trace norm of sqrt(rho) sqrt(sigma).
double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma);

// Removes every off-diagonal entry in the reference basis.
DensityMatrix dephase(const DensityMatrix& rho);

enum class Subsystem { A, B };

// Traces out one factor of a dA*dB state and returns the other.
DensityMatrix partial_trace(const DensityMatrix& rho_ab, std::pair<int, int> dims, Subsystem keep);

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b);

// W rho W^dagger for unitary W.
DensityMatrix conjugate(const ComplexMatrix& w, const DensityMatrix& rho);

// Purification on C^d (x) C^r, r = numerical rank, ordered system-major
// (index = i * r + k). Tracing out the ancilla returns rho.
PureState purify(const DensityMatrix& rho);

int numerical_rank(const DensityMatrix& rho, double tol_rank = kTolRank);

// Von Neumann entropy in the given log base; 0 log 0 := 0.
double von_neumann_entropy(const DensityMatrix& rho, double log_base = 2.0);

}  // namespace qunc
