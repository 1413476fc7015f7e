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

#include <cstdint>
#include <random>
#include <variant>

#include "qunc/types.hpp"

namespace qunc {

using Rng = std::mt19937_64;

PureState random_pure_state(int dim, Rng& rng);

// Ginibre ensemble: G G^dagger / Tr(G G^dagger) with G a dim x rank complex
// Gaussian matrix. rank == dim gives the Hilbert-Schmidt measure.
DensityMatrix random_mixed_state(int dim, Rng& rng);
DensityMatrix random_rank_limited_state(int dim, int rank, Rng& rng);

// Haar-distributed unitary via QR with the R-diagonal phase fix.
ComplexMatrix random_unitary(int dim, Rng& rng);

// rows x cols matrix with orthonormal columns (first cols of a Haar unitary).
ComplexMatrix random_isometry(int rows, int cols, Rng& rng);

// Point on the probability simplex, uniform (flat Dirichlet).
std::vector<double> random_simplex_point(int dim, Rng& rng);

enum class SampleKind { haar_pure, ginibre_mixed, haar_unitary, rank_limited };

using Sample = std::variant<PureState, DensityMatrix, ComplexMatrix>;

// Deterministic for a fixed seed. rank is only read for rank_limited and must
// satisfy 1 <= rank <= dim.
Sample sample_random(SampleKind kind, int dim, std::uint64_t seed, int rank = 1);

// Seed for sub-stream k of a base seed (splitmix64 mixing).
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream);

}  // namespace qunc
