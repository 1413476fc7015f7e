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
#include <optional>
#include <string>
#include <vector>

#include "qunc/ensemble.hpp"
#include "qunc/random.hpp"
#include "qunc/types.hpp"

namespace qunc {

// Lambda(rho) = sum_l K_l rho K_l^dagger on a d-dimensional system.
class KrausChannel {
 public:
  // Throws CompletenessError naming the residual max|sum K^dagger K - I|.
  explicit KrausChannel(std::vector<ComplexMatrix> kraus_ops, double tol = kTolStruct);

  int dim() const { return static_cast<int>(ops_.front().rows()); }
  const std::vector<ComplexMatrix>& ops() const { return ops_; }
  double completeness_residual() const;

 private:
  std::vector<ComplexMatrix> ops_;
};

KrausChannel dephasing_channel(int dim);
KrausChannel unitary_channel(const ComplexMatrix& u);
// P_pi = sum_i |pi(i)><i|
ComplexMatrix permutation_matrix(const std::vector<int>& perm);
KrausChannel permutation_channel(const std::vector<int>& perm);
// first, then second
KrausChannel compose(const KrausChannel& second, const KrausChannel& first);

DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho);

// Kraus form sum_i sqrt(p_il) e^{i theta_il} |g(i)><i| read off a certain
// operation.
struct CertainStructure {
  std::vector<int> g;
  Eigen::MatrixXd weights;     // p_il, d x L
  Eigen::MatrixXd phases;      // theta_il, d x L
  double weight_residual = 0;  // max_i |sum_l p_il - 1|
  double cross_residual = 0;   // max_{i != i'} |sum_l sqrt(p_i'l p_il) e^{i(theta_il - theta_i'l)} <g(i')|g(i)>|
  double reconstruction_residual = 0;
};

// K_l = D_l P_pi.
struct PreservingStructure {
  std::vector<int> permutation;
  std::vector<ComplexVector> diagonals;  // diag(D_l)
  double completeness_residual = 0;      // max|sum D^dagger D - I|
  double spot_check_change = 0;          // largest |U(Lambda(rho)) - U(rho)| seen
};

struct UncertaintyWitness {
  DensityMatrix state;
  double change;  // largest |U(Lambda(state)) - U(state)| over built-in measures
};

struct ChannelVerdict {
  bool is_certain = false;
  bool is_uncertainty_preserving = false;
  std::optional<CertainStructure> certain_structure;
  std::optional<PreservingStructure> preserving_structure;
  // Certain state whose image is uncertain.
  std::optional<DensityMatrix> counterexample;
  std::optional<UncertaintyWitness> witness;
  std::string reason;
};

// Images of all |i><i| must be certain: top eigenvalue >= 1 - tol with an
// eigenvector within tol of a basis vector. A positive verdict carries the
// extracted g, p_il, theta_il; is_uncertainty_preserving is filled from the
// structural D_l P_pi test alone (no spot check).
ChannelVerdict is_certain_operation(const KrausChannel& channel, double tol = 1e-8);

// Structural D_l P_pi test followed by a spot check of every built-in measure
// on random states. A negative verdict carries either a certain-state
// counterexample or a state whose uncertainty changes.
ChannelVerdict is_uncertainty_preserving(const KrausChannel& channel, double tol = 1e-8,
                                         std::uint64_t seed = 2024);

// (1/d) sum_t Q^t rho Q^t^dagger with Q the cyclic shift; the diagonal of the
// output is uniform.
DensityMatrix uniform_diagonal_twirl(const DensityMatrix& rho);

// Fourier states |phi_k> = d^{-1/2} sum_j w^{jk} |j>, each with weight 1/d.
PureStateEnsemble max_coherent_decomposition_of_uniform(int dim);

struct ConstantDiagonalResult {
  ComplexMatrix unitary;       // U
  DensityMatrix conjugated;    // U^dagger rho U, diagonal all 1/d
  int rotations = 0;
};

// Givens sweep pairing the largest and smallest diagonal entries; each
// rotation pins one entry to 1/d, so at most d - 1 are needed.
ConstantDiagonalResult constant_diagonal_unitary(const DensityMatrix& rho);

// Samplers for property tests and benchmarks.

// Certain operation built fiber by fiber: members of g^{-1}(j) receive
// orthonormal columns of a Haar unitary as their (sqrt p, theta) rows, which
// enforces completeness. extra_ops pads the Kraus count beyond the largest
// fiber. When injective is false at least two inputs share an image.
KrausChannel random_certain_channel(int dim, Rng& rng, bool injective = false, int extra_ops = 1);
KrausChannel random_preserving_channel(int dim, int num_ops, Rng& rng);
// Blocks of a Haar isometry; almost surely neither certain nor preserving.
KrausChannel random_generic_channel(int dim, int num_ops, Rng& rng);

}  // namespace qunc
