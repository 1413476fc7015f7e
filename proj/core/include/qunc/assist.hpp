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
#include <functional>
#include <optional>
#include <string>

#include "qunc/ensemble.hpp"
#include "qunc/measures.hpp"
#include "qunc/types.hpp"

namespace qunc {

// Ensemble {p_k, psi_k} with sqrt(p_k) psi_k = sum_j mix(k, j) sqrt(lambda_j) e_j,
// from the spectral decomposition of rho restricted to its numerical rank r.
// mix must be m x r with orthonormal columns (1e-9); zero-weight members are
// dropped.
PureStateEnsemble decomposition_from_unitary(const DensityMatrix& rho, const ComplexMatrix& mix);

// sum_k p_k f(|<i|psi_k>|^2).
double average_coherence(const SymmetricConcaveFunction& f, const PureStateEnsemble& ensemble);

struct AssistConfig {
  int ensemble_size = 0;          // 0: r^2 capped at 16, never below r
  int restarts = 32;
  int max_iterations = 5000;      // per restart
  int stall_limit = 200;          // consecutive proposals without progress
  double improvement_tol = 1e-9;
  double initial_angle = 0.5;
  double min_angle = 1e-5;
  double initial_temperature = 1e-3;
  double cooling = 0.995;
  std::uint64_t seed = 0;
  // Optional m x r starting point for restart 0; a shorter isometry is padded
  // with zero rows.
  std::optional<ComplexMatrix> warm_start;
  // Called with every ensemble the search accepts.
  std::function<void(const PureStateEnsemble&)> visitor;
};

// Lower bound on the coherence of assistance.
struct CaResult {
  std::string measure;
  double value = 0.0;
  double uncertainty = 0.0;
  double gap_to_u = 0.0;  // uncertainty - value
  PureStateEnsemble best_ensemble;
  ComplexMatrix best_mixing;
  int ensemble_size = 0;
  int restarts_used = 0;
  bool converged = false;
};

// Maximizes average_coherence over left-unitary mixings of the eigen-ensemble
// by simulated annealing with random two-row rotations. Restarts are
// independent and reduced by maximum in restart order, so a fixed seed gives
// a fixed result and adding restarts never lowers the value.
CaResult coherence_of_assistance(const SymmetricConcaveFunction& f, const DensityMatrix& rho,
                                 const AssistConfig& cfg = {});

struct SandwichReport {
  std::string measure;
  std::string coherence_measure;
  double coherence = 0.0;
  double assisted = 0.0;
  double uncertainty = 0.0;
  double lower_margin = 0.0;  // assisted - coherence
  double upper_margin = 0.0;  // uncertainty - assisted
  bool ok = false;            // both margins >= -1e-6
};

// Coherence is the pinned convex extension for f: skew information for
// "var", relative entropy of coherence for "entropy", geometric coherence for
// "fidelity". Throws Error for any other function.
SandwichReport sandwich_check(const SymmetricConcaveFunction& f, const DensityMatrix& rho,
                              const CaResult& ca, const GeometricConfig& geometric = {});

// Pinned coherence C(rho) for one of the built-in functions.
double pinned_coherence(const SymmetricConcaveFunction& f, const DensityMatrix& rho,
                        const GeometricConfig& geometric = {});

}  // namespace qunc
