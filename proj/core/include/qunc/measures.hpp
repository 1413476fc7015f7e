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

#include <array>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qunc/types.hpp"

namespace qunc {

/// A nonnegative, permutation-symmetric, concave function on the probability
/// simplex that vanishes exactly on the vertices. Every uncertainty measure,
/// coherence measure and coherence of assistance in this library is generated
/// by one of these.
class SymmetricConcaveFunction {
 public:
  using Eval = std::function<double(std::span<const double>)>;

  SymmetricConcaveFunction(std::string name, Eval eval,
                           std::optional<double> log_base = std::nullopt);

  const std::string& name() const { return name_; }
  std::optional<double> log_base() const { return log_base_; }

  double operator()(std::span<const double> p) const { return eval_(p); }
  double operator()(const ProbabilityVector& p) const { return eval_(p.values()); }

 private:
  std::string name_;
  Eval eval_;
  std::optional<double> log_base_;
};

// 1 - sum p_i^2
SymmetricConcaveFunction variance_function();
// -sum p_i log p_i, with 0 log 0 := 0
SymmetricConcaveFunction entropy_function(double log_base = 2.0);
// 1 - max_i p_i
SymmetricConcaveFunction max_function();

struct AxiomCheck {
  bool ok = true;
  std::string failure;  // first violated axiom, empty when ok
};

// Samples the four function axioms (vertex nullity, permutation symmetry,
// concavity, strict positivity off the vertices) over d in {2, 3, 4}.
AxiomCheck check_axioms(const SymmetricConcaveFunction& f, std::uint64_t seed = 7,
                        int samples = 200);

// Name-indexed set of functions. Built-ins are "var", "entropy" and "fidelity"
// (aliases "ent", "max"). Registering a function runs check_axioms first.
class FunctionCatalog {
 public:
  static FunctionCatalog with_builtins(double log_base = 2.0);

  // Throws InvariantError naming the failed axiom.
  void add(SymmetricConcaveFunction f);

  const SymmetricConcaveFunction& get(std::string_view name) const;
  bool contains(std::string_view name) const;
  std::vector<std::string> names() const;

  static std::string canonical_name(std::string_view name);

 private:
  std::vector<SymmetricConcaveFunction> functions_;
};

// f(diag rho).
double uncertainty(const SymmetricConcaveFunction& f, const DensityMatrix& rho);

struct MeasureReport {
  std::string measure;
  double total = 0.0;
  double quantum = 0.0;
  double classical = 0.0;
  std::optional<double> log_base;
  std::string decomposition;
};

enum class VarianceSplit { skew, linear_entropy };

// Skew information 1 - sum_i <i|sqrt(rho)|i>^2.
double skew_information(const DensityMatrix& rho);

// Variance-based uncertainty 1 - sum rho_ii^2, split either into skew
// information plus remainder, or linear entropy plus dephasing gap.
MeasureReport u_var(const DensityMatrix& rho, VarianceSplit split = VarianceSplit::skew);
std::array<MeasureReport, 2> u_var_both(const DensityMatrix& rho);

// Shannon entropy of the diagonal = von Neumann entropy + relative entropy of
// coherence. Throws InvariantError unless log_base > 1.
MeasureReport u_entropy(const DensityMatrix& rho, double log_base = 2.0);

struct GeometricConfig {
  int restarts = 16;
  int max_iterations = 3000;
  double initial_step = 1.0;   // multiplicative-weights learning rate
  double step_growth = 1.5;    // after an accepted step
  double step_shrink = 0.5;    // after a rejected step
  double min_step = 1e-12;     // convergence once the rate collapses
  double fd_step = 1e-6;       // central-difference step
  double uniform_mix = 0.5;    // smoothing of the diag(rho) start
  std::uint64_t seed = 0;
};

struct GeometricCoherenceResult {
  double value = 0.0;       // 1 - best fidelity found
  double fidelity = 0.0;    // best max_{sigma diagonal} F(rho, sigma)
  ProbabilityVector sigma = ProbabilityVector::uniform(1);
  bool converged = false;
  int iterations = 0;       // summed over restarts
};

// 1 - max over diagonal sigma of F(rho, sigma). The root fidelity is concave
// in sigma, so multiplicative-weights ascent from each start reaches the
// global maximum up to the convergence threshold; certain states are always
// included as candidates so the result never exceeds 1 - max_i rho_ii.
GeometricCoherenceResult geometric_coherence(const DensityMatrix& rho,
                                             const GeometricConfig& cfg = {});

// Closed form 1 - max_i rho_ii.
double geometric_uncertainty(const DensityMatrix& rho);
// Definition route: 1 - max over certain states of the fidelity.
double geometric_uncertainty_by_fidelity(const DensityMatrix& rho);

// total = 1 - max rho_ii, quantum = geometric coherence, classical = total -
// quantum.
MeasureReport u_geometric(const DensityMatrix& rho, const GeometricConfig& cfg = {});

// x majorizes y: sorted partial sums of x dominate those of y (tol 1e-9) and
// totals agree.
bool majorizes(const ProbabilityVector& x, const ProbabilityVector& y, double tol = 1e-9);

// |rho_ii - 1/d| <= tol for all i.
bool is_maximally_uncertain(const DensityMatrix& rho, double tol = 1e-9);

}  // namespace qunc
