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

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include <Eigen/Dense>

namespace qunc {

using Complex = std::complex<double>;
using ComplexMatrix = Eigen::MatrixXcd;
using ComplexVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

// Slack allowed on type invariants (Hermiticity, trace, positivity, norms).
inline constexpr double kTolStruct = 1e-9;
// Eigenvalues at or below this count as zero when computing numerical rank.
inline constexpr double kTolRank = 1e-10;

// Largest entrywise modulus of m - m^dagger.
double hermitian_defect(const ComplexMatrix& m);

// Largest entrywise modulus of a - b.
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);

// Measurement outcome distribution over the reference basis. Entries in
// [-tol, 0) are clamped to zero; the total must be 1 within tol.
class ProbabilityVector {
 public:
  explicit ProbabilityVector(std::vector<double> probs, double tol = kTolStruct);

  static ProbabilityVector uniform(std::size_t dim);
  static ProbabilityVector certain(std::size_t dim, std::size_t index);

  std::size_t size() const { return probs_.size(); }
  double operator[](std::size_t i) const { return probs_[i]; }
  std::span<const double> values() const { return probs_; }

 private:
  std::vector<double> probs_;
};

class PureState {
 public:
  // Validates |sum |psi_i|^2 - 1| <= tol.
  explicit PureState(ComplexVector amplitudes, double tol = kTolStruct);

  // Rescales a nonzero vector to unit norm.
  static PureState normalized(const ComplexVector& v);
  static PureState basis(int dim, int index);

  int dim() const { return static_cast<int>(amps_.size()); }
  const ComplexVector& amplitudes() const { return amps_; }
  Complex operator[](int i) const { return amps_(i); }

  // |psi_i|^2 in the reference basis.
  ProbabilityVector probabilities() const;
  ComplexMatrix projector() const;

 private:
  ComplexVector amps_;
};

// Positive semidefinite, unit-trace, Hermitian d x d matrix. The stored matrix
// is always exactly Hermitian.
class DensityMatrix {
 public:
  // Validates all three invariants against tol; throws InvariantError naming
  // the violated bound.
  explicit DensityMatrix(ComplexMatrix m, double tol = kTolStruct);

  // For matrices that are valid by construction (products of library
  // operations). Hermitizes but does not check.
  static DensityMatrix from_trusted(ComplexMatrix m);

  static DensityMatrix from_pure(const PureState& psi);
  static DensityMatrix maximally_mixed(int dim);
  static DensityMatrix certain(int dim, int index);
  static DensityMatrix diagonal(std::span<const double> probs, double tol = kTolStruct);

  int dim() const { return static_cast<int>(m_.rows()); }
  const ComplexMatrix& matrix() const { return m_; }
  Complex operator()(int i, int j) const { return m_(i, j); }

  ProbabilityVector diagonal_probabilities() const;
  double max_diagonal() const;
  double purity() const;

 private:
  struct Trusted {};
  DensityMatrix(ComplexMatrix m, Trusted);

  ComplexMatrix m_;
};

}  // namespace qunc
