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

#include "qunc/types.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "qunc/errors.hpp"

namespace qunc {

double hermitian_defect(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) {
    throw DimensionError("matrix is not square");
  }
  return (m - m.adjoint()).cwiseAbs().maxCoeff();
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError("shape mismatch");
  }
  if (a.size() == 0) return 0.0;
  return (a - b).cwiseAbs().maxCoeff();
}

ProbabilityVector::ProbabilityVector(std::vector<double> probs, double tol)
    : probs_(std::move(probs)) {
  if (probs_.empty()) {
    throw DimensionError("probability vector must have at least one entry");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < probs_.size(); ++i) {
    double& p = probs_[i];
    if (!std::isfinite(p) || p < -tol) {
      std::ostringstream os;
      os << "probability p[" << i << "] = " << p << " violates p >= -" << tol;
      throw InvariantError(os.str());
    }
    if (p < 0.0) p = 0.0;
    total += p;
  }
  if (std::abs(total - 1.0) > tol) {
    std::ostringstream os;
    os << "probabilities sum to " << total << ", |sum - 1| exceeds " << tol;
    throw InvariantError(os.str());
  }
}

ProbabilityVector ProbabilityVector::uniform(std::size_t dim) {
  return ProbabilityVector(std::vector<double>(dim, 1.0 / static_cast<double>(dim)));
}

ProbabilityVector ProbabilityVector::certain(std::size_t dim, std::size_t index) {
  std::vector<double> p(dim, 0.0);
  p.at(index) = 1.0;
  return ProbabilityVector(std::move(p));
}

PureState::PureState(ComplexVector amplitudes, double tol) : amps_(std::move(amplitudes)) {
  if (amps_.size() == 0) {
    throw DimensionError("pure state must have dimension >= 1");
  }
  const double norm2 = amps_.squaredNorm();
  if (!std::isfinite(norm2) || std::abs(norm2 - 1.0) > tol) {
    std::ostringstream os;
    os << "pure state norm^2 = " << norm2 << ", |norm^2 - 1| exceeds " << tol;
    throw InvariantError(os.str());
  }
}

PureState PureState::normalized(const ComplexVector& v) {
  const double n = v.norm();
  if (!(n > 0.0)) {
    throw InvariantError("cannot normalize a zero vector");
  }
  return PureState(v / n);
}

PureState PureState::basis(int dim, int index) {
  ComplexVector v = ComplexVector::Zero(dim);
  v(index) = 1.0;
  return PureState(std::move(v));
}

ProbabilityVector PureState::probabilities() const {
  std::vector<double> p(amps_.size());
  for (Eigen::Index i = 0; i < amps_.size(); ++i) p[i] = std::norm(amps_(i));
  return ProbabilityVector(std::move(p));
}

ComplexMatrix PureState::projector() const { return amps_ * amps_.adjoint(); }

DensityMatrix::DensityMatrix(ComplexMatrix m, double tol) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw DimensionError("density matrix must be square with dim >= 1");
  }
  if (!m.allFinite()) {
    throw InvariantError("density matrix has non-finite entries");
  }
  const double asym = hermitian_defect(m);
  if (asym > tol) {
    std::ostringstream os;
    os << "Hermiticity violated: max |rho - rho^dagger| = " << asym << " exceeds " << tol;
    throw HermiticityError(os.str());
  }
  ComplexMatrix h = 0.5 * (m + m.adjoint());
  const double tr = h.trace().real();
  if (std::abs(tr - 1.0) > tol) {
    std::ostringstream os;
    os << "unit trace violated: Tr rho = " << tr << ", |Tr rho - 1| exceeds " << tol;
    throw InvariantError(os.str());
  }
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h, Eigen::EigenvaluesOnly);
  const double min_eig = es.eigenvalues().minCoeff();
  if (min_eig < -tol) {
    std::ostringstream os;
    os << "positivity violated: min eigenvalue = " << min_eig << " below -" << tol;
    throw PositivityError(os.str());
  }
  m_ = std::move(h);
}

DensityMatrix::DensityMatrix(ComplexMatrix m, Trusted) : m_(0.5 * (m + m.adjoint())) {}

DensityMatrix DensityMatrix::from_trusted(ComplexMatrix m) {
  if (m.rows() == 0 || m.rows() != m.cols()) {
    throw DimensionError("density matrix must be square with dim >= 1");
  }
  return DensityMatrix(std::move(m), Trusted{});
}

DensityMatrix DensityMatrix::from_pure(const PureState& psi) {
  return DensityMatrix(psi.projector(), Trusted{});
}

DensityMatrix DensityMatrix::maximally_mixed(int dim) {
  return DensityMatrix(ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim), Trusted{});
}

DensityMatrix DensityMatrix::certain(int dim, int index) {
  ComplexMatrix m = ComplexMatrix::Zero(dim, dim);
  m(index, index) = 1.0;
  return DensityMatrix(std::move(m), Trusted{});
}

DensityMatrix DensityMatrix::diagonal(std::span<const double> probs, double tol) {
  ProbabilityVector p(std::vector<double>(probs.begin(), probs.end()), tol);
  const int d = static_cast<int>(p.size());
  ComplexMatrix m = ComplexMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) m(i, i) = p[i];
  return DensityMatrix(std::move(m), Trusted{});
}

ProbabilityVector DensityMatrix::diagonal_probabilities() const {
  std::vector<double> p(m_.rows());
  for (Eigen::Index i = 0; i < m_.rows(); ++i) p[i] = m_(i, i).real();
  // Trusted matrices may carry roundoff in the trace; renormalize.
  double total = 0.0;
  for (double& x : p) {
    x = std::max(x, 0.0);
    total += x;
  }
  for (double& x : p) x /= total;
  return ProbabilityVector(std::move(p));
}

double DensityMatrix::max_diagonal() const { return m_.diagonal().real().maxCoeff(); }

double DensityMatrix::purity() const { return m_.cwiseAbs2().sum(); }

}  // namespace qunc
