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

#include "qunc/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

#include "qunc/errors.hpp"

namespace qunc {

namespace {

// Makes the first entry with modulus above the threshold real-positive.
void fix_phase(Eigen::Ref<ComplexVector> v) {
  const double scale = v.cwiseAbs().maxCoeff();
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const double a = std::abs(v(i));
    if (a > 1e-12 * scale) {
      v *= std::conj(v(i)) / a;
      return;
    }
  }
}

}  // namespace

EigenDecomposition eigendecompose(const ComplexMatrix& m, double tol) {
  const double asym = hermitian_defect(m);
  if (asym > tol) {
    std::ostringstream os;
    os << "eigendecompose requires a Hermitian matrix: max asymmetry " << asym << " exceeds "
       << tol;
    throw HermiticityError(os.str());
  }
  const ComplexMatrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(h);
  const Eigen::Index n = h.rows();
  EigenDecomposition out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  // Eigen returns ascending order.
  for (Eigen::Index k = 0; k < n; ++k) {
    out.values(k) = es.eigenvalues()(n - 1 - k);
    out.vectors.col(k) = es.eigenvectors().col(n - 1 - k);
    fix_phase(out.vectors.col(k));
  }
  return out;
}

ComplexMatrix matrix_sqrt(const DensityMatrix& rho, double tol) {
  EigenDecomposition ed = eigendecompose(rho.matrix());
  const Eigen::Index n = ed.values.size();
  if (ed.values(n - 1) < -tol) {
    std::ostringstream os;
    os << "matrix_sqrt: eigenvalue " << ed.values(n - 1) << " below -" << tol;
    throw PositivityError(os.str());
  }
  // Eigenvalues within solver roundoff of zero are zero; their square roots
  // would otherwise leak O(sqrt(eps)) into the result.
  const double floor = 32.0 * static_cast<double>(n) * std::numeric_limits<double>::epsilon();
  RealVector roots = ed.values.unaryExpr([floor](double l) { return l <= floor ? 0.0 : std::sqrt(l); });
  ComplexMatrix s = ed.vectors * roots.cast<Complex>().asDiagonal() * ed.vectors.adjoint();
  return 0.5 * (s + s.adjoint());
}

double fidelity(const DensityMatrix& rho, const DensityMatrix& sigma) {
  if (rho.dim() != sigma.dim()) {
    std::ostringstream os;
    os << "fidelity: dimension mismatch " << rho.dim() << " vs " << sigma.dim();
    throw DimensionError(os.str());
  }
  const ComplexMatrix product = matrix_sqrt(rho) * matrix_sqrt(sigma);
  Eigen::JacobiSVD<ComplexMatrix> svd(product);
  const double root = svd.singularValues().sum();
  return std::clamp(root * root, 0.0, 1.0);
}

DensityMatrix dephase(const DensityMatrix& rho) {
  ComplexMatrix m = ComplexMatrix::Zero(rho.dim(), rho.dim());
  m.diagonal() = rho.matrix().diagonal().real().cast<Complex>();
  return DensityMatrix::from_trusted(std::move(m));
}

DensityMatrix partial_trace(const DensityMatrix& rho_ab, std::pair<int, int> dims,
                            Subsystem keep) {
  const auto [da, db] = dims;
  if (da < 1 || db < 1 || da * db != rho_ab.dim()) {
    std::ostringstream os;
    os << "partial_trace: " << da << " x " << db << " does not factor dimension "
       << rho_ab.dim();
    throw DimensionError(os.str());
  }
  const ComplexMatrix& m = rho_ab.matrix();
  if (keep == Subsystem::A) {
    ComplexMatrix out = ComplexMatrix::Zero(da, da);
    for (int k = 0; k < db; ++k) {
      for (int i = 0; i < da; ++i) {
        for (int j = 0; j < da; ++j) out(i, j) += m(i * db + k, j * db + k);
      }
    }
    return DensityMatrix::from_trusted(std::move(out));
  }
  ComplexMatrix out = ComplexMatrix::Zero(db, db);
  for (int k = 0; k < da; ++k) {
    out += m.block(k * db, k * db, db, db);
  }
  return DensityMatrix::from_trusted(std::move(out));
}

DensityMatrix tensor(const DensityMatrix& a, const DensityMatrix& b) {
  const int da = a.dim();
  const int db = b.dim();
  ComplexMatrix out(da * db, da * db);
  for (int i = 0; i < da; ++i) {
    for (int j = 0; j < da; ++j) out.block(i * db, j * db, db, db) = a(i, j) * b.matrix();
  }
  return DensityMatrix::from_trusted(std::move(out));
}

DensityMatrix conjugate(const ComplexMatrix& w, const DensityMatrix& rho) {
  if (w.rows() != rho.dim() || w.cols() != rho.dim()) {
    throw DimensionError("conjugate: operator and state dimensions differ");
  }
  return DensityMatrix::from_trusted(w * rho.matrix() * w.adjoint());
}

int numerical_rank(const DensityMatrix& rho, double tol_rank) {
  const EigenDecomposition ed = eigendecompose(rho.matrix());
  return static_cast<int>((ed.values.array() > tol_rank).count());
}

PureState purify(const DensityMatrix& rho) {
  const EigenDecomposition ed = eigendecompose(rho.matrix());
  const int d = rho.dim();
  const int r = std::max(1, static_cast<int>((ed.values.array() > kTolRank).count()));
  ComplexVector psi = ComplexVector::Zero(d * r);
  for (int k = 0; k < r; ++k) {
    const double w = std::sqrt(std::max(ed.values(k), 0.0));
    for (int i = 0; i < d; ++i) psi(i * r + k) = w * ed.vectors(i, k);
  }
  return PureState::normalized(psi);
}

double von_neumann_entropy(const DensityMatrix& rho, double log_base) {
  Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(rho.matrix(), Eigen::EigenvaluesOnly);
  double s = 0.0;
  for (double lambda : es.eigenvalues()) {
    if (lambda > 0.0) s -= lambda * std::log(lambda);
  }
  return s / std::log(log_base);
}

}  // namespace qunc
