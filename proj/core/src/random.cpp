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

#include "qunc/random.hpp"

#include <cmath>
#include <sstream>

#include <Eigen/QR>

#include "qunc/errors.hpp"

namespace qunc {

namespace {

ComplexMatrix ginibre(int rows, int cols, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  ComplexMatrix g(rows, cols);
  for (int j = 0; j < cols; ++j) {
    for (int i = 0; i < rows; ++i) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  }
  return g;
}

void require_dim(int dim) {
  if (dim < 1) throw DimensionError("dimension must be >= 1");
}

}  // namespace

PureState random_pure_state(int dim, Rng& rng) {
  require_dim(dim);
  return PureState::normalized(ginibre(dim, 1, rng).col(0));
}

DensityMatrix random_mixed_state(int dim, Rng& rng) { return random_rank_limited_state(dim, dim, rng); }

DensityMatrix random_rank_limited_state(int dim, int rank, Rng& rng) {
  require_dim(dim);
  if (rank < 1 || rank > dim) {
    std::ostringstream os;
    os << "rank " << rank << " outside [1, " << dim << "]";
    throw DimensionError(os.str());
  }
  const ComplexMatrix g = ginibre(dim, rank, rng);
  ComplexMatrix m = g * g.adjoint();
  m /= m.trace().real();
  return DensityMatrix::from_trusted(std::move(m));
}

ComplexMatrix random_unitary(int dim, Rng& rng) {
  require_dim(dim);
  const ComplexMatrix g = ginibre(dim, dim, rng);
  Eigen::HouseholderQR<ComplexMatrix> qr(g);
  ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(dim, dim);
  const ComplexMatrix r = qr.matrixQR().triangularView<Eigen::Upper>();
  for (int j = 0; j < dim; ++j) {
    const Complex rjj = r(j, j);
    const double a = std::abs(rjj);
    if (a > 0.0) q.col(j) *= rjj / a;
  }
  return q;
}

ComplexMatrix random_isometry(int rows, int cols, Rng& rng) {
  if (cols < 1 || rows < cols) {
    throw DimensionError("isometry needs rows >= cols >= 1");
  }
  return random_unitary(rows, rng).leftCols(cols);
}

std::vector<double> random_simplex_point(int dim, Rng& rng) {
  require_dim(dim);
  std::exponential_distribution<double> expo(1.0);
  std::vector<double> p(dim);
  double total = 0.0;
  for (double& x : p) {
    x = expo(rng);
    total += x;
  }
  for (double& x : p) x /= total;
  return p;
}

Sample sample_random(SampleKind kind, int dim, std::uint64_t seed, int rank) {
  Rng rng(seed);
  switch (kind) {
    case SampleKind::haar_pure:
      return random_pure_state(dim, rng);
    case SampleKind::ginibre_mixed:
      return random_mixed_state(dim, rng);
    case SampleKind::haar_unitary:
      return random_unitary(dim, rng);
    case SampleKind::rank_limited:
      return random_rank_limited_state(dim, rank, rng);
  }
  throw Error("unknown sample kind");
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t stream) {
  std::uint64_t z = base + 0x9E3779B97F4A7C15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

}  // namespace qunc
