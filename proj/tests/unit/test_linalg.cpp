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

#include <gtest/gtest.h>

#include <cmath>
#include <variant>

#include "oracles.hpp"
#include "qunc/errors.hpp"
#include "qunc/linalg.hpp"
#include "qunc/random.hpp"

namespace qunc {
namespace {

using testing::fidelity_trace_formula;
using testing::partial_trace_loops;

const double kInvSqrt2 = 1.0 / std::sqrt(2.0);

PureState plus_state() {
  ComplexVector v(2);
  v << kInvSqrt2, kInvSqrt2;
  return PureState(v);
}

TEST(EigendecomposeTest, IdentityHasUnitEigenvaluesAndUnitaryVectors) {
  const EigenDecomposition ed = eigendecompose(ComplexMatrix::Identity(2, 2));
  EXPECT_NEAR(ed.values(0), 1.0, 1e-15);
  EXPECT_NEAR(ed.values(1), 1.0, 1e-15);
  EXPECT_LT(max_abs_diff(ed.vectors * ed.vectors.adjoint(), ComplexMatrix::Identity(2, 2)), 1e-14);
}

TEST(EigendecomposeTest, DiagonalSortedDescending) {
  ComplexMatrix m = ComplexMatrix::Zero(2, 2);
  m(0, 0) = 0.3;
  m(1, 1) = 0.7;
  const EigenDecomposition ed = eigendecompose(m);
  EXPECT_NEAR(ed.values(0), 0.7, 1e-15);
  EXPECT_NEAR(ed.values(1), 0.3, 1e-15);
  // basis vectors with the phase convention applied
  EXPECT_NEAR(std::abs(ed.vectors(1, 0) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(ed.vectors(0, 1) - 1.0), 0.0, 1e-15);
}

TEST(EigendecomposeTest, RankOneProjector) {
  const EigenDecomposition ed = eigendecompose(plus_state().projector());
  EXPECT_NEAR(ed.values(0), 1.0, 1e-14);
  EXPECT_NEAR(ed.values(1), 0.0, 1e-14);
}

TEST(EigendecomposeTest, RandomReconstructionAndPhaseConvention) {
  Rng rng(3);
  for (int d = 2; d <= 8; ++d) {
    const ComplexMatrix m = random_mixed_state(d, rng).matrix();
    const EigenDecomposition ed = eigendecompose(m);
    const ComplexMatrix back =
        ed.vectors * ed.values.cast<Complex>().asDiagonal() * ed.vectors.adjoint();
    EXPECT_LT(max_abs_diff(back, m), 1e-10);
    for (int k = 0; k + 1 < d; ++k) EXPECT_GE(ed.values(k), ed.values(k + 1));
    for (int k = 0; k < d; ++k) {
      EXPECT_NEAR(ed.vectors(0, k).imag(), 0.0, 1e-15);
      EXPECT_GT(ed.vectors(0, k).real(), 0.0);
    }
  }
}

TEST(EigendecomposeTest, RejectsNonHermitian) {
  ComplexMatrix m = ComplexMatrix::Identity(2, 2);
  m(0, 1) = 0.5;
  EXPECT_THROW(eigendecompose(m), HermiticityError);
}

TEST(MatrixSqrtTest, ClosedForms) {
  const ComplexMatrix s = matrix_sqrt(DensityMatrix::maximally_mixed(2));
  EXPECT_LT(max_abs_diff(s, kInvSqrt2 * ComplexMatrix::Identity(2, 2)), 1e-15);
  const DensityMatrix zero = DensityMatrix::certain(2, 0);
  EXPECT_LT(max_abs_diff(matrix_sqrt(zero), zero.matrix()), 1e-15);
}

TEST(MatrixSqrtTest, SquaresBackOnRankTwoQutrit) {
  Rng rng(5);
  for (int s = 0; s < 20; ++s) {
    const DensityMatrix rho = random_rank_limited_state(3, 2, rng);
    const ComplexMatrix root = matrix_sqrt(rho);
    EXPECT_LT(hermitian_defect(root), 1e-14);
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(root);
    EXPECT_GT(es.eigenvalues().minCoeff(), -1e-9);
    EXPECT_LT(max_abs_diff(root * root, rho.matrix()), 1e-9);
  }
}

TEST(FidelityTest, ClosedForms) {
  EXPECT_NEAR(fidelity(DensityMatrix::certain(2, 0), DensityMatrix::certain(2, 1)), 0.0, 1e-15);
  const DensityMatrix plus = DensityMatrix::from_pure(plus_state());
  const DensityMatrix half = DensityMatrix::maximally_mixed(2);
  // Value from the literal trace formula, frozen: 0.5.
  const double oracle = fidelity_trace_formula(half.matrix(), plus.matrix());
  EXPECT_NEAR(oracle, 0.5, 1e-12);
  EXPECT_NEAR(fidelity(half, plus), 0.5, 1e-12);
}

TEST(FidelityTest, DimensionMismatch) {
  EXPECT_THROW(fidelity(DensityMatrix::maximally_mixed(2), DensityMatrix::maximally_mixed(3)),
               DimensionError);
}

TEST(FidelityTest, OverlapWithCertainStatesIsDiagonal) {
  Rng rng(17);
  for (int d = 2; d <= 6; ++d) {
    for (int s = 0; s < 200; ++s) {
      const DensityMatrix rho = random_mixed_state(d, rng);
      for (int i = 0; i < d; ++i) {
        ASSERT_NEAR(fidelity(rho, DensityMatrix::certain(d, i)), rho(i, i).real(), 1e-8);
      }
    }
  }
}

TEST(FidelityTest, SymmetricUnitOnDiagonalAndMatchesTraceFormula) {
  Rng rng(19);
  for (int d = 2; d <= 5; ++d) {
    for (int s = 0; s < 30; ++s) {
      const DensityMatrix a = random_mixed_state(d, rng);
      const DensityMatrix b = (s % 2) ? random_mixed_state(d, rng)
                                      : DensityMatrix::from_pure(random_pure_state(d, rng));
      const double fab = fidelity(a, b);
      EXPECT_NEAR(fab, fidelity(b, a), 1e-8);
      EXPECT_NEAR(fidelity(a, a), 1.0, 1e-9);
      EXPECT_NEAR(fab, fidelity_trace_formula(a.matrix(), b.matrix()), 1e-7);
      EXPECT_GE(fab, 0.0);
      EXPECT_LE(fab, 1.0);
    }
  }
}

TEST(DephaseTest, Examples) {
  const DensityMatrix out = dephase(DensityMatrix::from_pure(plus_state()));
  EXPECT_LT(max_abs_diff(out.matrix(), DensityMatrix::maximally_mixed(2).matrix()), 1e-15);
  const std::vector<double> p = {0.2, 0.5, 0.3};
  const DensityMatrix diag = DensityMatrix::diagonal(p);
  EXPECT_LT(max_abs_diff(dephase(diag).matrix(), diag.matrix()), 0.0 + 1e-300);
}

TEST(DephaseTest, IdempotentTracePreservingAndDiagonal) {
  Rng rng(23);
  for (int s = 0; s < 50; ++s) {
    const DensityMatrix rho = random_mixed_state(3, rng);
    const DensityMatrix once = dephase(rho);
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i != j) EXPECT_EQ(once(i, j), Complex(0.0));
      }
      EXPECT_EQ(once(i, i), Complex(rho(i, i).real()));
    }
    EXPECT_NEAR(once.matrix().trace().real(), 1.0, 1e-12);
    EXPECT_EQ(max_abs_diff(dephase(once).matrix(), once.matrix()), 0.0);
  }
}

TEST(PartialTraceTest, ProductAndBellState) {
  Rng rng(29);
  const DensityMatrix a = random_mixed_state(2, rng);
  const DensityMatrix b = random_mixed_state(3, rng);
  const DensityMatrix ab = tensor(a, b);
  EXPECT_LT(max_abs_diff(partial_trace(ab, {2, 3}, Subsystem::A).matrix(), a.matrix()), 1e-14);
  EXPECT_LT(max_abs_diff(partial_trace(ab, {2, 3}, Subsystem::B).matrix(), b.matrix()), 1e-14);

  ComplexVector bell = ComplexVector::Zero(4);
  bell(0) = kInvSqrt2;
  bell(3) = kInvSqrt2;
  const DensityMatrix phi = DensityMatrix::from_pure(PureState(bell));
  EXPECT_LT(max_abs_diff(partial_trace(phi, {2, 2}, Subsystem::A).matrix(),
                         DensityMatrix::maximally_mixed(2).matrix()),
            1e-15);
}

TEST(PartialTraceTest, MatchesIndexSummation) {
  Rng rng(31);
  for (int s = 0; s < 20; ++s) {
    const DensityMatrix rho = random_mixed_state(6, rng);
    const DensityMatrix ka = partial_trace(rho, {2, 3}, Subsystem::A);
    const DensityMatrix kb = partial_trace(rho, {2, 3}, Subsystem::B);
    EXPECT_LT(max_abs_diff(ka.matrix(), partial_trace_loops(rho.matrix(), 2, 3, true)), 1e-14);
    EXPECT_LT(max_abs_diff(kb.matrix(), partial_trace_loops(rho.matrix(), 2, 3, false)), 1e-14);
    EXPECT_NO_THROW(DensityMatrix(ka.matrix()));
    EXPECT_NEAR(kb.matrix().trace().real(), 1.0, 1e-12);
  }
}

TEST(PartialTraceTest, RejectsBadFactorization) {
  EXPECT_THROW(partial_trace(DensityMatrix::maximally_mixed(6), {4, 2}, Subsystem::A),
               DimensionError);
}

TEST(PurifyTest, PureInputKeepsOneDimensionalAncilla) {
  const PureState psi = purify(DensityMatrix::from_pure(plus_state()));
  ASSERT_EQ(psi.dim(), 2);
  const Complex overlap = psi.amplitudes().dot(plus_state().amplitudes());
  EXPECT_NEAR(std::abs(overlap), 1.0, 1e-12);
}

TEST(PurifyTest, MaximallyMixedQubitGivesMaximallyEntangledState) {
  const PureState psi = purify(DensityMatrix::maximally_mixed(2));
  ASSERT_EQ(psi.dim(), 4);
  const DensityMatrix joint = DensityMatrix::from_pure(psi);
  // both marginals maximally mixed
  for (Subsystem keep : {Subsystem::A, Subsystem::B}) {
    EXPECT_LT(max_abs_diff(partial_trace(joint, {2, 2}, keep).matrix(),
                           DensityMatrix::maximally_mixed(2).matrix()),
              1e-14);
  }
}

TEST(PurifyTest, RoundTripsThroughPartialTrace) {
  Rng rng(37);
  for (int d = 2; d <= 5; ++d) {
    for (int rank = 1; rank <= d; ++rank) {
      const DensityMatrix rho = random_rank_limited_state(d, rank, rng);
      const PureState psi = purify(rho);
      const int r = psi.dim() / d;
      EXPECT_EQ(r, rank);
      const DensityMatrix back = partial_trace(DensityMatrix::from_pure(psi), {d, r}, Subsystem::A);
      EXPECT_LT(max_abs_diff(back.matrix(), rho.matrix()), 1e-9);
    }
  }
}

TEST(SampleRandomTest, InvariantsAndDeterminism) {
  for (std::uint64_t seed : {1ULL, 42ULL, 0xdeadbeefULL}) {
    const auto pure = std::get<PureState>(sample_random(SampleKind::haar_pure, 2, seed));
    EXPECT_NEAR(pure.amplitudes().squaredNorm(), 1.0, 1e-12);

    const auto mixed = std::get<DensityMatrix>(sample_random(SampleKind::ginibre_mixed, 3, seed));
    EXPECT_NO_THROW(DensityMatrix(mixed.matrix()));

    const auto u = std::get<ComplexMatrix>(sample_random(SampleKind::haar_unitary, 4, seed));
    EXPECT_LE(max_abs_diff(u * u.adjoint(), ComplexMatrix::Identity(4, 4)), 1e-10);

    const auto limited =
        std::get<DensityMatrix>(sample_random(SampleKind::rank_limited, 4, seed, 2));
    EXPECT_EQ(numerical_rank(limited), 2);

    const auto again = std::get<DensityMatrix>(sample_random(SampleKind::ginibre_mixed, 3, seed));
    EXPECT_EQ(max_abs_diff(mixed.matrix(), again.matrix()), 0.0);
  }
}

TEST(SampleRandomTest, RankAboveDimensionFails) {
  EXPECT_THROW(sample_random(SampleKind::rank_limited, 3, 1, 4), DimensionError);
}

TEST(EntropyTest, VonNeumannMatchesSpectrum) {
  Rng rng(41);
  for (int s = 0; s < 20; ++s) {
    const DensityMatrix rho = random_mixed_state(4, rng);
    EXPECT_NEAR(von_neumann_entropy(rho, 2.0), testing::entropy_of_spectrum(rho.matrix(), 2.0),
                1e-10);
  }
  EXPECT_NEAR(von_neumann_entropy(DensityMatrix::maximally_mixed(4), 2.0), 2.0, 1e-12);
}

}  // namespace
}  // namespace qunc
