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

#include "qunc/assist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qunc/errors.hpp"
#include "qunc/linalg.hpp"
#include "qunc/random.hpp"

namespace qunc {

namespace {

constexpr double kDroppedWeight = 1e-14;

// Rows of sqrt(lambda_j) e_j^T for the r retained eigenpairs.
struct WeightedEigenbasis {
  ComplexMatrix rows;  // r x d
  int rank = 0;
};

WeightedEigenbasis weighted_eigenbasis(const DensityMatrix& rho) {
  const EigenDecomposition ed = eigendecompose(rho.matrix());
  const int d = rho.dim();
  int r = static_cast<int>((ed.values.array() > kTolRank).count());
  r = std::max(r, 1);
  WeightedEigenbasis out{ComplexMatrix(r, d), r};
  for (int j = 0; j < r; ++j) {
    out.rows.row(j) = std::sqrt(std::max(ed.values(j), 0.0)) * ed.vectors.col(j).transpose();
  }
  return out;
}

PureStateEnsemble ensemble_from_rows(const ComplexMatrix& psi) {
  std::vector<PureStateEnsemble::Member> members;
  double total = 0.0;
  for (Eigen::Index k = 0; k < psi.rows(); ++k) {
    const double w = psi.row(k).squaredNorm();
    if (w <= kDroppedWeight) continue;
    total += w;
    members.push_back({w, PureState(psi.row(k).transpose() / std::sqrt(w))});
  }
  // Renormalize away roundoff and the dropped tail.
  for (auto& m : members) m.weight /= total;
  return PureStateEnsemble(std::move(members));
}

// p f(|row|^2 / p) for the unnormalized member row.
double member_value(const SymmetricConcaveFunction& f, const ComplexMatrix& psi, Eigen::Index k,
                    std::vector<double>& scratch) {
  const double w = psi.row(k).squaredNorm();
  if (w <= kDroppedWeight) return 0.0;
  for (Eigen::Index i = 0; i < psi.cols(); ++i) scratch[i] = std::norm(psi(k, i)) / w;
  return w * f(scratch);
}

int default_ensemble_size(int rank) { return std::max(rank, std::min(rank * rank, 16)); }

}  // namespace

PureStateEnsemble decomposition_from_unitary(const DensityMatrix& rho, const ComplexMatrix& mix) {
  const WeightedEigenbasis basis = weighted_eigenbasis(rho);
  if (mix.cols() != basis.rank || mix.rows() < basis.rank) {
    std::ostringstream os;
    os << "mixing matrix is " << mix.rows() << "x" << mix.cols() << ", expected m x "
       << basis.rank << " with m >= " << basis.rank;
    throw DimensionError(os.str());
  }
  const double defect =
      max_abs_diff(mix.adjoint() * mix, ComplexMatrix::Identity(basis.rank, basis.rank));
  if (defect > 1e-9) {
    std::ostringstream os;
    os << "mixing matrix columns not orthonormal: max |mix^dagger mix - I| = " << defect;
    throw InvariantError(os.str());
  }
  return ensemble_from_rows(mix * basis.rows);
}

double average_coherence(const SymmetricConcaveFunction& f, const PureStateEnsemble& ensemble) {
  double acc = 0.0;
  for (const auto& m : ensemble.members()) acc += m.weight * f(m.state.probabilities());
  return acc;
}

CaResult coherence_of_assistance(const SymmetricConcaveFunction& f, const DensityMatrix& rho,
                                 const AssistConfig& cfg) {
  const WeightedEigenbasis basis = weighted_eigenbasis(rho);
  const int r = basis.rank;
  const int d = rho.dim();
  const int m = cfg.ensemble_size > 0 ? std::max(cfg.ensemble_size, r) : default_ensemble_size(r);
  const int restarts = std::max(cfg.restarts, 1);

  std::vector<double> scratch(d);
  double best_value = -1.0;
  ComplexMatrix best_mixing;
  bool all_converged = true;

  for (int restart = 0; restart < restarts; ++restart) {
    Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(restart)));
    ComplexMatrix w;
    if (restart == 0 && cfg.warm_start) {
      const ComplexMatrix& ws = *cfg.warm_start;
      if (ws.cols() != r || ws.rows() > m) {
        throw DimensionError("warm start must be k x r with k <= ensemble size");
      }
      w = ComplexMatrix::Zero(m, r);
      w.topRows(ws.rows()) = ws;
    } else {
      w = random_isometry(m, r, rng);
    }
    ComplexMatrix psi = w * basis.rows;
    std::vector<double> contrib(m);
    double current = 0.0;
    for (int k = 0; k < m; ++k) {
      contrib[k] = member_value(f, psi, k, scratch);
      current += contrib[k];
    }
    double run_best = current;
    ComplexMatrix run_best_w = w;

    std::uniform_int_distribution<int> row_pick(0, m - 1);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::normal_distribution<double> normal(0.0, 1.0);
    double angle = cfg.initial_angle;
    double temperature = cfg.initial_temperature;
    int stall = 0;
    bool converged = (m == 1);  // a single member admits no moves
    for (int it = 0; it < cfg.max_iterations && !converged; ++it) {
      const int a = row_pick(rng);
      int b = row_pick(rng);
      while (b == a) b = row_pick(rng);
      const double theta = angle * normal(rng);
      const double alpha = 2.0 * std::numbers::pi * unit(rng);
      const double phi = 2.0 * std::numbers::pi * unit(rng);
      const Complex g00 = std::polar(std::cos(theta), alpha);
      const Complex g01 = -std::polar(std::sin(theta), phi);
      const Complex g10 = std::polar(std::sin(theta), -phi);
      const Complex g11 = std::polar(std::cos(theta), -alpha);

      const ComplexMatrix psi_a = psi.row(a);
      const ComplexMatrix psi_b = psi.row(b);
      psi.row(a) = g00 * psi_a + g01 * psi_b;
      psi.row(b) = g10 * psi_a + g11 * psi_b;
      const double va = member_value(f, psi, a, scratch);
      const double vb = member_value(f, psi, b, scratch);
      const double delta = va + vb - contrib[a] - contrib[b];
      const bool accept = delta >= 0.0 || unit(rng) < std::exp(delta / temperature);
      if (accept) {
        const ComplexMatrix w_a = w.row(a);
        const ComplexMatrix w_b = w.row(b);
        w.row(a) = g00 * w_a + g01 * w_b;
        w.row(b) = g10 * w_a + g11 * w_b;
        contrib[a] = va;
        contrib[b] = vb;
        current += delta;
        if (cfg.visitor) cfg.visitor(ensemble_from_rows(psi));
      } else {
        psi.row(a) = psi_a;
        psi.row(b) = psi_b;
      }
      if (current > run_best + cfg.improvement_tol) {
        run_best = current;
        run_best_w = w;
        stall = 0;
        angle = std::min(angle * 1.2, std::numbers::pi / 2);
      } else {
        angle = std::max(angle * 0.98, cfg.min_angle);
        if (++stall >= cfg.stall_limit) converged = true;
      }
      temperature *= cfg.cooling;
    }
    all_converged = all_converged && converged;

    // Re-evaluate from the stored mixing to shed accumulated update error.
    const ComplexMatrix exact = run_best_w * basis.rows;
    double value = 0.0;
    for (int k = 0; k < m; ++k) value += member_value(f, exact, k, scratch);
    if (value > best_value) {
      best_value = value;
      best_mixing = run_best_w;
    }
  }

  const double u = uncertainty(f, rho);
  return CaResult{
      .measure = f.name(),
      .value = best_value,
      .uncertainty = u,
      .gap_to_u = u - best_value,
      .best_ensemble = ensemble_from_rows(best_mixing * basis.rows),
      .best_mixing = best_mixing,
      .ensemble_size = m,
      .restarts_used = restarts,
      .converged = all_converged,
  };
}

double pinned_coherence(const SymmetricConcaveFunction& f, const DensityMatrix& rho,
                        const GeometricConfig& geometric) {
  if (f.name() == "var") return skew_information(rho);
  if (f.name() == "entropy") return u_entropy(rho, f.log_base().value_or(2.0)).quantum;
  if (f.name() == "fidelity") return geometric_coherence(rho, geometric).value;
  throw Error("no pinned coherence measure for function '" + f.name() + "'");
}

SandwichReport sandwich_check(const SymmetricConcaveFunction& f, const DensityMatrix& rho,
                              const CaResult& ca, const GeometricConfig& geometric) {
  SandwichReport s;
  s.measure = f.name();
  s.coherence_measure = f.name() == "var"        ? "skew_information"
                        : f.name() == "entropy" ? "relative_entropy"
                                                : "geometric";
  s.coherence = pinned_coherence(f, rho, geometric);
  s.assisted = ca.value;
  s.uncertainty = uncertainty(f, rho);
  s.lower_margin = s.assisted - s.coherence;
  s.upper_margin = s.uncertainty - s.assisted;
  s.ok = s.lower_margin >= -1e-6 && s.upper_margin >= -1e-6;
  return s;
}

}  // namespace qunc
