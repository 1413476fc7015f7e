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

#include "qunc/channels.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <numeric>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "qunc/errors.hpp"
#include "qunc/linalg.hpp"
#include "qunc/measures.hpp"

namespace qunc {

KrausChannel::KrausChannel(std::vector<ComplexMatrix> kraus_ops, double tol)
    : ops_(std::move(kraus_ops)) {
  if (ops_.empty()) throw DimensionError("channel needs at least one Kraus operator");
  const Eigen::Index d = ops_.front().rows();
  if (d < 1) throw DimensionError("Kraus operators must be nonempty");
  for (const auto& k : ops_) {
    if (k.rows() != d || k.cols() != d) {
      std::ostringstream os;
      os << "Kraus operator of shape " << k.rows() << "x" << k.cols() << ", expected " << d
         << "x" << d;
      throw DimensionError(os.str());
    }
  }
  const double residual = completeness_residual();
  if (!(residual <= tol)) {
    std::ostringstream os;
    os << "completeness violated: max |sum K^dagger K - I| = " << residual << " exceeds " << tol;
    throw CompletenessError(os.str());
  }
}

double KrausChannel::completeness_residual() const {
  const Eigen::Index d = ops_.front().rows();
  ComplexMatrix acc = ComplexMatrix::Zero(d, d);
  for (const auto& k : ops_) acc += k.adjoint() * k;
  return max_abs_diff(acc, ComplexMatrix::Identity(d, d));
}

KrausChannel dephasing_channel(int dim) {
  std::vector<ComplexMatrix> ops;
  for (int i = 0; i < dim; ++i) {
    ComplexMatrix p = ComplexMatrix::Zero(dim, dim);
    p(i, i) = 1.0;
    ops.push_back(std::move(p));
  }
  return KrausChannel(std::move(ops));
}

KrausChannel unitary_channel(const ComplexMatrix& u) { return KrausChannel({u}); }

ComplexMatrix permutation_matrix(const std::vector<int>& perm) {
  const int d = static_cast<int>(perm.size());
  std::vector<int> sorted = perm;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < d; ++i) {
    if (sorted[i] != i) throw InvariantError("not a permutation of 0..d-1");
  }
  ComplexMatrix p = ComplexMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) p(perm[i], i) = 1.0;
  return p;
}

KrausChannel permutation_channel(const std::vector<int>& perm) {
  return KrausChannel({permutation_matrix(perm)});
}

KrausChannel compose(const KrausChannel& second, const KrausChannel& first) {
  if (second.dim() != first.dim()) throw DimensionError("compose: dimension mismatch");
  std::vector<ComplexMatrix> ops;
  for (const auto& b : second.ops()) {
    for (const auto& a : first.ops()) ops.push_back(b * a);
  }
  return KrausChannel(std::move(ops), 1e-8);
}

DensityMatrix apply(const KrausChannel& channel, const DensityMatrix& rho) {
  if (channel.dim() != rho.dim()) {
    std::ostringstream os;
    os << "apply: channel dimension " << channel.dim() << " vs state dimension " << rho.dim();
    throw DimensionError(os.str());
  }
  ComplexMatrix out = ComplexMatrix::Zero(rho.dim(), rho.dim());
  for (const auto& k : channel.ops()) out += k * rho.matrix() * k.adjoint();
  return DensityMatrix::from_trusted(std::move(out));
}

namespace {

struct CertainImage {
  bool certain = false;
  int index = 0;
};

// Membership of an image in the set of certain states.
CertainImage classify_image(const ComplexMatrix& image, double tol) {
  const EigenDecomposition ed = eigendecompose(image, 1e-6);
  const ComplexVector v = ed.vectors.col(0);
  Eigen::Index j = 0;
  const double overlap = v.cwiseAbs2().maxCoeff(&j);
  return {ed.values(0) >= 1.0 - tol && overlap >= 1.0 - tol, static_cast<int>(j)};
}

ComplexMatrix image_of_basis_state(const KrausChannel& channel, int i) {
  const int d = channel.dim();
  ComplexMatrix out = ComplexMatrix::Zero(d, d);
  for (const auto& k : channel.ops()) out += k.col(i) * k.col(i).adjoint();
  return out;
}

double max_uncertainty_change(const KrausChannel& channel, const DensityMatrix& rho) {
  const DensityMatrix out = apply(channel, rho);
  static const std::array<SymmetricConcaveFunction, 3> kMeasures = {
      variance_function(), entropy_function(2.0), max_function()};
  double worst = 0.0;
  for (const auto& f : kMeasures) {
    worst = std::max(worst, std::abs(uncertainty(f, out) - uncertainty(f, rho)));
  }
  return worst;
}

// Support of column i across all Kraus operators.
std::vector<int> column_support(const KrausChannel& channel, int i, double tol) {
  std::vector<int> rows;
  for (int r = 0; r < channel.dim(); ++r) {
    for (const auto& k : channel.ops()) {
      if (std::abs(k(r, i)) > tol) {
        rows.push_back(r);
        break;
      }
    }
  }
  return rows;
}

struct PermutationCheck {
  std::optional<PreservingStructure> structure;
  std::string reason;
  std::optional<std::pair<int, int>> collision;  // inputs sharing an output row
  std::optional<int> spread_column;
};

PermutationCheck check_permutation_form(const KrausChannel& channel, double tol) {
  const int d = channel.dim();
  PermutationCheck out;
  std::vector<int> perm(d, -1);
  std::vector<int> owner(d, -1);
  for (int i = 0; i < d; ++i) {
    const std::vector<int> rows = column_support(channel, i, tol);
    if (rows.size() != 1) {
      std::ostringstream os;
      os << "column " << i << " is supported on " << rows.size() << " rows";
      out.reason = os.str();
      out.spread_column = i;
      return out;
    }
    const int r = rows.front();
    if (owner[r] >= 0) {
      std::ostringstream os;
      os << "inputs " << owner[r] << " and " << i << " both map to |" << r << ">";
      out.reason = os.str();
      out.collision = std::make_pair(owner[r], i);
      return out;
    }
    owner[r] = i;
    perm[i] = r;
  }
  PreservingStructure s;
  s.permutation = perm;
  Eigen::VectorXd norms = Eigen::VectorXd::Zero(d);
  for (const auto& k : channel.ops()) {
    ComplexVector diag(d);
    for (int i = 0; i < d; ++i) diag(perm[i]) = k(perm[i], i);
    norms += diag.cwiseAbs2();
    s.diagonals.push_back(std::move(diag));
  }
  s.completeness_residual = (norms.array() - 1.0).abs().maxCoeff();
  if (s.completeness_residual > tol) {
    std::ostringstream os;
    os << "sum D^dagger D deviates from I by " << s.completeness_residual;
    out.reason = os.str();
    return out;
  }
  out.structure = std::move(s);
  return out;
}

}  // namespace

ChannelVerdict is_certain_operation(const KrausChannel& channel, double tol) {
  const int d = channel.dim();
  const int num_ops = static_cast<int>(channel.ops().size());
  ChannelVerdict v;
  std::vector<int> g(d);
  for (int i = 0; i < d; ++i) {
    const CertainImage img = classify_image(image_of_basis_state(channel, i), tol);
    if (!img.certain) {
      std::ostringstream os;
      os << "image of |" << i << "><" << i << "| is not a certain state";
      v.reason = os.str();
      v.counterexample = DensityMatrix::certain(d, i);
      return v;
    }
    g[i] = img.index;
  }

  CertainStructure s;
  s.g = g;
  s.weights = Eigen::MatrixXd::Zero(d, num_ops);
  s.phases = Eigen::MatrixXd::Zero(d, num_ops);
  for (int l = 0; l < num_ops; ++l) {
    const ComplexMatrix& k = channel.ops()[l];
    for (int i = 0; i < d; ++i) {
      s.weights(i, l) = k.col(i).squaredNorm();
      const Complex entry = k(g[i], i);
      s.phases(i, l) = std::abs(entry) > 0.0 ? std::arg(entry) : 0.0;
    }
  }
  for (int i = 0; i < d; ++i) {
    s.weight_residual = std::max(s.weight_residual, std::abs(s.weights.row(i).sum() - 1.0));
    for (int ip = 0; ip < d; ++ip) {
      if (ip == i || g[ip] != g[i]) continue;
      Complex c = 0.0;
      for (int l = 0; l < num_ops; ++l) {
        c += std::sqrt(s.weights(ip, l) * s.weights(i, l)) *
             std::polar(1.0, s.phases(i, l) - s.phases(ip, l));
      }
      s.cross_residual = std::max(s.cross_residual, std::abs(c));
    }
  }
  int worst_column = 0;
  double worst = 0.0;
  for (int l = 0; l < num_ops; ++l) {
    ComplexMatrix rebuilt = ComplexMatrix::Zero(d, d);
    for (int i = 0; i < d; ++i) {
      rebuilt(g[i], i) = std::sqrt(s.weights(i, l)) * std::polar(1.0, s.phases(i, l));
    }
    for (int i = 0; i < d; ++i) {
      const double err = (rebuilt.col(i) - channel.ops()[l].col(i)).cwiseAbs().maxCoeff();
      if (err > worst) {
        worst = err;
        worst_column = i;
      }
    }
  }
  s.reconstruction_residual = worst;

  if (s.weight_residual > tol || s.cross_residual > tol || s.reconstruction_residual > tol) {
    std::ostringstream os;
    os << "Kraus form residuals (weights " << s.weight_residual << ", cross terms "
       << s.cross_residual << ", reconstruction " << s.reconstruction_residual
       << ") exceed " << tol;
    v.reason = os.str();
    v.counterexample = DensityMatrix::certain(d, worst_column);
    return v;
  }
  v.is_certain = true;
  v.certain_structure = std::move(s);

  PermutationCheck pc = check_permutation_form(channel, tol);
  if (pc.structure) {
    v.is_uncertainty_preserving = true;
    v.preserving_structure = std::move(pc.structure);
  } else {
    v.reason = pc.reason;
  }
  return v;
}

ChannelVerdict is_uncertainty_preserving(const KrausChannel& channel, double tol,
                                         std::uint64_t seed) {
  const int d = channel.dim();
  ChannelVerdict v = is_certain_operation(channel, tol);
  if (!v.is_certain) {
    const DensityMatrix& cx = *v.counterexample;
    v.witness = UncertaintyWitness{cx, max_uncertainty_change(channel, cx)};
    return v;
  }

  PermutationCheck pc = check_permutation_form(channel, tol);
  Rng rng(seed);
  if (!pc.structure) {
    v.is_uncertainty_preserving = false;
    v.preserving_structure.reset();
    v.reason = pc.reason;
    if (pc.collision) {
      const auto [i, ip] = *pc.collision;
      std::vector<double> p(d, 0.0);
      p[i] = 0.5;
      p[ip] = 0.5;
      const DensityMatrix w = DensityMatrix::diagonal(p);
      v.witness = UncertaintyWitness{w, max_uncertainty_change(channel, w)};
    } else {
      // No constructive witness; keep the worst of a few random states.
      std::optional<UncertaintyWitness> best;
      for (int s = 0; s < 50; ++s) {
        DensityMatrix rho = random_mixed_state(d, rng);
        const double change = max_uncertainty_change(channel, rho);
        if (!best || change > best->change) best = UncertaintyWitness{rho, change};
      }
      v.witness = std::move(best);
    }
    return v;
  }

  PreservingStructure s = std::move(*pc.structure);
  std::optional<UncertaintyWitness> worst;
  for (int k = 0; k < 20; ++k) {
    DensityMatrix rho = random_mixed_state(d, rng);
    const double change = max_uncertainty_change(channel, rho);
    s.spot_check_change = std::max(s.spot_check_change, change);
    if (!worst || change > worst->change) worst = UncertaintyWitness{rho, change};
  }
  if (s.spot_check_change > 1e-8) {
    std::ostringstream os;
    os << "D_l P_pi structure found but uncertainty changed by " << s.spot_check_change;
    v.reason = os.str();
    v.is_uncertainty_preserving = false;
    v.preserving_structure.reset();
    v.witness = std::move(worst);
    return v;
  }
  v.is_uncertainty_preserving = true;
  v.preserving_structure = std::move(s);
  v.reason.clear();
  return v;
}

DensityMatrix uniform_diagonal_twirl(const DensityMatrix& rho) {
  const int d = rho.dim();
  ComplexMatrix q = ComplexMatrix::Zero(d, d);
  for (int i = 0; i < d; ++i) q(i, (i + 1) % d) = 1.0;
  ComplexMatrix qt = ComplexMatrix::Identity(d, d);
  ComplexMatrix acc = ComplexMatrix::Zero(d, d);
  for (int t = 1; t <= d; ++t) {
    qt = q * qt;
    acc += qt * rho.matrix() * qt.adjoint();
  }
  return DensityMatrix::from_trusted(acc / static_cast<double>(d));
}

PureStateEnsemble max_coherent_decomposition_of_uniform(int dim) {
  if (dim < 2) throw DimensionError("Fourier decomposition needs d >= 2");
  std::vector<PureStateEnsemble::Member> members;
  const double amp = 1.0 / std::sqrt(static_cast<double>(dim));
  for (int k = 0; k < dim; ++k) {
    ComplexVector v(dim);
    for (int j = 0; j < dim; ++j) {
      v(j) = std::polar(amp, 2.0 * std::numbers::pi * ((j * k) % dim) / dim);
    }
    members.push_back({1.0 / dim, PureState(std::move(v))});
  }
  return PureStateEnsemble(std::move(members));
}

ConstantDiagonalResult constant_diagonal_unitary(const DensityMatrix& rho) {
  constexpr double kPinned = 1e-13;
  const int d = rho.dim();
  const double target = 1.0 / d;
  ComplexMatrix u = ComplexMatrix::Identity(d, d);
  ComplexMatrix m = rho.matrix();
  std::vector<bool> fixed(d);
  for (int i = 0; i < d; ++i) fixed[i] = std::abs(m(i, i).real() - target) <= kPinned;

  int rotations = 0;
  while (true) {
    int hi = -1;
    int lo = -1;
    for (int k = 0; k < d; ++k) {
      if (fixed[k]) continue;
      if (hi < 0 || m(k, k).real() > m(hi, hi).real()) hi = k;
      if (lo < 0 || m(k, k).real() < m(lo, lo).real()) lo = k;
    }
    if (hi < 0 || hi == lo) break;
    const double a = m(hi, hi).real();
    const double c = m(lo, lo).real();
    const double cos2 = std::clamp((target - c) / (a - c), 0.0, 1.0);
    const double cs = std::sqrt(cos2);
    const double sn = std::sqrt(1.0 - cos2);
    const Complex off = m(hi, lo);
    const double phi = std::abs(off) > 0.0 ? std::numbers::pi / 2 - std::arg(off) : 0.0;
    ComplexMatrix r = ComplexMatrix::Identity(d, d);
    r(hi, hi) = cs;
    r(lo, hi) = sn * std::polar(1.0, phi);
    r(hi, lo) = -sn * std::polar(1.0, -phi);
    r(lo, lo) = cs;
    u = u * r;
    m = r.adjoint() * m * r;
    ++rotations;
    fixed[hi] = true;
    if (std::abs(m(lo, lo).real() - target) <= kPinned) fixed[lo] = true;
  }
  return {u, DensityMatrix::from_trusted(u.adjoint() * rho.matrix() * u), rotations};
}

KrausChannel random_certain_channel(int dim, Rng& rng, bool injective, int extra_ops) {
  std::vector<int> g(dim);
  if (injective) {
    std::iota(g.begin(), g.end(), 0);
    std::shuffle(g.begin(), g.end(), rng);
  } else {
    std::uniform_int_distribution<int> pick(0, dim - 1);
    for (int& x : g) x = pick(rng);
    std::vector<int> sorted = g;
    std::sort(sorted.begin(), sorted.end());
    if (dim > 1 && std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end()) g[1] = g[0];
  }
  std::map<int, std::vector<int>> fibers;
  for (int i = 0; i < dim; ++i) fibers[g[i]].push_back(i);
  std::size_t largest = 0;
  for (const auto& [_, members] : fibers) largest = std::max(largest, members.size());
  const int num_ops = static_cast<int>(largest) + std::max(extra_ops, 0);

  std::vector<ComplexMatrix> ops(num_ops, ComplexMatrix::Zero(dim, dim));
  for (const auto& [target, members] : fibers) {
    const ComplexMatrix basis = random_unitary(num_ops, rng);
    for (std::size_t m = 0; m < members.size(); ++m) {
      for (int l = 0; l < num_ops; ++l) ops[l](target, members[m]) = basis(l, m);
    }
  }
  return KrausChannel(std::move(ops), 1e-10);
}

KrausChannel random_preserving_channel(int dim, int num_ops, Rng& rng) {
  std::vector<int> perm(dim);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  const ComplexMatrix p = permutation_matrix(perm);
  std::vector<ComplexVector> weights;
  for (int j = 0; j < dim; ++j) weights.push_back(random_pure_state(num_ops, rng).amplitudes());
  std::vector<ComplexMatrix> ops;
  for (int l = 0; l < num_ops; ++l) {
    ComplexVector diag(dim);
    for (int j = 0; j < dim; ++j) diag(j) = weights[j](l);
    ops.push_back(diag.asDiagonal() * p);
  }
  return KrausChannel(std::move(ops), 1e-10);
}

KrausChannel random_generic_channel(int dim, int num_ops, Rng& rng) {
  const ComplexMatrix v = random_isometry(dim * num_ops, dim, rng);
  std::vector<ComplexMatrix> ops;
  for (int l = 0; l < num_ops; ++l) ops.push_back(v.block(l * dim, 0, dim, dim));
  return KrausChannel(std::move(ops), 1e-10);
}

}  // namespace qunc
