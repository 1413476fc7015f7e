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

#include "qunc/measures.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <sstream>

#include <Eigen/SVD>

#include "qunc/errors.hpp"
#include "qunc/linalg.hpp"
#include "qunc/random.hpp"

namespace qunc {

SymmetricConcaveFunction::SymmetricConcaveFunction(std::string name, Eval eval,
                                                   std::optional<double> log_base)
    : name_(std::move(name)), eval_(std::move(eval)), log_base_(log_base) {
  if (!eval_) throw Error("symmetric concave function needs an evaluator");
}

SymmetricConcaveFunction variance_function() {
  return SymmetricConcaveFunction("var", [](std::span<const double> p) {
    double s = 0.0;
    for (double x : p) s += x * x;
    return 1.0 - s;
  });
}

SymmetricConcaveFunction entropy_function(double log_base) {
  if (!(log_base > 1.0)) {
    std::ostringstream os;
    os << "log base " << log_base << " must exceed 1";
    throw InvariantError(os.str());
  }
  const double ln_base = std::log(log_base);
  return SymmetricConcaveFunction(
      "entropy",
      [ln_base](std::span<const double> p) {
        double s = 0.0;
        for (double x : p) {
          if (x > 0.0) s -= x * std::log(x);
        }
        return s / ln_base;
      },
      log_base);
}

SymmetricConcaveFunction max_function() {
  return SymmetricConcaveFunction("fidelity", [](std::span<const double> p) {
    return 1.0 - *std::max_element(p.begin(), p.end());
  });
}

AxiomCheck check_axioms(const SymmetricConcaveFunction& f, std::uint64_t seed, int samples) {
  constexpr double tol = 1e-9;
  Rng rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto fail = [&](const std::string& what, int d) {
    std::ostringstream os;
    os << f.name() << ": " << what << " (d = " << d << ")";
    return AxiomCheck{false, os.str()};
  };
  for (int d = 2; d <= 4; ++d) {
    for (int v = 0; v < d; ++v) {
      std::vector<double> vertex(d, 0.0);
      vertex[v] = 1.0;
      if (std::abs(f(vertex)) > tol) return fail("nonzero at a simplex vertex", d);
    }
    for (int s = 0; s < samples; ++s) {
      std::vector<double> x = random_simplex_point(d, rng);
      std::vector<double> y = random_simplex_point(d, rng);
      const double fx = f(x);
      if (!(fx >= -tol)) return fail("negative value", d);
      if (fx <= tol) return fail("vanishes at an interior point", d);

      std::vector<double> permuted = x;
      std::shuffle(permuted.begin(), permuted.end(), rng);
      if (std::abs(f(permuted) - fx) > tol) return fail("not permutation symmetric", d);

      const double lambda = unit(rng);
      std::vector<double> mix(d);
      for (int i = 0; i < d; ++i) mix[i] = lambda * x[i] + (1.0 - lambda) * y[i];
      if (f(mix) < lambda * fx + (1.0 - lambda) * f(y) - tol) return fail("not concave", d);
    }
  }
  return {};
}

std::string FunctionCatalog::canonical_name(std::string_view name) {
  if (name == "ent" || name == "entropy" || name == "shannon") return "entropy";
  if (name == "max" || name == "fidelity" || name == "geometric") return "fidelity";
  if (name == "var" || name == "variance") return "var";
  return std::string(name);
}

FunctionCatalog FunctionCatalog::with_builtins(double log_base) {
  FunctionCatalog c;
  c.functions_.push_back(variance_function());
  c.functions_.push_back(entropy_function(log_base));
  c.functions_.push_back(max_function());
  return c;
}

void FunctionCatalog::add(SymmetricConcaveFunction f) {
  if (contains(f.name())) {
    throw InvariantError("function '" + f.name() + "' is already registered");
  }
  const AxiomCheck check = check_axioms(f);
  if (!check.ok) throw InvariantError("axiom check failed: " + check.failure);
  functions_.push_back(std::move(f));
}

const SymmetricConcaveFunction& FunctionCatalog::get(std::string_view name) const {
  const std::string key = canonical_name(name);
  for (const auto& f : functions_) {
    if (f.name() == key) return f;
  }
  throw Error("unknown measure '" + std::string(name) + "'");
}

bool FunctionCatalog::contains(std::string_view name) const {
  const std::string key = canonical_name(name);
  return std::any_of(functions_.begin(), functions_.end(),
                     [&](const auto& f) { return f.name() == key; });
}

std::vector<std::string> FunctionCatalog::names() const {
  std::vector<std::string> out;
  for (const auto& f : functions_) out.push_back(f.name());
  return out;
}

double uncertainty(const SymmetricConcaveFunction& f, const DensityMatrix& rho) {
  return f(rho.diagonal_probabilities());
}

double skew_information(const DensityMatrix& rho) {
  const ComplexMatrix s = matrix_sqrt(rho);
  double acc = 0.0;
  for (int i = 0; i < rho.dim(); ++i) acc += s(i, i).real() * s(i, i).real();
  return 1.0 - acc;
}

MeasureReport u_var(const DensityMatrix& rho, VarianceSplit split) {
  MeasureReport r;
  r.measure = "var";
  double diag2 = 0.0;
  for (int i = 0; i < rho.dim(); ++i) diag2 += rho(i, i).real() * rho(i, i).real();
  r.total = 1.0 - diag2;
  if (split == VarianceSplit::skew) {
    r.decomposition = "skew";
    r.quantum = skew_information(rho);
    r.classical = r.total - r.quantum;
  } else {
    r.decomposition = "linear_entropy";
    const double purity = rho.purity();
    r.classical = 1.0 - purity;
    r.quantum = purity - diag2;
  }
  return r;
}

std::array<MeasureReport, 2> u_var_both(const DensityMatrix& rho) {
  return {u_var(rho, VarianceSplit::skew), u_var(rho, VarianceSplit::linear_entropy)};
}

MeasureReport u_entropy(const DensityMatrix& rho, double log_base) {
  const SymmetricConcaveFunction f = entropy_function(log_base);
  MeasureReport r;
  r.measure = "entropy";
  r.decomposition = "relative_entropy";
  r.log_base = log_base;
  r.total = uncertainty(f, rho);
  r.classical = von_neumann_entropy(rho, log_base);
  r.quantum = r.total - r.classical;
  return r;
}

namespace {

constexpr double kNegligibleWeight = 1e-100;

// Root fidelity sqrt F(rho, diag(x)) = || sqrt(rho) diag(sqrt x) ||_trace.
// The expression is defined for any x >= 0, which the finite differences use.
class RootFidelity {
 public:
  explicit RootFidelity(const DensityMatrix& rho) : sqrt_rho_(matrix_sqrt(rho)) {}

  double operator()(const std::vector<double>& x) const {
    work_ = sqrt_rho_;
    for (int j = 0; j < work_.cols(); ++j) {
      // Subnormal column scales derail the Jacobi sweeps.
      work_.col(j) *= x[j] > kNegligibleWeight ? std::sqrt(x[j]) : 0.0;
    }
    svd_.compute(work_);
    return svd_.singularValues().sum();
  }

 private:
  ComplexMatrix sqrt_rho_;
  mutable ComplexMatrix work_;
  mutable Eigen::JacobiSVD<ComplexMatrix> svd_;
};

struct AscentResult {
  std::vector<double> x;
  double root = 0.0;
  bool converged = false;
  int iterations = 0;
};

AscentResult multiplicative_ascent(const RootFidelity& g, std::vector<double> x,
                                   const GeometricConfig& cfg) {
  const int d = static_cast<int>(x.size());
  AscentResult out;
  double value = g(x);
  double eta = cfg.initial_step;
  std::vector<double> grad(d);
  std::vector<double> trial(d);
  int flat = 0;
  for (int it = 0; it < cfg.max_iterations; ++it) {
    out.iterations = it + 1;
    for (int i = 0; i < d; ++i) {
      const double xi = x[i];
      if (xi >= cfg.fd_step) {
        x[i] = xi + cfg.fd_step;
        const double up = g(x);
        x[i] = xi - cfg.fd_step;
        const double down = g(x);
        grad[i] = (up - down) / (2.0 * cfg.fd_step);
      } else {
        x[i] = xi + cfg.fd_step;
        grad[i] = (g(x) - value) / cfg.fd_step;
      }
      x[i] = xi;
    }
    const double gmax = *std::max_element(grad.begin(), grad.end());
    double total = 0.0;
    for (int i = 0; i < d; ++i) {
      trial[i] = x[i] * std::exp(eta * (grad[i] - gmax));
      total += trial[i];
    }
    for (double& t : trial) {
      t /= total;
      if (t < kNegligibleWeight) t = 0.0;
    }
    const double candidate = g(trial);
    if (candidate > value) {
      flat = (candidate - value <= 4 * std::numeric_limits<double>::epsilon()) ? flat + 1 : 0;
      x.swap(trial);
      value = candidate;
      eta *= cfg.step_growth;
      if (flat >= 5) {
        out.converged = true;
        break;
      }
    } else {
      eta *= cfg.step_shrink;
      if (eta < cfg.min_step) {
        out.converged = true;
        break;
      }
    }
  }
  out.x = std::move(x);
  out.root = value;
  return out;
}

}  // namespace

GeometricCoherenceResult geometric_coherence(const DensityMatrix& rho, const GeometricConfig& cfg) {
  const int d = rho.dim();
  const RootFidelity g(rho);
  const ProbabilityVector diag = rho.diagonal_probabilities();

  // Best certain state: F(rho, |i><i|) = rho_ii. Smallest index on ties.
  std::vector<double> best_x(d, 0.0);
  std::size_t best_i = 0;
  for (int i = 1; i < d; ++i) {
    if (diag[i] > diag[best_i]) best_i = i;
  }
  best_x[best_i] = 1.0;
  double best_root = g(best_x);

  GeometricCoherenceResult result;
  result.converged = true;
  const double mix = std::clamp(cfg.uniform_mix, 0.0, 1.0);
  for (int k = 0; k < std::max(cfg.restarts, 1); ++k) {
    std::vector<double> start(d);
    if (k == 0) {
      for (int i = 0; i < d; ++i) start[i] = (1.0 - mix) * diag[i] + mix / d;
    } else {
      Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(k)));
      const std::vector<double> p = random_simplex_point(d, rng);
      for (int i = 0; i < d; ++i) start[i] = (1.0 - mix) * diag[i] + mix * p[i];
    }
    AscentResult run = multiplicative_ascent(g, std::move(start), cfg);
    result.iterations += run.iterations;
    result.converged = result.converged && run.converged;
    // Strict comparison: restart order decides ties, independent of timing.
    if (run.root > best_root) {
      best_root = run.root;
      best_x = std::move(run.x);
    }
  }
  result.fidelity = std::min(best_root * best_root, 1.0);
  result.value = 1.0 - result.fidelity;
  result.sigma = ProbabilityVector(best_x);
  return result;
}

double geometric_uncertainty(const DensityMatrix& rho) { return 1.0 - rho.max_diagonal(); }

double geometric_uncertainty_by_fidelity(const DensityMatrix& rho) {
  double best = 0.0;
  for (int i = 0; i < rho.dim(); ++i) {
    best = std::max(best, fidelity(rho, DensityMatrix::certain(rho.dim(), i)));
  }
  return 1.0 - best;
}

MeasureReport u_geometric(const DensityMatrix& rho, const GeometricConfig& cfg) {
  MeasureReport r;
  r.measure = "fidelity";
  r.decomposition = "geometric";
  r.total = geometric_uncertainty(rho);
  r.quantum = geometric_coherence(rho, cfg).value;
  r.classical = r.total - r.quantum;
  return r;
}

bool majorizes(const ProbabilityVector& x, const ProbabilityVector& y, double tol) {
  if (x.size() != y.size()) throw DimensionError("majorizes: dimension mismatch");
  std::vector<double> xs(x.values().begin(), x.values().end());
  std::vector<double> ys(y.values().begin(), y.values().end());
  std::sort(xs.begin(), xs.end(), std::greater<>());
  std::sort(ys.begin(), ys.end(), std::greater<>());
  double sx = 0.0;
  double sy = 0.0;
  for (std::size_t k = 0; k < xs.size(); ++k) {
    sx += xs[k];
    sy += ys[k];
    if (sx < sy - tol) return false;
  }
  return std::abs(sx - sy) <= tol;
}

bool is_maximally_uncertain(const DensityMatrix& rho, double tol) {
  const double target = 1.0 / rho.dim();
  for (int i = 0; i < rho.dim(); ++i) {
    if (std::abs(rho(i, i).real() - target) > tol) return false;
  }
  return true;
}

}  // namespace qunc
