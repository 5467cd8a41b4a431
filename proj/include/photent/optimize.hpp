// Copyright 2026 The photent Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Objectives over interferometers and a multi-restart quasi-Newton search in
// the Hermitian-generator chart of U(M).

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Dense>
#include <nlohmann/json.hpp>

#include "photent/entangle.hpp"
#include "photent/simulate.hpp"
#include "photent/unitary.hpp"

namespace photent {

/// Pure state of the system modes, as (occupation over M_A + M_B modes, amplitude) terms.
struct TargetState {
  std::vector<std::pair<OccupationVector, Complex>> terms;
};

/// (|1010> +- |0101>)/sqrt2, (|1001> +- |0110>)/sqrt2, (|1100> +- |0011>)/sqrt2.
std::vector<TargetState> default_bell_targets();

struct BellCostOptions {
  double exponent = 10.0;
  std::vector<TargetState> targets = default_bell_targets();
};

/// f(U) = -sum_h P(h, U) sum_k |<B_k | psi(h, U)>|^exponent over the
/// normalized heralded states. Requires alice = bob = 2.
class BellCost {
 public:
  BellCost(OccupationVector input, Partition partition, BellCostOptions options = {});
  double operator()(const Interferometer& u) const;

 private:
  struct Term {
    std::size_t sector;
    Eigen::Index row;
    Eigen::Index col;
    Complex conj_amplitude;
  };
  HeraldPlan plan_;
  double exponent_;
  std::vector<std::vector<Term>> targets_;
  std::vector<std::size_t> patterns_;
};

double bell_cost(const Interferometer& u, const OccupationVector& input, const Partition& partition,
                 const BellCostOptions& options = {});

/// -average_entanglement.
double neg_avg_entanglement(const Interferometer& u, const OccupationVector& input,
                            const Partition& partition);

/// -sum_h P(h, U) w(h) E(h), with w the dual-rail subspace weight of the
/// heralded state and E the entropy of its renormalized qubit projection.
/// Requires alice = bob = 2 and herald >= 1.
class DualRailYield {
 public:
  DualRailYield(OccupationVector input, Partition partition);
  double operator()(const Interferometer& u) const;

 private:
  HeraldPlan plan_;
  std::vector<std::size_t> patterns_;
};

double dual_rail_ent_yield(const Interferometer& u, const OccupationVector& input,
                           const Partition& partition);

enum class ObjectiveKind { bell_cost, neg_avg_entanglement, dual_rail_ent_yield };

std::string to_string(ObjectiveKind kind);
ObjectiveKind objective_from_string(const std::string& name);

using Objective = std::function<double(const Interferometer&)>;

struct OptimizationProblem {
  ObjectiveKind objective = ObjectiveKind::neg_avg_entanglement;
  OccupationVector input;
  Partition partition;
  int restarts = 1;
  std::uint64_t seed = 0;
  int max_iterations = 2000;
  double gradient_step = 1e-6;
  double convergence_tol = 1e-7;
  BellCostOptions bell;
  int workers = 1;

  /// Throws InvalidDomain when restarts < 1, gradient_step <= 0 or convergence_tol <= 0.
  void validate() const;
};

Objective make_objective(const OptimizationProblem& problem);

// ---------------------------------------------------------------------------
// Generic quasi-Newton minimizer.

struct BfgsOptions {
  int max_iterations = 2000;
  double gradient_step = 1e-6;
  double convergence_tol = 1e-7;
  double armijo = 1e-4;
  double backtrack = 0.5;
  int max_backtracks = 60;
  bool record_trajectory = false;
};

enum class BfgsStatus { converged, max_iterations, line_search_failed, non_finite };

struct BfgsResult {
  std::vector<double> x;
  double value = 0.0;
  int iterations = 0;
  int evaluations = 0;
  BfgsStatus status = BfgsStatus::max_iterations;
  std::vector<double> trajectory;  // value after each accepted step, when recorded
};

using ScalarFunction = std::function<double(std::span<const double>)>;

/// Central-difference gradient with step h.
std::vector<double> numerical_gradient(const ScalarFunction& f, std::span<const double> x, double h);

/// BFGS inverse-curvature updates with Armijo backtracking. Stops when the
/// gradient max-norm drops below convergence_tol, after max_iterations, or
/// when no step along the search direction decreases f.
BfgsResult bfgs_minimize(const ScalarFunction& f, std::vector<double> x0, const BfgsOptions& options);

// ---------------------------------------------------------------------------

struct OptimizationResult {
  double best_value = 0.0;
  std::optional<std::size_t> best_restart;
  UnitaryParams best_params;
  std::vector<double> per_restart_values;  // NaN for failed restarts
  std::vector<int> iterations_used;
  std::vector<bool> failed;
};

/// Starting point of restart `index`: Haar sample seeded by derive_seed(seed, index)
/// mapped to its Hermitian generator.
UnitaryParams restart_start(int modes, std::uint64_t seed, std::size_t index);

OptimizationResult minimize(const OptimizationProblem& problem);

/// Same driver over an arbitrary objective on M-mode interferometers.
OptimizationResult minimize(const Objective& objective, int modes, int restarts, std::uint64_t seed,
                            const BfgsOptions& options, int workers);

/// {"best_value", "per_restart_values", "params", "seed", "config_digest", ...}
nlohmann::json to_json(const OptimizationResult& result, std::uint64_t seed,
                       const std::string& config_digest);

struct HistogramBin {
  double value;  // bin centre
  std::size_t count;
};

/// `bins` equal-width bins spanning [lo, hi]; values outside are clamped.
std::vector<HistogramBin> histogram(std::span<const double> values, int bins, double lo, double hi);

}  // namespace photent
